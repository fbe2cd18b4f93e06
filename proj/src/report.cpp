// Copyright 2026 The cvdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvdisc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <sstream>

#include "cvdisc/error.hpp"

namespace cvdisc::report {

using ojson = nlohmann::ordered_json;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    return std::stod(format_number(x));
}

namespace {

ojson rounded(const std::vector<double>& xs) {
    ojson arr = ojson::array();
    for (double x : xs) arr.push_back(round12(x));
    return arr;
}

ojson params_object(const ReceiverSpec& spec, const std::vector<double>& params) {
    ojson o = ojson::object();
    switch (spec.family) {
        case Family::homodyne:
        case Family::legendre: break;
        case Family::laguerre: o["nu"] = round12(*spec.nu); break;
        case Family::pacs: o["n_add"] = *spec.n_add; break;
        case Family::cpg: o["gamma"] = round12(*spec.gamma); break;
        case Family::rotation_homodyne: {
            const RotationParams& r = *spec.rotation;
            o["rotation_state"] = to_string(r.kind);
            if (r.kind == RotationKind::fock) {
                o["fock_set"] = r.fock_set;
                o["theta"] = rounded(params.empty() ? r.thetas : params);
            } else {
                o["beta"] = rounded(params.empty() ? r.betas : params);
                o["theta"] = rounded(r.thetas);
            }
            break;
        }
    }
    return o;
}

ojson spec_object(const ReceiverSpec& spec) {
    ojson o;
    o["receiver"] = spec.name();
    o["params"] = params_object(spec, params_of(spec));
    return o;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw Error(ErrorKind::validation, "csv: unterminated quote");
    cells.push_back(cur);
    return cells;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double x = std::stod(s, &used);
        if (used != s.size()) throw Error(ErrorKind::validation, "csv: bad number '" + s + "'");
        return x;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::validation, "csv: bad number '" + s + "'");
    }
}

}  // namespace

std::string param_json(const ReceiverSpec& spec, const std::vector<double>& params) {
    return params_object(spec, params).dump();
}

std::string flag_of(const CurvePoint& p) {
    if (p.accuracy_warning && p.no_improvement) return "accuracy_warning;no_improvement";
    if (p.accuracy_warning) return "accuracy_warning";
    if (p.no_improvement) return "no_improvement";
    return "";
}

std::string curve_csv(const ErrorCurve& curve) {
    std::string out = std::string(kCurveHeader) + "\n";
    const std::string name = curve.receiver.name();
    for (const CurvePoint& p : curve.points) {
        out += format_number(p.alpha_sq) + "," + name + "," + csv_quote(param_json(curve.receiver, p.params)) + "," +
               format_number(p.pe) + "," + format_number(p.pe_helstrom) + "," + format_number(p.pe_gaussian) + "," +
               format_number(p.pe_kennedy) + "," + format_number(p.est_abs_error) + "," + flag_of(p) + "\n";
    }
    return out;
}

std::string curve_json(const ErrorCurve& curve) {
    ojson doc = spec_object(curve.receiver);
    doc["points"] = ojson::array();
    for (const CurvePoint& p : curve.points) {
        ojson row;
        row["alpha_sq"] = round12(p.alpha_sq);
        row["pe"] = round12(p.pe);
        row["params"] = params_object(curve.receiver, p.params);
        row["pe_helstrom"] = round12(p.pe_helstrom);
        row["pe_gaussian"] = round12(p.pe_gaussian);
        row["pe_kennedy"] = round12(p.pe_kennedy);
        row["est_abs_error"] = round12(p.est_abs_error);
        row["flag"] = flag_of(p);
        doc["points"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string scaling_csv(const ScalingRun& run) {
    std::string out = "alpha_sq,beta,pe\n";
    for (std::size_t i = 0; i < run.alpha_sq.size(); ++i) {
        out += format_number(run.alpha_sq[i]) + "," + format_number(run.beta[i]) + "," + format_number(run.pe[i]) + "\n";
    }
    return out;
}

std::string scaling_json(RotationKind kind, const ScalingRun& run) {
    ojson doc;
    doc["receiver"] = to_string(kind) + "_rotation";
    ojson fit;
    fit["slope"] = round12(run.fit.slope);
    fit["intercept"] = round12(run.fit.intercept);
    fit["rms_residual"] = round12(run.fit.rms_residual);
    doc["fit"] = fit;
    doc["alpha_sq"] = rounded(run.alpha_sq);
    doc["beta"] = rounded(run.beta);
    doc["pe"] = rounded(run.pe);
    return doc.dump(2) + "\n";
}

std::vector<CsvRow> parse_curve_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCurveHeader) throw Error(ErrorKind::validation, "csv: unexpected header");
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 9) throw Error(ErrorKind::validation, "csv: expected 9 columns");
        CsvRow r;
        r.alpha_sq = parse_double(cells[0]);
        r.receiver = cells[1];
        r.param_json = cells[2];
        r.pe = parse_double(cells[3]);
        r.pe_helstrom = parse_double(cells[4]);
        r.pe_gaussian = parse_double(cells[5]);
        r.pe_kennedy = parse_double(cells[6]);
        r.est_abs_error = parse_double(cells[7]);
        r.flag = cells[8];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string compare_csv(const std::vector<std::vector<CsvRow>>& inputs) {
    if (inputs.empty()) throw Error(ErrorKind::validation, "compare: no inputs");
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (const auto& rows : inputs) {
        std::string name = rows.empty() ? "empty" : rows.front().receiver;
        const int count = seen[name]++;
        if (count > 0) name += "_" + std::to_string(count + 1);
        names.push_back(name);
    }
    struct Joined {
        std::vector<const CsvRow*> cells;
    };
    std::map<std::string, Joined> by_alpha;
    std::map<std::string, double> key_value;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (const CsvRow& r : inputs[i]) {
            const std::string key = format_number(r.alpha_sq);
            auto& j = by_alpha[key];
            j.cells.resize(inputs.size(), nullptr);
            j.cells[i] = &r;
            key_value[key] = r.alpha_sq;
        }
    }
    std::vector<std::pair<double, std::string>> order;
    for (const auto& [key, value] : key_value) order.emplace_back(value, key);
    std::sort(order.begin(), order.end());

    std::string out = "alpha_sq";
    for (const auto& n : names) out += ",pe_" + n;
    out += ",pe_helstrom,pe_gaussian,pe_kennedy\n";
    for (const auto& [value, key] : order) {
        const Joined& j = by_alpha.at(key);
        out += key;
        const CsvRow* any = nullptr;
        for (const CsvRow* c : j.cells) {
            out += ",";
            if (c != nullptr) {
                out += format_number(c->pe);
                if (any == nullptr) any = c;
            }
        }
        out += "," + format_number(any->pe_helstrom) + "," + format_number(any->pe_gaussian) + "," +
               format_number(any->pe_kennedy) + "\n";
    }
    return out;
}

}  // namespace cvdisc::report
