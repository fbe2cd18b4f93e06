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

#include "cvdisc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>

#include "cvdisc/acceptance.hpp"
#include "cvdisc/discrim.hpp"
#include "cvdisc/error.hpp"
#include "cvdisc/optimize.hpp"
#include "cvdisc/report.hpp"
#include "cvdisc/stellar.hpp"

namespace cvdisc::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReceiverFlags {
    std::string receiver;
    std::string rotation_state;
    std::string fock_set;
    std::string theta;
    std::optional<double> beta;
    std::optional<double> nu;
    std::optional<int> n_add;
    std::optional<double> gamma;
};

struct GridFlags {
    std::optional<double> min, max, step;
};

struct OutputFlags {
    std::string out;
    std::string format = "csv";
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::validation, msg); }

double parse_angle(const std::string& token) {
    // "pi", "-pi/2", "3pi/4", "0.5*pi" or a plain number of radians.
    static const std::regex pi_form(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi(?:\s*/\s*(\d+\.?\d*))?$)");
    std::smatch m;
    if (std::regex_match(token, m, pi_form)) {
        const double sign = m[1].str() == "-" ? -1.0 : 1.0;
        const double coeff = m[2].matched ? std::stod(m[2].str()) : 1.0;
        const double denom = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (denom == 0.0) invalid("angle '" + token + "' divides by zero");
        return sign * coeff * std::numbers::pi / denom;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument(token);
        return v;
    } catch (const std::logic_error&) {
        invalid("cannot parse angle '" + token + "'");
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        parts.push_back(item);
    }
    return parts;
}

std::vector<double> parse_angles(const std::string& text) {
    std::vector<double> out;
    for (const auto& t : split_commas(text)) out.push_back(parse_angle(t));
    if (out.empty()) invalid("--theta needs at least one angle");
    return out;
}

std::vector<unsigned> parse_fock_set(const std::string& text) {
    std::vector<unsigned> out;
    for (const auto& t : split_commas(text)) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
            invalid("--fock-set entries must be non-negative integers, got '" + t + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(t)));
    }
    if (out.empty()) invalid("--fock-set needs at least one photon number");
    return out;
}

ReceiverSpec build_receiver(const ReceiverFlags& f, bool optimizing) {
    if (f.receiver.empty()) invalid("--receiver is required");
    std::string family = f.receiver;
    std::string state = f.rotation_state;
    for (const char* kind : {"cat", "coherent", "fock"}) {
        if (family == std::string(kind) + "_rotation") {
            if (!state.empty() && state != kind) invalid("--rotation-state " + state + " conflicts with --receiver " + family);
            family = "rotation_homodyne";
            state = kind;
        }
    }
    auto reject = [&](bool given, const char* flag) {
        if (given) invalid(std::string("flag ") + flag + " does not apply to receiver " + f.receiver);
    };
    const bool rotation = family == "rotation_homodyne";
    reject(!rotation && !state.empty(), "--rotation-state");
    reject(!rotation && !f.theta.empty(), "--theta");
    reject(!rotation && f.beta.has_value(), "--beta");
    reject(!rotation && !f.fock_set.empty(), "--fock-set");
    reject(family != "laguerre" && f.nu.has_value(), "--nu");
    reject(family != "pacs" && f.n_add.has_value(), "--n-add");
    reject(family != "cpg" && f.gamma.has_value(), "--gamma");

    ReceiverSpec spec;
    if (family == "homodyne") {
        spec = ReceiverSpec::homodyne();
    } else if (family == "heterodyne") {
        spec = ReceiverSpec::heterodyne();
    } else if (family == "legendre") {
        spec = ReceiverSpec::legendre();
    } else if (family == "laguerre") {
        if (!f.nu) invalid("receiver laguerre requires --nu");
        spec = ReceiverSpec::laguerre(*f.nu);
    } else if (family == "pacs") {
        if (!f.n_add) invalid("receiver pacs requires --n-add");
        if (*f.n_add < 0) invalid("--n-add must be >= 0");
        spec = ReceiverSpec::pacs(static_cast<unsigned>(*f.n_add));
    } else if (family == "cpg") {
        if (!f.gamma) invalid("receiver cpg requires --gamma");
        spec = ReceiverSpec::cpg(*f.gamma);
    } else if (rotation) {
        if (state.empty()) invalid("receiver rotation_homodyne requires --rotation-state");
        RotationParams params;
        if (state == "fock") {
            reject(f.beta.has_value(), "--beta");
            if (f.fock_set.empty()) invalid("fock rotations require --fock-set");
            params.kind = RotationKind::fock;
            params.fock_set = parse_fock_set(f.fock_set);
            params.thetas = f.theta.empty() ? std::vector<double>(params.fock_set.size(), std::numbers::pi)
                                            : parse_angles(f.theta);
        } else if (state == "cat" || state == "coherent") {
            reject(!f.fock_set.empty(), "--fock-set");
            params.kind = state == "cat" ? RotationKind::cat : RotationKind::coherent;
            if (!f.beta && !optimizing) invalid("receiver " + state + "_rotation requires --beta (or --optimize)");
            params.betas = {f.beta.value_or(1.0)};
            params.thetas = f.theta.empty() ? std::vector<double>{std::numbers::pi} : parse_angles(f.theta);
        } else {
            invalid("--rotation-state must be cat, coherent or fock");
        }
        spec = ReceiverSpec::rotated(std::move(params));
    } else {
        invalid("unknown receiver '" + f.receiver + "'");
    }
    spec.validate();
    return spec;
}

std::vector<double> build_grid(const GridFlags& g, std::optional<double> def_min = std::nullopt,
                               std::optional<double> def_max = std::nullopt,
                               std::optional<double> def_step = std::nullopt) {
    const auto lo = g.min ? g.min : def_min;
    const auto hi = g.max ? g.max : def_max;
    const auto step = g.step ? g.step : def_step;
    if (!lo || !hi || !step) invalid("--alpha-sq-min, --alpha-sq-max and --alpha-sq-step are required");
    if (!(*lo > 0.0)) invalid("--alpha-sq-min must be > 0");
    return make_grid(*lo, *hi, *step);
}

void emit(const OutputFlags& o, const std::string& content, std::ostream& out) {
    if (o.out.empty() || o.out == "-") {
        out << content;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    f << content;
    f.close();
    if (!f) throw IoError("cannot write " + o.out);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void add_receiver_options(CLI::App* sub, ReceiverFlags& f) {
    sub->add_option("--receiver", f.receiver,
                    "homodyne | heterodyne | rotation_homodyne | cat_rotation | coherent_rotation | fock_rotation | "
                    "legendre | laguerre | pacs | cpg");
    sub->add_option("--rotation-state", f.rotation_state, "cat | coherent | fock");
    sub->add_option("--fock-set", f.fock_set, "comma-separated photon numbers");
    sub->add_option("--beta", f.beta, "rotation amplitude");
    sub->add_option("--theta", f.theta, "comma-separated angles; 'pi', 'pi/2', '3pi/4' accepted");
    sub->add_option("--nu", f.nu, "Laguerre order (> -1)");
    sub->add_option("--n-add", f.n_add, "photons added (PACS)");
    sub->add_option("--gamma", f.gamma, "cubicity (non-zero)");
}

void add_grid_options(CLI::App* sub, GridFlags& g) {
    sub->add_option("--alpha-sq-min", g.min, "first |alpha|^2");
    sub->add_option("--alpha-sq-max", g.max, "last |alpha|^2");
    sub->add_option("--alpha-sq-step", g.step, "|alpha|^2 spacing");
}

void add_output_options(CLI::App* sub, OutputFlags& o) {
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

// key=value lines become flags placed before the user's own arguments;
// flags given on the command line win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) invalid("--config needs a path");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<std::string> extra;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) invalid("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        const std::string flag = "--" + key;
        const bool overridden = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (overridden) continue;
        if (key == "optimize") {
            if (value == "true" || value == "1") extra.push_back(flag);
            else if (value != "false" && value != "0") invalid("config: optimize must be true or false");
            continue;
        }
        extra.push_back(flag);
        extra.push_back(value);
    }
    // Insert after the subcommand name.
    auto pos = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
    if (pos != args.end()) ++pos;
    args.insert(pos, extra.begin(), extra.end());
    return args;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::validation:
        case ErrorKind::domain:
        case ErrorKind::degenerate_parameter:
        case ErrorKind::shape:
        case ErrorKind::rank: return 2;
        default: return 3;
    }
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BPSK coherent-state discrimination: receivers, benchmarks and optimization", "cvdisc"};
    app.require_subcommand(1);

    ReceiverFlags rf;
    GridFlags gf;
    OutputFlags of;
    bool optimize = false;
    std::vector<std::string> inputs;
    acceptance::Options vopts;
    std::optional<double> tolerance_scale;

    auto* sweep = app.add_subcommand("sweep", "error probability over an |alpha|^2 grid");
    add_receiver_options(sweep, rf);
    add_grid_options(sweep, gf);
    add_output_options(sweep, of);
    sweep->add_flag("--optimize", optimize, "optimize rotation parameters per point");

    auto* optb = app.add_subcommand("optimize-beta", "optimal rotation amplitude (theta = pi) per grid point");
    add_receiver_options(optb, rf);
    add_grid_options(optb, gf);
    add_output_options(optb, of);

    auto* fit = app.add_subcommand("fit-scaling", "optimal beta versus |alpha|^2 and its linear fit");
    add_receiver_options(fit, rf);
    add_grid_options(fit, gf);
    add_output_options(fit, of);

    auto* cmp = app.add_subcommand("compare", "join sweep CSV files on alpha_sq");
    cmp->add_option("--in", inputs, "sweep CSV file (repeatable)")->required();
    cmp->add_option("--out", of.out, "output path (default: stdout)");

    auto* tab = app.add_subcommand("table1", "measurement-scheme metadata as JSON");
    tab->add_option("--out", of.out, "output path (default: stdout)");

    auto* ver = app.add_subcommand("verify", "run the acceptance suites");
    ver->add_option("--only", vopts.only, "run a single suite");
    ver->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance");
    ver->add_option("--alpha-sq-step", gf.step, "grid spacing of the scaling-fit suite");
    ver->add_option("--out", vopts.out_dir, "directory for CSV/JSON artifacts");

    try {
        std::vector<std::string> args = apply_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (sweep->parsed()) {
            const ReceiverSpec spec = build_receiver(rf, optimize);
            const auto grid = build_grid(gf);
            const ErrorCurve curve = sweep_error_curve(spec, grid, optimize);
            emit(of, of.format == "json" ? report::curve_json(curve) : report::curve_csv(curve), out);
            for (const auto& p : curve.points) {
                if (p.accuracy_warning) err << "warning: accuracy target missed at alpha_sq=" << p.alpha_sq << "\n";
            }
            return 0;
        }
        if (optb->parsed() || fit->parsed()) {
            const ReceiverSpec spec = build_receiver(rf, true);
            if (!spec.rotation || spec.rotation->kind == RotationKind::fock) {
                invalid("only cat_rotation and coherent_rotation have an amplitude to optimize");
            }
            if (optb->parsed()) {
                const ErrorCurve curve = sweep_error_curve(spec, build_grid(gf), true);
                emit(of, of.format == "json" ? report::curve_json(curve) : report::curve_csv(curve), out);
                return 0;
            }
            const auto grid = build_grid(gf, 0.01, 3.0, 0.01);
            const ScalingRun run = fit_beta_scaling(spec.rotation->kind, grid);
            if (of.format == "json") {
                emit(of, report::scaling_json(spec.rotation->kind, run), out);
            } else {
                emit(of, report::scaling_csv(run), out);
                char buf[160];
                std::snprintf(buf, sizeof buf, "{\"slope\":%s,\"intercept\":%s,\"rms_residual\":%s}\n",
                              report::format_number(run.fit.slope).c_str(),
                              report::format_number(run.fit.intercept).c_str(),
                              report::format_number(run.fit.rms_residual).c_str());
                (of.out.empty() ? out : err) << buf;
            }
            return 0;
        }
        if (cmp->parsed()) {
            std::vector<std::vector<report::CsvRow>> tables;
            for (const auto& path : inputs) tables.push_back(report::parse_curve_csv(read_file(path)));
            emit(of, report::compare_csv(tables), out);
            return 0;
        }
        if (tab->parsed()) {
            emit(of, table1_json(), out);
            return 0;
        }
        if (ver->parsed()) {
            if (tolerance_scale) vopts.tolerance_scale = *tolerance_scale;
            if (gf.step) vopts.fit_step = *gf.step;
            const auto results = acceptance::run(vopts, out);
            const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
            out << passed << "/" << results.size() << " criteria passed\n";
            return passed == static_cast<long>(results.size()) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace cvdisc::cli
