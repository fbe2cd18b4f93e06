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

#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cvdisc/error.hpp"

using namespace cvdisc;

namespace {

ErrorCurve sample_curve() {
    ErrorCurve c{ReceiverSpec::cat_rotation(1.0, std::numbers::pi), {}};
    for (double a2 : {0.1, 0.2}) {
        CurvePoint p;
        p.alpha_sq = a2;
        p.pe = 0.1 / 3.0 + a2;
        p.params = {1.0 / 7.0};
        p.pe_helstrom = helstrom_bpsk(std::sqrt(a2));
        p.pe_gaussian = gaussian_limit(std::sqrt(a2));
        p.pe_kennedy = kennedy_error(std::sqrt(a2));
        p.est_abs_error = 1e-11;
        c.points.push_back(p);
    }
    c.points[1].accuracy_warning = true;
    return c;
}

}  // namespace

TEST(report, twelve_significant_digits) {
    EXPECT_EQ(report::format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(report::format_number(0.5), "0.5");
    EXPECT_EQ(report::format_number(1.23456789012345e-9), "1.23456789012e-09");
    EXPECT_EQ(report::round12(2.0 / 3.0), 0.666666666667);
}

TEST(report, curve_csv_layout) {
    const std::string csv = report::curve_csv(sample_curve());
    const auto header_end = csv.find('\n');
    EXPECT_EQ(csv.substr(0, header_end), report::kCurveHeader);
    EXPECT_NE(csv.find("0.1,cat_rotation,"), std::string::npos);
    EXPECT_NE(csv.find(",accuracy_warning\n"), std::string::npos);
}

TEST(report, csv_round_trip) {
    const ErrorCurve c = sample_curve();
    const auto rows = report::parse_curve_csv(report::curve_csv(c));
    ASSERT_EQ(rows.size(), 2u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].alpha_sq, c.points[i].alpha_sq);
        EXPECT_EQ(rows[i].receiver, "cat_rotation");
        EXPECT_EQ(rows[i].pe, report::round12(c.points[i].pe));
        EXPECT_EQ(rows[i].pe_kennedy, report::round12(c.points[i].pe_kennedy));
        const auto params = nlohmann::json::parse(rows[i].param_json);
        EXPECT_EQ(params["beta"][0].get<double>(), report::round12(1.0 / 7.0));
    }
    EXPECT_EQ(rows[0].flag, "");
    EXPECT_EQ(rows[1].flag, "accuracy_warning");
}

TEST(report, json_round_trips_at_twelve_digits) {
    const ErrorCurve c = sample_curve();
    const auto doc = nlohmann::json::parse(report::curve_json(c));
    ASSERT_EQ(doc["points"].size(), 2u);
    const double pe = doc["points"][0]["pe"].get<double>();
    EXPECT_EQ(pe, report::round12(c.points[0].pe));
    EXPECT_EQ(report::format_number(pe), report::format_number(c.points[0].pe));
}

TEST(report, rejects_foreign_csv) {
    EXPECT_THROW(report::parse_curve_csv("a,b,c\n1,2,3\n"), Error);
}

TEST(report, compare_joins_on_alpha_sq) {
    const auto a = report::parse_curve_csv(report::curve_csv(sample_curve()));
    ErrorCurve other{ReceiverSpec::homodyne(), {}};
    CurvePoint p;
    p.alpha_sq = 0.2;
    p.pe = 0.25;
    other.points.push_back(p);
    p.alpha_sq = 0.3;
    p.pe = 0.125;
    other.points.push_back(p);
    const auto b = report::parse_curve_csv(report::curve_csv(other));
    const std::string joined = report::compare_csv({a, b, a});
    std::istringstream in(joined);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "alpha_sq,pe_cat_rotation,pe_homodyne,pe_cat_rotation_2,pe_helstrom,pe_gaussian,pe_kennedy");
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0].substr(0, 4), "0.1,");
    EXPECT_NE(lines[1].find(",0.25,"), std::string::npos);
    EXPECT_EQ(lines[2].substr(0, 7), "0.3,,0.");
}

TEST(report, scaling_outputs) {
    ScalingRun run;
    run.alpha_sq = {0.1, 0.2};
    run.beta = {1.1, 1.2};
    run.pe = {0.3, 0.2};
    run.fit = {1.0, 1.0, 0.0};
    EXPECT_EQ(report::scaling_csv(run), "alpha_sq,beta,pe\n0.1,1.1,0.3\n0.2,1.2,0.2\n");
    const auto doc = nlohmann::json::parse(report::scaling_json(RotationKind::coherent, run));
    EXPECT_EQ(doc["receiver"], "coherent_rotation");
    EXPECT_EQ(doc["fit"]["slope"].get<double>(), 1.0);
}
