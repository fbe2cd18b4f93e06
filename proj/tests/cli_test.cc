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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cvdisc/report.hpp"

using namespace cvdisc;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "cvdisc_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli, homodyne_sweep_matches_gaussian_limit) {
    const Outcome o = run({"sweep", "--receiver", "homodyne", "--alpha-sq-min", "0.1", "--alpha-sq-max", "1.0",
                           "--alpha-sq-step", "0.1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = report::parse_curve_csv(o.out);
    ASSERT_EQ(rows.size(), 10u);
    for (const auto& r : rows) EXPECT_NEAR(r.pe, r.pe_gaussian, 1e-7);
    EXPECT_EQ(rows[6].alpha_sq, 0.7);
}

TEST(cli, sweep_is_bit_identical_across_runs) {
    const std::vector<std::string> args{"sweep", "--receiver", "cat_rotation", "--beta", "1.0", "--theta", "pi",
                                        "--alpha-sq-min", "0.2", "--alpha-sq-max", "0.6", "--alpha-sq-step", "0.2"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(cli, json_format) {
    const Outcome o = run({"sweep", "--receiver", "pacs", "--n-add", "1", "--alpha-sq-min", "0.5", "--alpha-sq-max",
                           "1.0", "--alpha-sq-step", "0.5", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto doc = nlohmann::json::parse(o.out);
    ASSERT_EQ(doc["points"].size(), 2u);
    EXPECT_EQ(doc["points"][0]["params"]["n_add"], 1);
}

TEST(cli, validation_failures_exit_two) {
    EXPECT_EQ(run({"sweep", "--receiver", "homodyne", "--alpha-sq-min", "0.5", "--alpha-sq-max", "0.5",
                   "--alpha-sq-step", "0.1"})
                  .code,
              2);
    EXPECT_EQ(run({"sweep", "--receiver", "homodyne", "--alpha-sq-min", "0.1", "--alpha-sq-max", "0.5",
                   "--alpha-sq-step", "0"})
                  .code,
              2);
    EXPECT_EQ(run({"sweep", "--receiver", "homodyne", "--gamma", "0.3", "--alpha-sq-min", "0.1", "--alpha-sq-max",
                   "0.5", "--alpha-sq-step", "0.1"})
                  .code,
              2);
    EXPECT_EQ(run({"sweep", "--receiver", "cpg", "--gamma", "0", "--alpha-sq-min", "0.1", "--alpha-sq-max", "0.5",
                   "--alpha-sq-step", "0.1"})
                  .code,
              2);
    EXPECT_EQ(run({"sweep", "--receiver", "laguerre", "--nu", "-1", "--alpha-sq-min", "0.1", "--alpha-sq-max", "0.5",
                   "--alpha-sq-step", "0.1"})
                  .code,
              2);
    EXPECT_EQ(run({"sweep", "--receiver", "nonsense"}).code, 2);
    EXPECT_EQ(run({"sweep", "--bogus"}).code, 2);
    EXPECT_EQ(run({"fit-scaling", "--receiver", "coherent_rotation", "--alpha-sq-step", "0"}).code, 2);
    EXPECT_EQ(run({"optimize-beta", "--receiver", "homodyne", "--alpha-sq-min", "0.1", "--alpha-sq-max", "0.5",
                   "--alpha-sq-step", "0.1"})
                  .code,
              2);
    const Outcome o = run({"verify", "--only", "no_such_suite"});
    EXPECT_EQ(o.code, 2);
    EXPECT_FALSE(o.err.empty());
}

TEST(cli, help_exits_zero) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"sweep", "--help"}).code, 0);
}

TEST(cli, missing_file_exits_three) {
    EXPECT_EQ(run({"compare", "--in", "/nonexistent/dir/file.csv"}).code, 3);
    EXPECT_EQ(run({"table1", "--out", "/nonexistent/dir/out.json"}).code, 3);
}

TEST(cli, config_file_and_precedence) {
    const auto cfg = temp_file("sweep.cfg",
                               "# homodyne sweep\nreceiver = homodyne\nalpha-sq-min=0.1\nalpha-sq-max=0.3\n"
                               "alpha-sq-step=0.1\n");
    const Outcome a = run({"sweep", "--config", cfg.string()});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(report::parse_curve_csv(a.out).size(), 3u);

    const Outcome b = run({"sweep", "--config", cfg.string(), "--alpha-sq-max", "0.5"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(report::parse_curve_csv(b.out).size(), 5u);

    const auto bad = temp_file("bad.cfg", "receiver homodyne\n");
    EXPECT_EQ(run({"sweep", "--config", bad.string()}).code, 2);
}

TEST(cli, optimize_beta_curve) {
    const Outcome o = run({"optimize-beta", "--receiver", "coherent_rotation", "--alpha-sq-min", "0.9",
                           "--alpha-sq-max", "1.0", "--alpha-sq-step", "0.1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = report::parse_curve_csv(o.out);
    ASSERT_EQ(rows.size(), 2u);
    const auto params = nlohmann::json::parse(rows[1].param_json);
    EXPECT_NEAR(params["beta"][0].get<double>(), 1.366, 0.15);
    for (const auto& r : rows) EXPECT_LT(r.pe, r.pe_gaussian);
}

TEST(cli, compare_merges_files) {
    const Outcome a = run({"sweep", "--receiver", "homodyne", "--alpha-sq-min", "0.1", "--alpha-sq-max", "0.3",
                           "--alpha-sq-step", "0.1"});
    const Outcome b = run({"sweep", "--receiver", "legendre", "--alpha-sq-min", "0.2", "--alpha-sq-max", "0.4",
                           "--alpha-sq-step", "0.1"});
    const auto fa = temp_file("a.csv", a.out);
    const auto fb = temp_file("b.csv", b.out);
    const Outcome c = run({"compare", "--in", fa.string(), "--in", fb.string()});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "alpha_sq,pe_homodyne,pe_legendre,pe_helstrom,pe_gaussian,pe_kennedy");
    EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 5);
}

TEST(cli, table1) {
    const Outcome o = run({"table1"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(nlohmann::json::parse(o.out)["rows"].size(), 9u);
}

TEST(cli, verify_single_suite) {
    const Outcome ok = run({"verify", "--only", "stellar"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("[PASS]"), std::string::npos);

    const Outcome tight = run({"verify", "--only", "closed_form", "--tolerance-scale", "1e-30"});
    EXPECT_EQ(tight.code, 1) << tight.out;
    EXPECT_NE(tight.out.find("[FAIL]"), std::string::npos);
}

TEST(cli, angle_forms) {
    const std::vector<std::string> base{"sweep", "--receiver", "fock_rotation", "--fock-set", "1", "--alpha-sq-min",
                                        "0.5", "--alpha-sq-max", "1.0", "--alpha-sq-step", "0.5", "--theta"};
    auto with = [&](const std::string& theta) {
        auto args = base;
        args.push_back(theta);
        return run(args);
    };
    const Outcome pi = with("pi");
    const Outcome num = with("3.14159265358979");
    ASSERT_EQ(pi.code, 0) << pi.err;
    ASSERT_EQ(num.code, 0) << num.err;
    EXPECT_NEAR(report::parse_curve_csv(pi.out)[1].pe, report::parse_curve_csv(num.out)[1].pe, 1e-12);
    EXPECT_EQ(with("3pi/4").code, 0);
    EXPECT_EQ(with("pie").code, 2);
}
