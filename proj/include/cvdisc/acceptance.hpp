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

#pragma once

// Acceptance suites: each checks one reproduction criterion end to end and
// reports pass/fail with a short numeric summary.

#include <ostream>
#include <string>
#include <vector>

namespace cvdisc::acceptance {

struct Options {
    /// Multiplies every numeric tolerance and acceptance window.
    double tolerance_scale = 1.0;
    /// Run only this suite (empty: all).
    std::string only;
    /// alpha_sq spacing of the scaling-fit grid.
    double fit_step = 0.01;
    /// Directory for CSV/JSON artifacts (empty: none written).
    std::string out_dir;
};

struct CriterionResult {
    int id = 0;
    std::string suite;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Suite names in criterion order (criterion k is entry k - 1).
const std::vector<std::string>& suite_names();

/// Runs the selected suites, printing one line per criterion to `log` as
/// it completes. Throws a validation error for an unknown suite name.
std::vector<CriterionResult> run(const Options& opts, std::ostream& log);

}  // namespace cvdisc::acceptance
