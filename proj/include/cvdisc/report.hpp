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

// CSV/JSON serialization of error curves, fits and comparisons. Every number
// is written with 12 significant digits so artifacts are byte-reproducible.

#include <string>
#include <vector>

#include "cvdisc/optimize.hpp"

namespace cvdisc::report {

inline constexpr const char* kCurveHeader =
    "alpha_sq,receiver,param_json,pe,pe_helstrom,pe_gaussian,pe_kennedy,est_abs_error,flag";

/// %.12g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);
/// x rounded to 12 significant digits.
double round12(double x);

/// Compact JSON object with the receiver's parameters, e.g.
/// {"beta":1.36,"theta":3.14159265359}.
std::string param_json(const ReceiverSpec& spec, const std::vector<double>& params);

std::string flag_of(const CurvePoint& p);

std::string curve_csv(const ErrorCurve& curve);
std::string curve_json(const ErrorCurve& curve);

std::string scaling_csv(const ScalingRun& run);
std::string scaling_json(RotationKind kind, const ScalingRun& run);

struct CsvRow {
    double alpha_sq = 0.0;
    std::string receiver;
    std::string param_json;
    double pe = 0.0, pe_helstrom = 0.0, pe_gaussian = 0.0, pe_kennedy = 0.0, est_abs_error = 0.0;
    std::string flag;
};

/// Parses a file produced by curve_csv; throws a validation error otherwise.
std::vector<CsvRow> parse_curve_csv(const std::string& text);

/// Wide table joined on alpha_sq: alpha_sq, one pe column per input, then the
/// benchmark columns. Rows missing from an input are left empty.
std::string compare_csv(const std::vector<std::vector<CsvRow>>& inputs);

}  // namespace cvdisc::report
