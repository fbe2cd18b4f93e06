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

#include <cstddef>
#include <functional>
#include <span>

namespace cvdisc::quad {

/// Fills f[i] = integrand(x[i]) for a batch of abscissae.
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> f)>;

struct Options {
    double abs_tol = 1e-10;
    std::size_t max_evals = 500000;
    /// Each breakpoint interval is first cut into this many equal panels.
    std::size_t initial_panels = 4;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;  // sum of |K15 - G7| over the final panels
    std::size_t n_evals = 0;
    bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature over [breakpoints.front(),
/// breakpoints.back()], never placing a panel across an interior breakpoint.
Result integrate(const BatchIntegrand& f, std::span<const double> breakpoints, const Options& opts = {});

/// Fixed 15-point Kronrod nodes mapped to [lo, hi] (useful for batched callers).
void kronrod_nodes(double lo, double hi, std::span<double, 15> x, std::span<double, 15> w);

}  // namespace cvdisc::quad
