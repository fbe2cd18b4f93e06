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

// Error probabilities: the total-variation engine for arbitrary density pairs
// and the closed-form BPSK benchmarks.

#include <cstddef>
#include <vector>

#include "cvdisc/receivers.hpp"

namespace cvdisc {

struct QuadratureReport {
    double value = 0.5;  // P_E
    double est_abs_error = 0.0;
    std::size_t n_evals = 0;
    /// Sign changes of rho_1 - rho_2 (the v = 0 line for the plane).
    std::vector<double> kinks;
    bool accuracy_warning = false;
};

struct TvOptions {
    /// Target absolute error on P_E for one-dimensional domains.
    double abs_tol = 1e-8;
    /// Target absolute error on P_E over the plane.
    double plane_tol = 1e-6;
    /// Initial uniform sign-change probes per line.
    std::size_t probes = 2048;
    /// Probe count ceiling for the doubling rule.
    std::size_t max_probes = 1u << 16;
    /// Bisection tolerance on kink locations.
    double kink_tol = 1e-12;
    std::size_t max_evals = 2000000;
};

/// P_E = 1/2 - 1/4 integral |rho_1 - rho_2|.
QuadratureReport error_rate_tv(const DensityPair& pair, const TvOptions& opts = {});

/// Convenience: build_density followed by error_rate_tv.
QuadratureReport error_rate(const ReceiverSpec& spec, double alpha, const TvOptions& opts = {});

/// Sign changes of rho_1 - rho_2 on [lo, hi] at fixed v (ignored off the plane).
std::vector<double> locate_kinks(const DensityPair& pair, double lo, double hi, double v, const TvOptions& opts,
                                 std::size_t* n_evals = nullptr);

double helstrom_bpsk(double alpha);
double gaussian_limit(double alpha);
double kennedy_error(double alpha);
double helstrom_pure(double overlap_sq);

}  // namespace cvdisc
