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

// Receiver parameter optimization, error-curve sweeps and least-squares fits.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvdisc/discrim.hpp"
#include "cvdisc/receivers.hpp"

namespace cvdisc {

struct OptResult {
    /// Amplitudes (beta) or angles (radians, reduced to [0, 2 pi)).
    std::vector<double> best_params;
    double best_pe = 0.5;
    std::size_t n_evals = 0;
    bool converged = false;
    /// The landscape was flat; best_pe is the homodyne value.
    bool no_improvement = false;
};

/// beta_max = 0.5 |alpha| + 3.
double beta_ceiling(double alpha);

/// Single-rotation receivers (cat or coherent, theta = pi): coarse grid in
/// beta with step 0.05, then golden-section refinement to 1e-4. A warm start
/// restricts the coarse grid to +-0.5 around it.
OptResult optimize_beta(RotationKind kind, double alpha, std::optional<double> warm_start = std::nullopt,
                        const TvOptions& tv = {});

struct ThetaOptions {
    std::size_t budget_per_start = 400;
    /// Additional starting points evaluated after the fixed seeds.
    std::vector<std::vector<double>> extra_seeds;
};

/// Fock-state rotations: multistart Nelder-Mead over the angles. Seeds are
/// all-pi, all-pi/2, all-zero and eight Halton points, then extra_seeds.
OptResult optimize_thetas(const std::vector<unsigned>& fock_set, double alpha, const ThetaOptions& opts = {},
                          const TvOptions& tv = {});

/// Angles for `to_set` that act like `thetas` on `from_set` (zero elsewhere).
std::vector<double> embed_thetas(const std::vector<unsigned>& from_set, const std::vector<double>& thetas,
                                 const std::vector<unsigned>& to_set);

/// Receiver spec of the given family with parameters substituted.
ReceiverSpec with_params(const ReceiverSpec& spec, const std::vector<double>& params);
/// Free parameters currently held by the spec (beta or angles; empty otherwise).
std::vector<double> params_of(const ReceiverSpec& spec);

struct CurvePoint {
    double alpha_sq = 0.0;
    double pe = 0.5;
    std::vector<double> params;
    double pe_helstrom = 0.5;
    double pe_gaussian = 0.5;
    double pe_kennedy = 0.5;
    double est_abs_error = 0.0;
    bool accuracy_warning = false;
    bool no_improvement = false;
};

struct ErrorCurve {
    ReceiverSpec receiver;
    std::vector<CurvePoint> points;
};

/// One point per grid entry; with `optimize` the rotation parameters are
/// optimized per point, warm-started from the previous point.
ErrorCurve sweep_error_curve(const ReceiverSpec& spec, const std::vector<double>& alpha_sq_grid, bool optimize,
                             const TvOptions& tv = {});

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

FitResult linear_fit(const std::vector<std::pair<double, double>>& points);

/// alpha_sq = lo, lo + step, ..., up to hi (inclusive within step / 1e6).
std::vector<double> make_grid(double lo, double hi, double step);

struct ScalingRun {
    std::vector<double> alpha_sq;
    std::vector<double> beta;
    std::vector<double> pe;
    FitResult fit;
};

/// Optimal beta along the grid (sequential warm starts) and its linear fit.
ScalingRun fit_beta_scaling(RotationKind kind, const std::vector<double>& alpha_sq_grid, const TvOptions& tv = {});

}  // namespace cvdisc
