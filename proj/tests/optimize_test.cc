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

#include "cvdisc/optimize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvdisc/error.hpp"

using namespace cvdisc;

namespace {

constexpr double kPi = std::numbers::pi;

double angle_distance(double a, double b) {
    const double d = std::fmod(std::fabs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

}  // namespace

TEST(linear_fit, exact_line) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 10; ++i) pts.emplace_back(0.3 * i, 2.0 * (0.3 * i) + 1.0);
    const FitResult f = linear_fit(pts);
    EXPECT_NEAR(f.slope, 2.0, 1e-13);
    EXPECT_NEAR(f.intercept, 1.0, 1e-13);
    EXPECT_NEAR(f.rms_residual, 0.0, 1e-13);
}

TEST(linear_fit, residual_of_noisy_points) {
    const FitResult f = linear_fit({{0.0, 1.0}, {1.0, 0.0}, {2.0, 1.0}, {3.0, 0.0}});
    EXPECT_NEAR(f.slope, -0.2, 1e-14);
    EXPECT_NEAR(f.intercept, 0.8, 1e-14);
    EXPECT_GT(f.rms_residual, 0.0);
}

TEST(linear_fit, degenerate_design_is_rank_error) {
    try {
        linear_fit({{1.0, 2.0}, {1.0, 3.0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::rank);
    }
    EXPECT_THROW(linear_fit({{1.0, 2.0}}), Error);
}

TEST(make_grid, inclusive_and_snapped) {
    const auto g = make_grid(0.1, 1.0, 0.1);
    ASSERT_EQ(g.size(), 10u);
    EXPECT_EQ(g[6], 0.7);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(make_grid(0.01, 3.0, 0.01).size(), 300u);
    EXPECT_THROW(make_grid(1.0, 1.0, 0.1), Error);
    EXPECT_THROW(make_grid(0.1, 1.0, 0.0), Error);
    EXPECT_THROW(make_grid(0.1, 1.0, -0.1), Error);
}

TEST(optimize_beta, examples) {
    const OptResult coh = optimize_beta(RotationKind::coherent, 1.0);
    ASSERT_EQ(coh.best_params.size(), 1u);
    EXPECT_NEAR(coh.best_params[0], 1.366, 0.15);
    EXPECT_TRUE(coh.converged);

    const OptResult cat = optimize_beta(RotationKind::cat, 1.0);
    EXPECT_NEAR(cat.best_params[0], 1.070, 0.15);

    const double a = 0.5;
    const OptResult small = optimize_beta(RotationKind::coherent, a);
    EXPECT_GT(small.best_pe, helstrom_bpsk(a));
    EXPECT_LT(small.best_pe, gaussian_limit(a));
}

TEST(optimize_beta, result_matches_direct_evaluation) {
    const OptResult r = optimize_beta(RotationKind::cat, 0.8);
    const double direct = error_rate(ReceiverSpec::cat_rotation(r.best_params[0], kPi), 0.8).value;
    EXPECT_EQ(r.best_pe, direct);
    EXPECT_LE(r.best_params[0], beta_ceiling(0.8));
    EXPECT_GT(r.best_params[0], 0.0);
}

TEST(optimize_beta, warm_start_agrees_with_cold) {
    const OptResult cold = optimize_beta(RotationKind::coherent, 1.1);
    const OptResult warm = optimize_beta(RotationKind::coherent, 1.1, cold.best_params[0] + 0.1);
    EXPECT_NEAR(warm.best_pe, cold.best_pe, 1e-9);
    EXPECT_NEAR(warm.best_params[0], cold.best_params[0], 2e-3);
}

TEST(optimize_beta, rejects_zero_alpha) {
    EXPECT_THROW(optimize_beta(RotationKind::coherent, 0.0), Error);
}

TEST(optimize_beta, deterministic) {
    const OptResult a = optimize_beta(RotationKind::cat, 0.9);
    const OptResult b = optimize_beta(RotationKind::cat, 0.9);
    EXPECT_EQ(a.best_params, b.best_params);
    EXPECT_EQ(a.best_pe, b.best_pe);
    EXPECT_EQ(a.n_evals, b.n_evals);
}

TEST(optimize_thetas, single_fock_state_prefers_pi_at_low_energy) {
    for (double a : {0.3, 0.5}) {
        const OptResult r = optimize_thetas({1}, a);
        ASSERT_EQ(r.best_params.size(), 1u);
        EXPECT_LT(angle_distance(r.best_params[0], kPi), 0.05) << a;
        EXPECT_LT(r.best_pe, gaussian_limit(a));
    }
    for (double a : {1.0, 1.5}) {
        const OptResult r = optimize_thetas({1}, a);
        const double at_pi = error_rate(ReceiverSpec::fock_rotation({1}, {kPi}), a).value;
        EXPECT_LE(r.best_pe, std::min(at_pi, gaussian_limit(a)) + 1e-9) << a;
    }
}

TEST(optimize_thetas, three_state_set_prefers_all_pi) {
    const OptResult r = optimize_thetas({0, 1, 2}, 0.5);
    ASSERT_EQ(r.best_params.size(), 3u);
    const double at_pi = error_rate(ReceiverSpec::fock_rotation({0, 1, 2}, {kPi, kPi, kPi}), 0.5).value;
    EXPECT_LE(r.best_pe, at_pi + 1e-12);
    for (double t : r.best_params) EXPECT_LT(angle_distance(t, kPi), 0.05);
}

TEST(optimize_thetas, identity_seed_is_gaussian_limit) {
    for (double a : {0.3, 1.0}) {
        EXPECT_NEAR(error_rate(ReceiverSpec::fock_rotation({0, 1, 2}, {0.0, 0.0, 0.0}), a).value, gaussian_limit(a), 1e-8);
    }
}

TEST(optimize_thetas, never_worse_than_any_seed) {
    ThetaOptions opts;
    opts.extra_seeds = {{1.0, 2.0}};
    const OptResult r = optimize_thetas({1, 3}, 0.7, opts);
    for (const auto& seed : {std::vector<double>{kPi, kPi}, std::vector<double>{kPi / 2, kPi / 2},
                             std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 2.0}}) {
        EXPECT_LE(r.best_pe, error_rate(ReceiverSpec::fock_rotation({1, 3}, seed), 0.7).value + 1e-15);
    }
    opts.extra_seeds = {{1.0}};
    EXPECT_THROW(optimize_thetas({1, 3}, 0.7, opts), Error);
}

TEST(optimize_thetas, rejects_bad_sets) {
    EXPECT_THROW(optimize_thetas({}, 0.5), Error);
    EXPECT_THROW(optimize_thetas({0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.5), Error);
}

TEST(embed_thetas, places_angles_by_photon_number) {
    EXPECT_EQ(embed_thetas({1}, {kPi}, {0, 1, 2}), (std::vector<double>{0.0, kPi, 0.0}));
    EXPECT_THROW(embed_thetas({5}, {1.0}, {0, 1, 2}), Error);
}

TEST(params, round_trip) {
    const ReceiverSpec cat = ReceiverSpec::cat_rotation(1.0, kPi);
    EXPECT_EQ(params_of(cat), std::vector<double>{1.0});
    EXPECT_EQ(params_of(with_params(cat, {1.7})), std::vector<double>{1.7});
    const ReceiverSpec fock = ReceiverSpec::fock_rotation({0, 2}, {0.1, 0.2});
    EXPECT_EQ(params_of(with_params(fock, {0.3, 0.4})), (std::vector<double>{0.3, 0.4}));
    EXPECT_TRUE(params_of(ReceiverSpec::homodyne()).empty());
}

TEST(sweep, homodyne_values_and_benchmarks) {
    const ErrorCurve c = sweep_error_curve(ReceiverSpec::homodyne(), {0.25, 1.0}, false);
    ASSERT_EQ(c.points.size(), 2u);
    EXPECT_NEAR(c.points[0].pe, 0.15865525, 1e-7);
    EXPECT_NEAR(c.points[1].pe, 0.0227501319, 1e-7);
    EXPECT_NEAR(c.points[1].pe_kennedy, 0.00915782, 1e-8);
    EXPECT_NEAR(c.points[1].pe_helstrom, 0.0046000704, 1e-8);
    EXPECT_NEAR(c.points[0].pe_gaussian, 0.15865525, 1e-8);
}

TEST(sweep, rejects_unsorted_grid) {
    EXPECT_THROW(sweep_error_curve(ReceiverSpec::homodyne(), {0.5, 0.25}, false), Error);
    EXPECT_THROW(sweep_error_curve(ReceiverSpec::homodyne(), {0.0, 0.25}, false), Error);
}

TEST(sweep, forward_and_backward_warm_starts_agree) {
    const std::vector<double> grid{0.3, 0.5, 0.7, 0.9, 1.1};
    const ReceiverSpec spec = ReceiverSpec::coherent_rotation(1.0, kPi);
    const ErrorCurve fwd = sweep_error_curve(spec, grid, true);
    std::vector<double> reversed_pe;
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        reversed_pe.push_back(sweep_error_curve(spec, {*it}, true).points.front().pe);
    }
    std::reverse(reversed_pe.begin(), reversed_pe.end());
    std::optional<double> warm;
    for (std::size_t i = grid.size(); i-- > 0;) {
        const OptResult r = optimize_beta(RotationKind::coherent, std::sqrt(grid[i]), warm);
        warm = r.best_params.front();
        EXPECT_NEAR(r.best_pe, fwd.points[i].pe, 1e-6) << grid[i];
        EXPECT_NEAR(reversed_pe[i], fwd.points[i].pe, 1e-6) << grid[i];
    }
}

TEST(sweep, cat_rotation_below_gaussian_limit_at_small_energy) {
    const ErrorCurve c = sweep_error_curve(ReceiverSpec::cat_rotation(1.0, kPi), make_grid(0.1, 0.7, 0.1), true);
    for (const auto& p : c.points) EXPECT_LT(p.pe, p.pe_gaussian) << p.alpha_sq;
}
