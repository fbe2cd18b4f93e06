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

#include "cvdisc/quadrature.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

using namespace cvdisc;

namespace {

quad::BatchIntegrand pointwise(double (*fn)(double)) {
    return [fn](std::span<const double> x, std::span<double> f) {
        for (std::size_t i = 0; i < x.size(); ++i) f[i] = fn(x[i]);
    };
}

}  // namespace

TEST(quadrature, polynomials_are_exact) {
    const std::vector<double> bp{-1.0, 2.0};
    const auto r = quad::integrate(pointwise([](double x) { return x * x * x * x - 3.0 * x + 1.0; }), bp);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 33.0 / 5.0 - 4.5 + 3.0, 1e-13);
}

TEST(quadrature, gaussian_integral) {
    const std::vector<double> bp{-12.0, 12.0};
    const auto r = quad::integrate(pointwise([](double x) { return std::exp(-x * x); }), bp);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi), 1e-12);
    EXPECT_LE(r.abs_error, 1e-10);
}

TEST(quadrature, kink_at_breakpoint_is_exact) {
    const std::vector<double> bp{-1.0, 0.3, 2.0};
    const auto r = quad::integrate(pointwise([](double x) { return std::fabs(x - 0.3); }), bp);
    EXPECT_NEAR(r.value, 0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7, 1e-14);
}

TEST(quadrature, adapts_to_unmarked_kink) {
    const std::vector<double> bp{-1.0, 2.0};
    quad::Options opts;
    opts.abs_tol = 1e-10;
    const auto r = quad::integrate(pointwise([](double x) { return std::fabs(x - 0.3); }), bp, opts);
    EXPECT_NEAR(r.value, 0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7, 1e-9);
}

TEST(quadrature, reports_non_convergence_when_budget_exhausted) {
    const std::vector<double> bp{0.0, 1.0};
    quad::Options opts;
    opts.abs_tol = 1e-15;
    opts.max_evals = 60;
    const auto r = quad::integrate(pointwise([](double x) { return std::sqrt(x); }), bp, opts);
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.n_evals, 120u);
}

TEST(quadrature, kronrod_weights_sum_to_length) {
    std::array<double, 15> x{}, w{};
    quad::kronrod_nodes(-0.5, 3.5, x, w);
    double sum = 0.0;
    for (double wi : w) sum += wi;
    EXPECT_NEAR(sum, 4.0, 1e-14);
    for (double xi : x) {
        EXPECT_GT(xi, -0.5);
        EXPECT_LT(xi, 3.5);
    }
}
