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

#include "cvdisc/receivers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "cvdisc/error.hpp"
#include "cvdisc/oracles.hpp"
#include "cvdisc/specfun.hpp"

using namespace cvdisc;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::invariant;
}

double gaussian(double x, double mean) { return std::exp(-(x - mean) * (x - mean)) / std::sqrt(kPi); }

std::vector<ReceiverSpec> all_families() {
    return {ReceiverSpec::homodyne(),
            ReceiverSpec::cat_rotation(1.1, kPi),
            ReceiverSpec::coherent_rotation(1.3, kPi),
            ReceiverSpec::fock_rotation({0, 1, 2}, {kPi, kPi / 2, 0.4}),
            ReceiverSpec::legendre(),
            ReceiverSpec::laguerre(0.0),
            ReceiverSpec::laguerre(-0.5),
            ReceiverSpec::laguerre(1.5),
            ReceiverSpec::heterodyne(),
            ReceiverSpec::pacs(2),
            ReceiverSpec::cpg(0.2),
            ReceiverSpec::cpg(-0.2)};
}

}  // namespace

TEST(receivers, homodyne_vacuum_is_identical_gaussian) {
    const DensityPair pair = build_density(ReceiverSpec::homodyne(), 0.0);
    for (double x : {-2.0, 0.0, 0.7, 3.0}) {
        const auto [r1, r2] = pair(x);
        EXPECT_EQ(r1, r2);
        EXPECT_NEAR(r1, gaussian(x, 0.0), 1e-15);
    }
}

TEST(receivers, homodyne_means) {
    const double a = 0.8;
    const DensityPair pair = build_density(ReceiverSpec::homodyne(), a);
    for (double x : {-2.0, 0.0, 1.1}) {
        const auto [r1, r2] = pair(x);
        EXPECT_NEAR(r1, gaussian(x, std::numbers::sqrt2 * a), 1e-14);
        EXPECT_NEAR(r2, gaussian(x, -std::numbers::sqrt2 * a), 1e-14);
    }
}

TEST(receivers, zero_angle_rotations_equal_homodyne) {
    const std::vector<ReceiverSpec> specs{ReceiverSpec::cat_rotation(0.9, 0.0), ReceiverSpec::coherent_rotation(-0.4, 0.0),
                                          ReceiverSpec::fock_rotation({0, 3}, {0.0, 0.0})};
    for (const auto& spec : specs) {
        for (double a : {0.3, 1.2}) {
            const DensityPair rot = build_density(spec, a);
            const DensityPair hom = build_density(ReceiverSpec::homodyne(), a);
            for (double x = -5.0; x <= 5.0; x += 0.37) {
                EXPECT_NEAR(rot(x).first, hom(x).first, 1e-12);
                EXPECT_NEAR(rot(x).second, hom(x).second, 1e-12);
            }
        }
    }
}

TEST(receivers, legendre_endpoint_matches_direct_sum) {
    const FockVector c = coherent_fock(1.0, 128);
    Complex sum = 0.0;
    for (std::size_t n = 0; n <= 128; ++n) sum += std::sqrt((2.0 * n + 1.0) / 2.0) * c[n];
    const DensityPair pair = build_density(ReceiverSpec::legendre(), 1.0);
    EXPECT_NEAR(pair(1.0).first, std::norm(sum), 1e-10 * std::norm(sum));
}

TEST(receivers, legendre_interior_matches_explicit_polynomials) {
    const double a = 0.6;
    const std::size_t ncut = 60;
    const FockVector c = coherent_fock(a, ncut);
    const DensityPair pair = build_density(ReceiverSpec::legendre(), a);
    for (double s : {-0.8, -0.1, 0.45}) {
        double sum = 0.0;
        for (unsigned n = 0; n <= 20; ++n) sum += std::sqrt((2.0 * n + 1.0) / 2.0) * oracle::legendre_explicit(n, s) * c[n].real();
        EXPECT_NEAR(pair(s).first, sum * sum, 1e-10);
    }
}

TEST(receivers, laguerre_matches_explicit_polynomials) {
    const double a = 0.5, nu = 0.5;
    const FockVector c = coherent_fock(a, 40);
    const DensityPair pair = build_density(ReceiverSpec::laguerre(nu), a);
    for (double r : {0.2, 1.0, 3.5}) {
        double sum = 0.0;
        for (unsigned n = 0; n <= 18; ++n) {
            sum += std::sqrt(std::tgamma(n + 1.0) / std::tgamma(n + nu + 1.0)) * oracle::laguerre_explicit(n, nu, r) *
                   c[n].real();
        }
        EXPECT_NEAR(pair(r).first, std::pow(r, nu) * std::exp(-r) * sum * sum, 1e-10);
    }
}

TEST(receivers, pacs_density_closed_form) {
    const DensityPair pair = build_density(ReceiverSpec::pacs(2), 0.7);
    for (auto [u, v] : {std::pair{0.1, 0.3}, std::pair{-1.0, 0.0}, std::pair{1.5, -0.8}}) {
        const auto [r1, r2] = pair(u, v);
        EXPECT_NEAR(r1, pacs_overlap_sq(0.7, 2, {u, v}), 1e-15);
        EXPECT_NEAR(r2, pacs_overlap_sq(-0.7, 2, {u, v}), 1e-15);
    }
}

TEST(receivers, normalization_examples) {
    EXPECT_LT(normalization_check(build_density(ReceiverSpec::homodyne(), 1.0)), 1e-10);
    EXPECT_LT(normalization_check(build_density(ReceiverSpec::legendre(), 1.5)), 1e-6);
    EXPECT_LT(normalization_check(build_density(ReceiverSpec::pacs(2), 1.0)), 1e-6);
}

TEST(receivers, legendre_normalization_against_gauss_legendre_rule) {
    const auto rule = oracle::gauss_legendre(512);
    const DensityPair pair = build_density(ReceiverSpec::legendre(), 1.5);
    double t1 = 0.0, t2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto [r1, r2] = pair(rule.nodes[i]);
        t1 += rule.weights[i] * r1;
        t2 += rule.weights[i] * r2;
    }
    EXPECT_NEAR(t1, 1.0, 1e-6);
    EXPECT_NEAR(t2, 1.0, 1e-6);
}

TEST(receivers, all_families_normalized_and_nonnegative) {
    for (const auto& spec : all_families()) {
        for (double a : {0.0, 0.5, 1.0, 1.7}) {
            const DensityPair pair = build_density(spec, a);
            EXPECT_LT(normalization_check(pair), 1e-6) << spec.name() << " alpha=" << a;
            const Window& w = pair.window();
            for (int i = 0; i <= 200; ++i) {
                const double u = w.lo + (w.hi - w.lo) * i / 200.0;
                const auto [r1, r2] = pair.two_dimensional() ? pair(u, 0.3) : pair(u);
                EXPECT_GE(r1, 0.0);
                EXPECT_GE(r2, 0.0);
            }
        }
    }
}

TEST(receivers, mirror_symmetry) {
    const std::vector<ReceiverSpec> even{ReceiverSpec::homodyne(), ReceiverSpec::fock_rotation({1, 2}, {kPi, 0.7}),
                                         ReceiverSpec::cat_rotation(1.0, kPi)};
    for (const auto& spec : even) {
        const DensityPair pair = build_density(spec, 0.9);
        for (double x = -4.0; x <= 4.0; x += 0.31) EXPECT_NEAR(pair(x).second, pair(-x).first, 1e-12) << spec.name();
    }
    for (double beta : {0.4, 1.3}) {
        const DensityPair plus = build_density(ReceiverSpec::coherent_rotation(beta, kPi), 0.9);
        const DensityPair minus = build_density(ReceiverSpec::coherent_rotation(-beta, kPi), 0.9);
        for (double x = -4.0; x <= 4.0; x += 0.31) EXPECT_NEAR(plus(x).second, minus(-x).first, 1e-12);
    }
}

TEST(receivers, cpg_approaches_homodyne) {
    // First order in gamma: rho_gamma - rho_0 = 2 gamma psi_0 psi_0''' with psi_0 the shifted vacuum.
    for (double a : {0.5, 1.0}) {
        const DensityPair hom = build_density(ReceiverSpec::homodyne(), a);
        const double c = std::numbers::sqrt2 * a;
        double previous = 0.0;
        for (double gamma : {1e-3, 5e-4, 2.5e-4}) {
            const DensityPair cpg = build_density(ReceiverSpec::cpg(gamma), a);
            double sup = 0.0, sup_residual = 0.0;
            for (double x = c - 3.0; x <= c + 3.0; x += 0.01) {
                const double y = x - c;
                const double first_order = 2.0 * gamma * std::exp(-y * y) * (3.0 * y - y * y * y) / std::sqrt(kPi);
                const double delta = cpg(x).first - hom(x).first;
                sup = std::max(sup, std::fabs(delta));
                sup_residual = std::max(sup_residual, std::fabs(std::fabs(delta) - std::fabs(first_order)));
            }
            EXPECT_LT(sup, 1.3 * gamma);
            EXPECT_LT(sup_residual, 10.0 * gamma * gamma);
            if (previous > 0.0) EXPECT_NEAR(previous / sup, 2.0, 0.01);
            previous = sup;
        }
    }
}

TEST(receivers, cpg_matches_fourier_oracle) {
    for (double gamma : {0.05, 0.3, -0.3}) {
        const DensityPair pair = build_density(ReceiverSpec::cpg(gamma), 0.8);
        for (double x : {-3.0, -0.5, 0.9, 2.5}) {
            const double ref = std::norm(oracle::cpg_wavefunction_fourier(x, 0.8, gamma));
            EXPECT_NEAR(pair(x).first, ref, 1e-9) << "gamma=" << gamma << " x=" << x;
        }
    }
}

TEST(receivers, validation_errors) {
    EXPECT_EQ(kind_of([] { build_density(ReceiverSpec::cpg(0.0), 1.0); }), ErrorKind::degenerate_parameter);
    EXPECT_EQ(kind_of([] { build_density(ReceiverSpec::laguerre(-1.0), 1.0); }), ErrorKind::domain);
    EXPECT_EQ(kind_of([] { build_density(ReceiverSpec::homodyne(), -0.1); }), ErrorKind::domain);

    ReceiverSpec extra = ReceiverSpec::homodyne();
    extra.gamma = 0.2;
    EXPECT_EQ(kind_of([&] { extra.validate(); }), ErrorKind::validation);

    ReceiverSpec missing;
    missing.family = Family::pacs;
    EXPECT_EQ(kind_of([&] { missing.validate(); }), ErrorKind::validation);

    EXPECT_EQ(kind_of([] { ReceiverSpec::fock_rotation({0, 1}, {1.0}).validate(); }), ErrorKind::validation);
}

TEST(receivers, names) {
    EXPECT_EQ(ReceiverSpec::homodyne().name(), "homodyne");
    EXPECT_EQ(ReceiverSpec::cat_rotation(1.0, kPi).name(), "cat_rotation");
    EXPECT_EQ(ReceiverSpec::laguerre(0.0).name(), "laguerre");
}

TEST(partial_vacuum_mass, examples) {
    EXPECT_NEAR(partial_vacuum_mass(1.0), 0.84270079, 1e-8);
    EXPECT_NEAR(partial_vacuum_mass(1.0), specfun::erf(1.0), 1e-13);
    const double big = partial_vacuum_mass(30.0);
    EXPECT_LE(big, 1.0);
    EXPECT_NEAR(big, 1.0, 1e-14);
    EXPECT_LT(partial_vacuum_mass(1e-6), 1e-5);
    for (double a : {0.5, 2.0, 5.0}) EXPECT_LT(partial_vacuum_mass(a), 1.0);
}
