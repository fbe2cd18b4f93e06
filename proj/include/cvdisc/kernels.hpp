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

// Data-parallel inner loops behind the receiver densities.
//
// Each kernel exists as a scalar reference and, where the build and the CPU
// allow it, an AVX2/FMA variant. The active variant is chosen once at first
// use from the CPU features; tests may force a variant to compare them.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cvdisc::kernels {

/// Three-term recurrence p_{n+1}(x) = (a_n x + b_n) p_n(x) - c_n p_{n-1}(x)
/// with p_{-1} = 0. The caller supplies p_0(x) per point ("seed"), which is
/// where any weight factor enters.
struct Recurrence {
    std::vector<double> a, b, c;

    std::size_t terms() const { return a.size() + 1; }
};

/// Orthonormal Hermite functions: seed pi^{-1/4} exp(-x^2/2).
Recurrence hermite_function_recurrence(std::size_t terms);
/// sqrt((2n+1)/2) P_n(s): seed 1/sqrt(2).
Recurrence legendre_normalized_recurrence(std::size_t terms);
/// sqrt(n!/Gamma(n+nu+1)) L_n^{(nu)}(r): seed sqrt(r^nu e^{-r}/Gamma(nu+1)).
Recurrence laguerre_normalized_recurrence(std::size_t terms, double nu);

/// Expansion coefficients of one state; `im` may be empty for real states.
struct Coefficients {
    std::span<const double> re;
    std::span<const double> im;
};

/// rho_k[i] = |sum_n coeff_k[n] p_n(x[i])|^2 for the two coefficient sets.
/// Both sets must hold rec.terms() entries (or fewer; missing ones are zero).
void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2);

/// sum_i w[i] |f[i] - g[i]|
double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g);

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Pins the dispatch target. Not meant to be toggled while other threads
/// evaluate kernels.
void force_isa(Isa isa);
/// Restores CPU-feature based selection.
void reset_isa();

namespace scalar {
void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2);
double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g);
}  // namespace scalar

namespace avx2 {
void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2);
double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g);
}  // namespace avx2

}  // namespace cvdisc::kernels
