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

// Independent reference implementations. They favour literal formulas over
// speed or stability and are used only to cross-check the library.

#include <complex>
#include <cstddef>
#include <vector>

#include "cvdisc/states.hpp"

namespace cvdisc::oracle {

/// Expansion of the rotation unitary as 1 + sum over ordered index maps of
/// zeta_{sigma(0)} ... zeta_{sigma(k)}, zeta_k = (e^{-i theta_k} - 1)|psi_k><psi_k|.
FockVector tsum_rotation(const FockVector& state, const RotationSpec& rot);

/// Number of ordered injective maps {0..k} -> {0..n_states-1} enumerated by tsum_rotation.
std::size_t tsum_cardinality(std::size_t n_states, std::size_t k);

/// Maclaurin series in long double; intended for |x| <= 3.
double erf_maclaurin(double x);

double hermite_explicit(unsigned n, double x);
/// 2^{-n} sum_k C(n,k)^2 (s-1)^{n-k} (s+1)^k
double legendre_explicit(unsigned n, double s);
double laguerre_explicit(unsigned n, double nu, double x);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch rules from the Jacobi matrix.
GaussRule gauss_legendre(std::size_t n);
GaussRule gauss_hermite(std::size_t n);

/// c_n = c_{n-1} alpha / sqrt(n), c_0 = e^{-alpha^2/2}.
std::vector<double> coherent_direct(double alpha, std::size_t ncut);

/// <x| e^{i gamma p^3} |alpha> by direct quadrature of the momentum integral.
std::complex<double> cpg_wavefunction_fourier(double x, double alpha, double gamma);

/// First zero of Ai located by bisection on the Maclaurin pair.
double airy_first_zero();
/// Maclaurin pair in long double; |z| <= 6.
double airy_maclaurin(double z);

}  // namespace cvdisc::oracle
