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

// Real-argument special functions used by the receiver models.
//
// Every function is pure and reentrant. Accuracy contracts:
//   hermite_phys   relative error <= 1e-12 for |x| <= 40, n <= 200
//   legendre       absolute error <= 1e-13 for n <= 500
//   laguerre_gen   absolute error <= 1e-11 for n <= 300, x <= 500
//   erf            absolute error <= 1e-14
//   airy_ai        absolute error <= 1e-10 on [-60, 40]
//   log_factorial  absolute error <= 1e-13 (relative beyond the table)

namespace cvdisc::specfun {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
/// Throws a range error for n > 1000, non-finite x, or overflow.
double hermite_phys(unsigned n, double x);

/// Legendre polynomial P_n(s), s in [-1, 1] (Bonnet recurrence).
double legendre(unsigned n, double s);

/// Generalized Laguerre polynomial L_n^{(nu)}(x) for nu > -1, x >= 0.
double laguerre_gen(unsigned n, double nu, double x);

double erf(double x);
double erfc(double x);

/// Airy function of the first kind on [-60, 40].
double airy_ai(double z);

/// log|Ai(z)| together with the sign of Ai(z). Valid for every z >= -60; for
/// large positive z this stays finite where Ai itself underflows.
struct SignedLog {
    double log_abs;
    int sign;  // -1, 0 or +1; log_abs is -inf when sign == 0
};
SignedLog airy_ai_log(double z);

/// ln(n!).
double log_factorial(unsigned n);

/// Abscissa where the Airy evaluator switches between the Maclaurin pair and
/// the asymptotic expansions.
inline constexpr double airy_switch = 6.0;

}  // namespace cvdisc::specfun
