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

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "cvdisc/kernels.hpp"

namespace cvdisc::kernels {

Recurrence hermite_function_recurrence(std::size_t terms) {
    Recurrence rec;
    const std::size_t steps = terms > 0 ? terms - 1 : 0;
    rec.a.resize(steps);
    rec.b.assign(steps, 0.0);
    rec.c.resize(steps);
    for (std::size_t n = 0; n < steps; ++n) {
        const double nn = static_cast<double>(n);
        rec.a[n] = std::sqrt(2.0 / (nn + 1.0));
        rec.c[n] = std::sqrt(nn / (nn + 1.0));
    }
    return rec;
}

Recurrence legendre_normalized_recurrence(std::size_t terms) {
    Recurrence rec;
    const std::size_t steps = terms > 0 ? terms - 1 : 0;
    rec.a.resize(steps);
    rec.b.assign(steps, 0.0);
    rec.c.resize(steps);
    for (std::size_t n = 0; n < steps; ++n) {
        const double nn = static_cast<double>(n);
        rec.a[n] = std::sqrt((2.0 * nn + 1.0) * (2.0 * nn + 3.0)) / (nn + 1.0);
        rec.c[n] = n == 0 ? 0.0 : nn / (nn + 1.0) * std::sqrt((2.0 * nn + 3.0) / (2.0 * nn - 1.0));
    }
    return rec;
}

Recurrence laguerre_normalized_recurrence(std::size_t terms, double nu) {
    Recurrence rec;
    const std::size_t steps = terms > 0 ? terms - 1 : 0;
    rec.a.resize(steps);
    rec.b.resize(steps);
    rec.c.resize(steps);
    for (std::size_t n = 0; n < steps; ++n) {
        const double nn = static_cast<double>(n);
        const double scale = 1.0 / std::sqrt((nn + 1.0) * (nn + nu + 1.0));
        rec.a[n] = -scale;
        rec.b[n] = (2.0 * nn + 1.0 + nu) * scale;
        rec.c[n] = std::sqrt(nn * (nn + nu) / ((nn + 1.0) * (nn + nu + 1.0)));
    }
    return rec;
}

namespace detail {

void check_density_args(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                        Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2) {
    const std::size_t n = first.re.size();
    if (second.re.size() != n || n > rec.terms()) throw std::invalid_argument("density_pair: coefficient length");
    if (first.im.empty() != second.im.empty()) throw std::invalid_argument("density_pair: mixed real/complex sets");
    if (!first.im.empty() && (first.im.size() != n || second.im.size() != n)) {
        throw std::invalid_argument("density_pair: imaginary length");
    }
    if (seed.size() != x.size() || rho1.size() != x.size() || rho2.size() != x.size()) {
        throw std::invalid_argument("density_pair: point buffer length");
    }
}

}  // namespace detail

namespace scalar {

void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2) {
    detail::check_density_args(rec, x, seed, first, second, rho1, rho2);
    const std::size_t n_terms = first.re.size();
    const bool complex = !first.im.empty();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        double p_prev = 0.0;
        double p = seed[i];
        double s1r = 0.0, s1i = 0.0, s2r = 0.0, s2i = 0.0;
        for (std::size_t n = 0; n < n_terms; ++n) {
            s1r += first.re[n] * p;
            s2r += second.re[n] * p;
            if (complex) {
                s1i += first.im[n] * p;
                s2i += second.im[n] * p;
            }
            if (n + 1 < n_terms) {
                const double p_next = (rec.a[n] * xi + rec.b[n]) * p - rec.c[n] * p_prev;
                p_prev = p;
                p = p_next;
            }
        }
        rho1[i] = s1r * s1r + s1i * s1i;
        rho2[i] = s2r * s2r + s2i * s2i;
    }
}

double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::fabs(f[i] - g[i]);
    return sum;
}

}  // namespace scalar

}  // namespace cvdisc::kernels
