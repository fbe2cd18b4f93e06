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

#include "cvdisc/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cvdisc/error.hpp"
#include "cvdisc/quadrature.hpp"

namespace cvdisc::oracle {

namespace {

using Vec = std::vector<Complex>;

Vec apply_zeta(const Vec& v, const FockVector& psi, double theta) {
    Complex ov = 0.0;
    for (std::size_t n = 0; n < v.size(); ++n) ov += std::conj(psi[n]) * v[n];
    const Complex f = (std::exp(Complex(0.0, -theta)) - 1.0) * ov;
    Vec out(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) out[n] = f * psi[n];
    return out;
}

// Visits every injective sigma: {0..k} -> {0..m-1}.
template <class F>
void for_each_injective(std::size_t k, std::size_t m, std::vector<std::size_t>& sigma, std::vector<bool>& used,
                        F&& visit) {
    if (sigma.size() == k + 1) {
        visit(sigma);
        return;
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (used[j]) continue;
        used[j] = true;
        sigma.push_back(j);
        for_each_injective(k, m, sigma, used, visit);
        sigma.pop_back();
        used[j] = false;
    }
}

bool ordered(const std::vector<std::size_t>& sigma) {
    for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
        if (!(sigma[j] < sigma[j + 1])) return false;
    }
    return true;
}

}  // namespace

std::size_t tsum_cardinality(std::size_t n_states, std::size_t k) {
    std::size_t count = 0;
    std::vector<std::size_t> sigma;
    std::vector<bool> used(n_states, false);
    for_each_injective(k, n_states, sigma, used, [&](const std::vector<std::size_t>& s) {
        if (ordered(s)) ++count;
    });
    return count;
}

FockVector tsum_rotation(const FockVector& state, const RotationSpec& rot) {
    const std::size_t m = rot.states.size();
    Vec total(state.coeffs().begin(), state.coeffs().end());
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<std::size_t> sigma;
        std::vector<bool> used(m, false);
        for_each_injective(k, m, sigma, used, [&](const std::vector<std::size_t>& s) {
            if (!ordered(s)) return;
            // zeta_{s(0)} ... zeta_{s(k)} |Psi>: the rightmost factor acts first.
            Vec term(state.coeffs().begin(), state.coeffs().end());
            for (std::size_t j = s.size(); j-- > 0;) term = apply_zeta(term, rot.states[s[j]], rot.thetas[s[j]]);
            for (std::size_t n = 0; n < total.size(); ++n) total[n] += term[n];
        });
    }
    return FockVector(std::move(total));
}

double erf_maclaurin(double x) {
    const long double z = x;
    long double term = z, sum = z;
    for (int n = 1; n < 200; ++n) {
        term *= -z * z / n;
        const long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(static_cast<double>(add)) < 1e-22) break;
    }
    return static_cast<double>(2.0L * sum / std::sqrt(std::numbers::pi_v<long double>));
}

double hermite_explicit(unsigned n, double x) {
    long double sum = 0.0L;
    for (unsigned m = 0; 2 * m <= n; ++m) {
        const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
        sum += sign * std::pow(2.0L * x, static_cast<long double>(n - 2 * m)) /
               (std::tgamma(static_cast<long double>(m + 1)) * std::tgamma(static_cast<long double>(n - 2 * m + 1)));
    }
    return static_cast<double>(sum * std::tgamma(static_cast<long double>(n + 1)));
}

double legendre_explicit(unsigned n, double s) {
    long double sum = 0.0L;
    long double binom = 1.0L;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n - k + 1) / k;
        sum += binom * binom * std::pow(static_cast<long double>(s) - 1.0L, static_cast<long double>(n - k)) *
               std::pow(static_cast<long double>(s) + 1.0L, static_cast<long double>(k));
    }
    return static_cast<double>(sum / std::pow(2.0L, static_cast<long double>(n)));
}

double laguerre_explicit(unsigned n, double nu, double x) {
    long double sum = 0.0L;
    for (unsigned i = 0; i <= n; ++i) {
        // C(n + nu, n - i) = Gamma(n + nu + 1) / (Gamma(n - i + 1) Gamma(nu + i + 1))
        const long double lb = std::lgamma(static_cast<long double>(n) + nu + 1.0L) -
                               std::lgamma(static_cast<long double>(n - i) + 1.0L) -
                               std::lgamma(static_cast<long double>(i) + nu + 1.0L);
        const long double sign = (i % 2 == 0) ? 1.0L : -1.0L;
        sum += sign * std::exp(lb) * std::pow(static_cast<long double>(x), static_cast<long double>(i)) /
               std::tgamma(static_cast<long double>(i) + 1.0L);
    }
    return static_cast<double>(sum);
}

namespace {

GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
    const auto n = diag.size();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        j(i, i) = diag(i);
        if (i + 1 < n) j(i, i + 1) = j(i + 1, i) = offdiag(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    GaussRule rule;
    for (Eigen::Index i = 0; i < n; ++i) {
        rule.nodes.push_back(es.eigenvalues()(i));
        const double v0 = es.eigenvectors()(0, i);
        rule.weights.push_back(mu0 * v0 * v0);
    }
    return rule;
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd e(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
    for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(n); ++k) {
        const double kk = static_cast<double>(k);
        e(k - 1) = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    return golub_welsch(d, e, 2.0);
}

GaussRule gauss_hermite(std::size_t n) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd e(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
    for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(n); ++k) e(k - 1) = std::sqrt(static_cast<double>(k) / 2.0);
    return golub_welsch(d, e, std::sqrt(std::numbers::pi));
}

std::vector<double> coherent_direct(double alpha, std::size_t ncut) {
    std::vector<double> c(ncut + 1);
    c[0] = std::exp(-0.5 * alpha * alpha);
    for (std::size_t n = 1; n <= ncut; ++n) c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return c;
}

std::complex<double> cpg_wavefunction_fourier(double x, double alpha, double gamma) {
    const double shift = x - std::numbers::sqrt2 * alpha;
    auto part = [&](bool imag) {
        return [=](std::span<const double> p, std::span<double> out) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                const double phase = p[i] * shift + gamma * p[i] * p[i] * p[i];
                const double damp = std::exp(-0.5 * p[i] * p[i]);
                out[i] = damp * (imag ? std::sin(phase) : std::cos(phase));
            }
        };
    };
    std::vector<double> bounds;
    for (int k = -40; k <= 40; ++k) bounds.push_back(static_cast<double>(k));
    quad::Options opts;
    opts.abs_tol = 1e-13;
    opts.max_evals = 2000000;
    const double re = quad::integrate(part(false), bounds, opts).value;
    const double im = quad::integrate(part(true), bounds, opts).value;
    const double pref = std::pow(4.0 * std::pow(std::numbers::pi, 3), -0.25);
    return pref * std::complex<double>(re, im);
}

double airy_maclaurin(double z) {
    if (std::fabs(z) > 6.0) throw Error(ErrorKind::range, "airy_maclaurin: |z| <= 6 only");
    const long double c1 = 0.355028053887817239260L;
    const long double c2 = 0.258819403792806798405L;
    const long double zz = z;
    long double f = 1.0L, g = zz, sf = 1.0L, sg = zz;
    for (int k = 1; k < 300; ++k) {
        f *= zz * zz * zz / ((3.0L * k - 1.0L) * (3.0L * k));
        g *= zz * zz * zz / ((3.0L * k) * (3.0L * k + 1.0L));
        sf += f;
        sg += g;
        if (std::fabs(static_cast<double>(f)) + std::fabs(static_cast<double>(g)) < 1e-30) break;
    }
    return static_cast<double>(c1 * sf - c2 * sg);
}

double airy_first_zero() {
    double lo = -3.0, hi = -2.0;
    const double flo = airy_maclaurin(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((airy_maclaurin(mid) > 0.0) == (flo > 0.0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cvdisc::oracle
