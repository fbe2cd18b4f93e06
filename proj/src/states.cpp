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

#include "cvdisc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvdisc/error.hpp"
#include "cvdisc/specfun.hpp"

namespace cvdisc {

namespace {

constexpr double kTailLimit = 1e-12;
constexpr double kNormTolerance = 1e-10;

void require_same_cut(const FockVector& u, const FockVector& v, const char* what) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::shape, std::string(what) + ": truncations differ (" + std::to_string(u.ncut()) + " vs " +
                                          std::to_string(v.ncut()) + ")");
    }
}

// Upper bound on sum_{n > ncut} e^{-mu} mu^n / n!.
double poisson_tail_bound(double mu, std::size_t ncut) {
    if (mu == 0.0) return 0.0;
    const double next = static_cast<double>(ncut + 1);
    const double log_term = -mu + next * std::log(mu) - specfun::log_factorial(static_cast<unsigned>(ncut + 1));
    const double ratio = mu / (next + 1.0);
    if (ratio >= 1.0) return 1.0;
    return std::exp(log_term) / (1.0 - ratio);
}

}  // namespace

FockVector::FockVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::shape, "FockVector needs at least one amplitude");
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw Error(ErrorKind::invariant, "non-finite Fock amplitude");
    }
}

double FockVector::norm_sq() const {
    double sum = 0.0;
    for (const auto& c : coeffs_) sum += std::norm(c);
    return sum;
}

std::size_t truncation_for(double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw Error(ErrorKind::domain, "truncation_for: mean photon number must be >= 0");
    const double rule = std::ceil(mu + 12.0 * std::sqrt(mu) + 12.0);
    return std::max<std::size_t>(32, static_cast<std::size_t>(rule));
}

FockVector coherent_fock(double alpha, std::size_t ncut) {
    if (!std::isfinite(alpha)) throw Error(ErrorKind::domain, "coherent_fock: non-finite amplitude");
    const double mu = alpha * alpha;
    if (ncut > 4096 || poisson_tail_bound(mu, ncut) >= kTailLimit) {
        throw Error(ErrorKind::truncation, "coherent_fock: ncut = " + std::to_string(ncut) +
                                               " too small for alpha = " + std::to_string(alpha));
    }
    std::vector<Complex> c(ncut + 1, 0.0);
    if (alpha == 0.0) {
        c[0] = 1.0;
        return FockVector(std::move(c));
    }
    const double log_abs = std::log(std::fabs(alpha));
    for (std::size_t n = 0; n <= ncut; ++n) {
        const double mag =
            std::exp(-0.5 * mu + static_cast<double>(n) * log_abs - 0.5 * specfun::log_factorial(static_cast<unsigned>(n)));
        c[n] = (alpha < 0.0 && n % 2 == 1) ? -mag : mag;
    }
    return FockVector(std::move(c));
}

FockVector cat_fock(CatParams params, std::size_t ncut) {
    const double norm2 = 2.0 * (1.0 + std::exp(-2.0 * params.beta * params.beta) * std::cos(params.phi));
    if (!(norm2 > 1e-14)) throw Error(ErrorKind::invariant, "cat_fock: vanishing normalization");
    const FockVector plus = coherent_fock(params.beta, ncut);
    const Complex phase = std::polar(1.0, params.phi);
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> c(ncut + 1);
    for (std::size_t n = 0; n <= ncut; ++n) {
        // <n|-beta> = (-1)^n <n|beta>
        const Complex branch = (n % 2 == 0) ? Complex(1.0) + phase : Complex(1.0) - phase;
        c[n] = scale * plus[n] * branch;
    }
    return FockVector(std::move(c));
}

FockVector fock_basis(std::size_t n, std::size_t ncut) {
    if (n > ncut) throw Error(ErrorKind::domain, "fock_basis: n = " + std::to_string(n) + " exceeds ncut");
    std::vector<Complex> c(ncut + 1, 0.0);
    c[n] = 1.0;
    return FockVector(std::move(c));
}

Complex inner(const FockVector& u, const FockVector& v) {
    require_same_cut(u, v, "inner");
    Complex sum = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n) sum += std::conj(u[n]) * v[n];
    return sum;
}

FockVector apply_projector_rotation(const FockVector& state, const RotationSpec& rot) {
    if (rot.states.size() != rot.thetas.size()) throw Error(ErrorKind::shape, "rotation: states and thetas differ in length");
    for (const auto& psi : rot.states) {
        require_same_cut(state, psi, "apply_projector_rotation");
        if (std::fabs(psi.norm_sq() - 1.0) > kNormTolerance) {
            throw Error(ErrorKind::invariant, "apply_projector_rotation: rotation state is not normalized");
        }
    }
    std::vector<Complex> out(state.coeffs().begin(), state.coeffs().end());
    for (std::size_t k = rot.states.size(); k-- > 0;) {
        const FockVector& psi = rot.states[k];
        const double theta = rot.thetas[k];
        if (theta == 0.0) continue;
        Complex proj = 0.0;
        for (std::size_t n = 0; n < out.size(); ++n) proj += std::conj(psi[n]) * out[n];
        const Complex factor = (std::polar(1.0, -theta) - 1.0) * proj;
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += factor * psi[n];
    }
    return FockVector(std::move(out));
}

Complex quad_overlap(double x, const FockVector& v) {
    if (!(std::fabs(x) <= 40.0)) throw Error(ErrorKind::range, "quad_overlap: |x| must not exceed 40");
    // Orthonormal Hermite functions h_n(x) = pi^{-1/4} e^{-x^2/2} H_n(x) / sqrt(2^n n!),
    // generated directly so no factorial or power is ever formed.
    double h_prev = 0.0;
    double h = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    Complex sum = 0.0;
    for (std::size_t n = 0; n < v.size(); ++n) {
        sum += v[n] * h;
        const double nn = static_cast<double>(n);
        const double h_next = std::sqrt(2.0 / (nn + 1.0)) * x * h - std::sqrt(nn / (nn + 1.0)) * h_prev;
        h_prev = h;
        h = h_next;
    }
    return sum;
}

double pacs_overlap_sq(double alpha_signed, unsigned n, Complex beta) {
    if (n > 60) throw Error(ErrorKind::domain, "pacs_overlap_sq: n must not exceed 60");
    const double dist2 = std::norm(Complex(alpha_signed, 0.0) - beta);
    if (dist2 == 0.0) return n == 0 ? 1.0 / std::numbers::pi : 0.0;
    return std::exp(-dist2 + static_cast<double>(n) * std::log(dist2) - specfun::log_factorial(n)) / std::numbers::pi;
}

double coherent_overlap(double beta, double alpha) {
    const double d = alpha - beta;
    return std::exp(-0.5 * d * d);
}

}  // namespace cvdisc
