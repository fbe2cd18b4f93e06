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

#include "cvdisc/stellar.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "cvdisc/error.hpp"
#include "cvdisc/specfun.hpp"

namespace cvdisc {

std::string StellarRankLabel::to_string() const {
    switch (kind) {
        case Kind::finite: return std::to_string(n);
        case Kind::infinite: return "infinite";
        case Kind::at_least_one: return ">=1";
    }
    return "unknown";
}

StellarRankLabel declared_rank(const ReceiverSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::homodyne: return StellarRankLabel::finite(0);
        case Family::pacs: return StellarRankLabel::finite(*spec.n_add);
        case Family::cpg:
        case Family::rotation_homodyne: return StellarRankLabel::infinite();
        case Family::legendre:
        case Family::laguerre: return StellarRankLabel::at_least_one();
    }
    return StellarRankLabel::infinite();
}

namespace {

// <m| D(beta) |n>
std::complex<double> displaced_number_coeff(unsigned m, unsigned n, std::complex<double> beta) {
    const double x = std::norm(beta);
    const double damp = std::exp(-0.5 * x);
    if (m >= n) {
        const double scale = std::exp(0.5 * (specfun::log_factorial(n) - specfun::log_factorial(m)));
        return scale * std::pow(beta, static_cast<int>(m - n)) * damp * specfun::laguerre_gen(n, m - n, x);
    }
    const double scale = std::exp(0.5 * (specfun::log_factorial(m) - specfun::log_factorial(n)));
    return scale * std::pow(-std::conj(beta), static_cast<int>(n - m)) * damp * specfun::laguerre_gen(m, n - m, x);
}

}  // namespace

std::vector<std::complex<double>> pacs_stellar_polynomial(unsigned n, std::complex<double> beta, unsigned extra) {
    if (n > 30) throw Error(ErrorKind::range, "pacs_stellar_polynomial: n above 30 is ill-conditioned");
    const unsigned kmax = n + extra;
    std::vector<std::complex<double>> psi(kmax + 1);
    for (unsigned m = 0; m <= kmax; ++m) {
        psi[m] = displaced_number_coeff(m, n, beta) / std::exp(0.5 * specfun::log_factorial(m));
    }
    // F*(z) = exp(beta z - |beta|^2 / 2) P(z); divide out the Gaussian factor.
    const double lift = std::exp(0.5 * std::norm(beta));
    std::vector<std::complex<double>> p(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        std::complex<double> acc = 0.0;
        for (unsigned m = 0; m <= k; ++m) {
            const double inv_fact = std::exp(-specfun::log_factorial(k - m));
            acc += psi[m] * std::pow(-beta, static_cast<int>(k - m)) * inv_fact;
        }
        p[k] = lift * acc;
    }
    return p;
}

unsigned pacs_rank_check(unsigned n, std::complex<double> beta) {
    if (n > 30) throw Error(ErrorKind::range, "pacs_rank_check: n above 30 is ill-conditioned");
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw Error(ErrorKind::domain, "pacs_rank_check: beta must be finite");
    }
    const auto p = pacs_stellar_polynomial(n, beta);
    double peak = 0.0;
    for (const auto& c : p) peak = std::max(peak, std::abs(c));
    std::size_t degree = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (std::abs(p[k]) > 1e-9 * peak) degree = k;
    }
    if (degree == 0) return 0;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(degree),
                                                        static_cast<Eigen::Index>(degree));
    for (std::size_t i = 1; i < degree; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < degree; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) = -p[i] / p[degree];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::rank, "pacs_rank_check: eigenvalue solver failed");
    unsigned zeros = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const auto z = solver.eigenvalues()(i);
        if (std::isfinite(z.real()) && std::isfinite(z.imag())) ++zeros;
    }
    return zeros;
}

std::vector<Table1Row> table1_rows() {
    return {
        {"Homodyne", "homodyne", "dx |x><x|", "0", false},
        {"Heterodyne", "pacs(n=0)", "d^2beta (1/pi) |beta><beta|", "0", false},
        {"Photon-added coherent states", "pacs", "d^2beta (1/pi) D^dag(beta) |n><n| D(beta)", "n", false},
        {"Cubic phase gate + homodyne", "cpg", "dx e^{-i gamma p^3} |x><x| e^{i gamma p^3}", "infinite", false},
        {"Unitary Fock state rotation + homodyne", "rotation_homodyne(fock)",
         "dx [U^(N)_{|k>}(theta)]^dag |x><x| U^(N)_{|k>}(theta)", "infinite", true},
        {"Unitary cat state rotation + homodyne", "rotation_homodyne(cat)",
         "dx [U^(N)_{|cat_k>}(theta)]^dag |x><x| U^(N)_{|cat_k>}(theta)", "infinite", true},
        {"Unitary coherent state rotation + homodyne", "rotation_homodyne(coherent)",
         "dx [U^(N)_{|beta_k>}(theta)]^dag |x><x| U^(N)_{|beta_k>}(theta)", "infinite", true},
        {"Generalised Laguerre polynomial states", "laguerre", "dr |r;nu><r;nu|", ">=1", true},
        {"Legendre polynomial states", "legendre", "ds |s><s|", ">=1", true},
    };
}

std::string table1_json() {
    nlohmann::ordered_json doc;
    doc["columns"] = {"scheme", "family", "povm", "stellar_rank", "near_optimal"};
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table1_rows()) {
        nlohmann::ordered_json row;
        row["scheme"] = r.scheme;
        row["family"] = r.family;
        row["povm"] = r.povm;
        row["stellar_rank"] = r.stellar_rank;
        row["near_optimal"] = r.near_optimal;
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

}  // namespace cvdisc
