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

// Truncated Fock-space states and the projector-rotation unitary.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cvdisc {

using Complex = std::complex<double>;

/// Amplitudes c_0 .. c_ncut over number states. Immutable once built.
class FockVector {
  public:
    explicit FockVector(std::vector<Complex> coeffs);

    std::size_t ncut() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex operator[](std::size_t n) const { return coeffs_[n]; }
    double norm_sq() const;

  private:
    std::vector<Complex> coeffs_;
};

/// Rotation states |psi_k> and angles theta_k of
/// U = prod_k exp(-i theta_k |psi_k><psi_k|), k = 0 .. N.
struct RotationSpec {
    std::vector<FockVector> states;
    std::vector<double> thetas;
};

/// Two-headed cat (|beta> + e^{i phi}|-beta>) / sqrt(2(1 + e^{-2 beta^2} cos phi)).
struct CatParams {
    double beta = 0.0;
    double phi = 0.0;
};

/// Cutoff guaranteeing a Poisson tail below 1e-12 for mean photon number mu:
/// max(32, ceil(mu + 12 sqrt(mu) + 12)).
std::size_t truncation_for(double mu);

/// Real-amplitude coherent state; throws a truncation error when the mass
/// beyond ncut reaches 1e-12.
FockVector coherent_fock(double alpha, std::size_t ncut);
FockVector cat_fock(CatParams params, std::size_t ncut);
FockVector fock_basis(std::size_t n, std::size_t ncut);

Complex inner(const FockVector& u, const FockVector& v);

/// Applies the factors right to left (k = N first). Each rotation state must
/// be normalized to 1e-10.
FockVector apply_projector_rotation(const FockVector& state, const RotationSpec& rot);

/// <x|v> with the orthonormal Hermite functions; |x| <= 40.
Complex quad_overlap(double x, const FockVector& v);

/// (1/pi) |<n| D^dagger(beta) |alpha>|^2 for real alpha, n <= 60.
double pacs_overlap_sq(double alpha_signed, unsigned n, Complex beta);

/// <beta|alpha> for real amplitudes: exp(-(alpha - beta)^2 / 2).
double coherent_overlap(double beta, double alpha);

}  // namespace cvdisc
