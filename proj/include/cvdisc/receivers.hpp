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

// Outcome densities rho_1, rho_2 of each continuously labelled receiver for
// the signals |+alpha> and |-alpha>.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvdisc/states.hpp"

namespace cvdisc {

enum class Family { homodyne, rotation_homodyne, legendre, laguerre, pacs, cpg };

enum class RotationKind { cat, coherent, fock };

std::string to_string(Family family);
std::string to_string(RotationKind kind);

/// Parametric description of the rotation states of a rotation_homodyne
/// receiver. Cat and coherent rotations carry one real amplitude per state,
/// Fock rotations one photon number per state; every state has one angle.
struct RotationParams {
    RotationKind kind = RotationKind::coherent;
    std::vector<double> betas;
    std::vector<unsigned> fock_set;
    std::vector<double> thetas;
    double cat_phase = 0.0;

    std::size_t size() const { return kind == RotationKind::fock ? fock_set.size() : betas.size(); }
};

struct ReceiverSpec {
    Family family = Family::homodyne;
    std::optional<RotationParams> rotation;
    std::optional<double> nu;
    std::optional<unsigned> n_add;
    std::optional<double> gamma;

    static ReceiverSpec homodyne();
    /// Heterodyne detection is the n = 0 photon-added family.
    static ReceiverSpec heterodyne();
    static ReceiverSpec legendre();
    static ReceiverSpec laguerre(double nu);
    static ReceiverSpec pacs(unsigned n_add);
    static ReceiverSpec cpg(double gamma);
    static ReceiverSpec cat_rotation(double beta, double theta);
    static ReceiverSpec coherent_rotation(double beta, double theta);
    static ReceiverSpec fock_rotation(std::vector<unsigned> fock_set, std::vector<double> thetas);
    static ReceiverSpec rotated(RotationParams params);

    /// Throws a validation error unless exactly the fields the family needs
    /// are present and well formed.
    void validate() const;

    /// Short identifier, e.g. "homodyne", "cat_rotation", "laguerre".
    std::string name() const;
};

/// Cutoff used for a rotation receiver at signal amplitude alpha.
std::size_t rotation_cutoff(const RotationParams& params, double alpha);
RotationSpec materialize_rotation(const RotationParams& params, std::size_t ncut);

enum class LabelDomain { line, interval_s, halfline_r, plane_beta };

/// Integration window. One-dimensional domains use [lo, hi]; the plane uses
/// u = Re(beta) in [lo, hi] and v = Im(beta) in [v_lo, v_hi].
struct Window {
    double lo = 0.0;
    double hi = 0.0;
    double v_lo = 0.0;
    double v_hi = 0.0;
};

class DensityModel {
  public:
    virtual ~DensityModel() = default;
    /// One-dimensional models ignore v (which is then empty).
    virtual void eval(std::span<const double> u, std::span<const double> v, std::span<double> rho1,
                      std::span<double> rho2) const = 0;
};

/// Probability densities of the two signals over a labelled outcome domain.
/// Immutable and safe to share read-only across threads.
class DensityPair {
  public:
    DensityPair(LabelDomain domain, Window window, std::shared_ptr<const DensityModel> model,
                bool mirror_symmetric_v = false);

    LabelDomain domain() const { return domain_; }
    const Window& window() const { return window_; }
    bool two_dimensional() const { return domain_ == LabelDomain::plane_beta; }
    /// Both densities are even in v (plane only).
    bool mirror_symmetric_v() const { return mirror_v_; }

    void eval(std::span<const double> u, std::span<const double> v, std::span<double> rho1,
              std::span<double> rho2) const;
    std::pair<double, double> operator()(double x) const;
    std::pair<double, double> operator()(double u, double v) const;

  private:
    LabelDomain domain_;
    Window window_;
    std::shared_ptr<const DensityModel> model_;
    bool mirror_v_;
};

/// Densities for signals +alpha (first) and -alpha (second), alpha >= 0.
DensityPair build_density(const ReceiverSpec& spec, double alpha);

/// max over both signals of |integral(rho) - 1| under the reference quadrature.
double normalization_check(const DensityPair& pair);

/// Vacuum homodyne mass on [-a, a]; never exceeds 1.
double partial_vacuum_mass(double a);

}  // namespace cvdisc
