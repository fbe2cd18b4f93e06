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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cvdisc/error.hpp"
#include "cvdisc/kernels.hpp"
#include "cvdisc/quadrature.hpp"
#include "cvdisc/specfun.hpp"

namespace cvdisc {

std::string to_string(Family family) {
    switch (family) {
        case Family::homodyne: return "homodyne";
        case Family::rotation_homodyne: return "rotation_homodyne";
        case Family::legendre: return "legendre";
        case Family::laguerre: return "laguerre";
        case Family::pacs: return "pacs";
        case Family::cpg: return "cpg";
    }
    return "unknown";
}

std::string to_string(RotationKind kind) {
    switch (kind) {
        case RotationKind::cat: return "cat";
        case RotationKind::coherent: return "coherent";
        case RotationKind::fock: return "fock";
    }
    return "unknown";
}

ReceiverSpec ReceiverSpec::homodyne() { return {}; }

ReceiverSpec ReceiverSpec::heterodyne() { return pacs(0); }

ReceiverSpec ReceiverSpec::legendre() {
    ReceiverSpec s;
    s.family = Family::legendre;
    return s;
}

ReceiverSpec ReceiverSpec::laguerre(double nu) {
    ReceiverSpec s;
    s.family = Family::laguerre;
    s.nu = nu;
    return s;
}

ReceiverSpec ReceiverSpec::pacs(unsigned n_add) {
    ReceiverSpec s;
    s.family = Family::pacs;
    s.n_add = n_add;
    return s;
}

ReceiverSpec ReceiverSpec::cpg(double gamma) {
    ReceiverSpec s;
    s.family = Family::cpg;
    s.gamma = gamma;
    return s;
}

ReceiverSpec ReceiverSpec::cat_rotation(double beta, double theta) {
    return rotated({RotationKind::cat, {beta}, {}, {theta}, 0.0});
}

ReceiverSpec ReceiverSpec::coherent_rotation(double beta, double theta) {
    return rotated({RotationKind::coherent, {beta}, {}, {theta}, 0.0});
}

ReceiverSpec ReceiverSpec::fock_rotation(std::vector<unsigned> fock_set, std::vector<double> thetas) {
    return rotated({RotationKind::fock, {}, std::move(fock_set), std::move(thetas), 0.0});
}

ReceiverSpec ReceiverSpec::rotated(RotationParams params) {
    ReceiverSpec s;
    s.family = Family::rotation_homodyne;
    s.rotation = std::move(params);
    return s;
}

void ReceiverSpec::validate() const {
    auto fail = [this](const std::string& msg) { throw Error(ErrorKind::validation, to_string(family) + ": " + msg); };
    const bool wants_rotation = family == Family::rotation_homodyne;
    const bool wants_nu = family == Family::laguerre;
    const bool wants_n = family == Family::pacs;
    const bool wants_gamma = family == Family::cpg;
    if (rotation.has_value() != wants_rotation) fail(wants_rotation ? "rotation states required" : "unexpected rotation");
    if (nu.has_value() != wants_nu) fail(wants_nu ? "nu required" : "unexpected nu");
    if (n_add.has_value() != wants_n) fail(wants_n ? "n_add required" : "unexpected n_add");
    if (gamma.has_value() != wants_gamma) fail(wants_gamma ? "gamma required" : "unexpected gamma");
    if (wants_nu && !(*nu > -1.0 && std::isfinite(*nu))) throw Error(ErrorKind::domain, "laguerre: nu must exceed -1");
    if (wants_n && *n_add > 60) fail("n_add must not exceed 60");
    if (wants_gamma) {
        if (!std::isfinite(*gamma)) fail("gamma must be finite");
        if (*gamma == 0.0) {
            throw Error(ErrorKind::degenerate_parameter, "cpg: gamma = 0 is plain homodyne detection");
        }
    }
    if (wants_rotation) {
        const RotationParams& r = *rotation;
        if (r.size() == 0) fail("at least one rotation state required");
        if (r.thetas.size() != r.size()) fail("one angle per rotation state required");
        if (r.kind == RotationKind::fock && !r.betas.empty()) fail("fock rotations take no amplitudes");
        if (r.kind != RotationKind::fock && !r.fock_set.empty()) fail("cat/coherent rotations take no photon numbers");
        for (double t : r.thetas) {
            if (!std::isfinite(t)) fail("angles must be finite");
        }
        for (double b : r.betas) {
            if (!std::isfinite(b)) fail("amplitudes must be finite");
            if (r.kind == RotationKind::cat && 1.0 + std::exp(-2.0 * b * b) * std::cos(r.cat_phase) <= 1e-14) {
                fail("cat state with vanishing normalization");
            }
        }
        for (unsigned n : r.fock_set) {
            if (n > 200) fail("photon numbers above 200 are not supported");
        }
    }
}

std::string ReceiverSpec::name() const {
    if (family == Family::rotation_homodyne && rotation) return to_string(rotation->kind) + "_rotation";
    return to_string(family);
}

std::size_t rotation_cutoff(const RotationParams& params, double alpha) {
    double mu = alpha * alpha;
    for (double b : params.betas) mu = std::max(mu, b * b);
    std::size_t ncut = truncation_for(mu);
    for (unsigned n : params.fock_set) ncut = std::max<std::size_t>(ncut, n);
    return ncut;
}

RotationSpec materialize_rotation(const RotationParams& params, std::size_t ncut) {
    RotationSpec rot;
    rot.thetas = params.thetas;
    switch (params.kind) {
        case RotationKind::cat:
            for (double b : params.betas) rot.states.push_back(cat_fock({b, params.cat_phase}, ncut));
            break;
        case RotationKind::coherent:
            for (double b : params.betas) rot.states.push_back(coherent_fock(b, ncut));
            break;
        case RotationKind::fock:
            for (unsigned n : params.fock_set) rot.states.push_back(fock_basis(n, ncut));
            break;
    }
    return rot;
}

DensityPair::DensityPair(LabelDomain domain, Window window, std::shared_ptr<const DensityModel> model,
                         bool mirror_symmetric_v)
    : domain_(domain), window_(window), model_(std::move(model)), mirror_v_(mirror_symmetric_v) {}

void DensityPair::eval(std::span<const double> u, std::span<const double> v, std::span<double> rho1,
                       std::span<double> rho2) const {
    model_->eval(u, v, rho1, rho2);
}

std::pair<double, double> DensityPair::operator()(double x) const {
    double r1 = 0.0, r2 = 0.0;
    model_->eval({&x, 1}, {}, {&r1, 1}, {&r2, 1});
    return {r1, r2};
}

std::pair<double, double> DensityPair::operator()(double u, double v) const {
    double r1 = 0.0, r2 = 0.0;
    model_->eval({&u, 1}, {&v, 1}, {&r1, 1}, {&r2, 1});
    return {r1, r2};
}

namespace {

constexpr std::size_t kChunk = 256;

class GaussianPairModel final : public DensityModel {
  public:
    explicit GaussianPairModel(double alpha) : centre_(std::numbers::sqrt2 * alpha) {}

    void eval(std::span<const double> x, std::span<const double>, std::span<double> rho1,
              std::span<double> rho2) const override {
        const double norm = 1.0 / std::sqrt(std::numbers::pi);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double a = x[i] - centre_;
            const double b = x[i] + centre_;
            rho1[i] = norm * std::exp(-a * a);
            rho2[i] = norm * std::exp(-b * b);
        }
    }

  private:
    double centre_;
};

enum class Seed { hermite, legendre, laguerre };

// rho_k(x) = |sum_n c_{k,n} p_n(x)|^2 over an orthonormal function family.
class ExpansionPairModel final : public DensityModel {
  public:
    ExpansionPairModel(Seed seed, kernels::Recurrence rec, const FockVector& first, const FockVector& second,
                       double nu = 0.0)
        : seed_(seed), rec_(std::move(rec)), nu_(nu), log_gamma_nu_(std::lgamma(nu + 1.0)) {
        bool complex = false;
        for (std::size_t n = 0; n < first.size(); ++n) {
            if (first[n].imag() != 0.0 || second[n].imag() != 0.0) complex = true;
        }
        for (std::size_t n = 0; n < first.size(); ++n) {
            re1_.push_back(first[n].real());
            re2_.push_back(second[n].real());
            if (complex) {
                im1_.push_back(first[n].imag());
                im2_.push_back(second[n].imag());
            }
        }
    }

    void eval(std::span<const double> x, std::span<const double>, std::span<double> rho1,
              std::span<double> rho2) const override {
        std::array<double, kChunk> seed{};
        for (std::size_t start = 0; start < x.size(); start += kChunk) {
            const std::size_t len = std::min(kChunk, x.size() - start);
            for (std::size_t i = 0; i < len; ++i) seed[i] = seed_value(x[start + i]);
            kernels::density_pair(rec_, x.subspan(start, len), std::span<const double>(seed.data(), len),
                                  {re1_, im1_}, {re2_, im2_}, rho1.subspan(start, len), rho2.subspan(start, len));
        }
        // r^nu diverges at the origin for nu < 0.
        if (seed_ == Seed::laguerre && nu_ < 0.0) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] <= 0.0) rho1[i] = rho2[i] = HUGE_VAL;
            }
        }
    }

  private:
    double seed_value(double x) const {
        switch (seed_) {
            case Seed::hermite: return std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
            case Seed::legendre: return 1.0 / std::numbers::sqrt2;
            case Seed::laguerre:
                if (x <= 0.0) return nu_ == 0.0 ? std::exp(-0.5 * log_gamma_nu_) : 0.0;
                return std::exp(0.5 * (nu_ * std::log(x) - x - log_gamma_nu_));
        }
        return 0.0;
    }

    Seed seed_;
    kernels::Recurrence rec_;
    double nu_;
    double log_gamma_nu_;
    std::vector<double> re1_, im1_, re2_, im2_;
};

class PacsPairModel final : public DensityModel {
  public:
    PacsPairModel(double alpha, unsigned n) : alpha_(alpha), n_(n) {}

    void eval(std::span<const double> u, std::span<const double> v, std::span<double> rho1,
              std::span<double> rho2) const override {
        for (std::size_t i = 0; i < u.size(); ++i) {
            const Complex beta(u[i], v.empty() ? 0.0 : v[i]);
            rho1[i] = pacs_overlap_sq(alpha_, n_, beta);
            rho2[i] = pacs_overlap_sq(-alpha_, n_, beta);
        }
    }

  private:
    double alpha_;
    unsigned n_;
};

// |<x| e^{i gamma p^3} |alpha>|^2 through the Airy closed form, evaluated in
// log space so the e^{1/(108 gamma^2)} prefactor never materializes.
class CubicPhasePairModel final : public DensityModel {
  public:
    CubicPhasePairModel(double alpha, double gamma) : centre_(std::numbers::sqrt2 * alpha), gamma_(gamma) {}

    static double density(double u, double gamma) {
        if (gamma < 0.0) {
            // e^{-i|g|p^3} mirrors the wavefunction: psi_{-g}(u) = psi_g(-u).
            u = -u;
            gamma = -gamma;
        }
        const double g3 = 3.0 * gamma;
        const double z = (u + 1.0 / (12.0 * gamma)) / std::cbrt(g3);
        const auto ai = specfun::airy_ai_log(z);
        if (ai.sign == 0) return 0.0;
        const double log_psi = 0.25 * std::log(4.0 * std::numbers::pi) - std::log(g3) / 3.0 +
                               1.0 / (108.0 * gamma * gamma) + u / (6.0 * gamma) + ai.log_abs;
        return std::exp(2.0 * log_psi);
    }

    void eval(std::span<const double> x, std::span<const double>, std::span<double> rho1,
              std::span<double> rho2) const override {
        for (std::size_t i = 0; i < x.size(); ++i) {
            rho1[i] = density(x[i] - centre_, gamma_);
            rho2[i] = density(x[i] + centre_, gamma_);
        }
    }

  private:
    double centre_;
    double gamma_;
};

void require_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::domain, "signal amplitude must be finite and >= 0");
}

}  // namespace

DensityPair build_density(const ReceiverSpec& spec, double alpha) {
    require_alpha(alpha);
    spec.validate();
    const double shift = std::numbers::sqrt2 * alpha;
    switch (spec.family) {
        case Family::homodyne:
            return DensityPair(LabelDomain::line, {-shift - 12.0, shift + 12.0},
                               std::make_shared<GaussianPairModel>(alpha));
        case Family::rotation_homodyne: {
            const RotationParams& params = *spec.rotation;
            const std::size_t ncut = rotation_cutoff(params, alpha);
            const RotationSpec rot = materialize_rotation(params, ncut);
            const FockVector plus = apply_projector_rotation(coherent_fock(alpha, ncut), rot);
            const FockVector minus = apply_projector_rotation(coherent_fock(-alpha, ncut), rot);
            double mu = alpha * alpha;
            for (double b : params.betas) mu = std::max(mu, b * b);
            for (unsigned n : params.fock_set) mu = std::max(mu, static_cast<double>(n));
            const double half = std::sqrt(2.0 * mu + 1.0) + 12.0;
            return DensityPair(LabelDomain::line, {-half, half},
                               std::make_shared<ExpansionPairModel>(
                                   Seed::hermite, kernels::hermite_function_recurrence(ncut + 1), plus, minus));
        }
        case Family::legendre: {
            const std::size_t ncut = truncation_for(alpha * alpha);
            return DensityPair(LabelDomain::interval_s, {-1.0, 1.0},
                               std::make_shared<ExpansionPairModel>(Seed::legendre,
                                                                    kernels::legendre_normalized_recurrence(ncut + 1),
                                                                    coherent_fock(alpha, ncut), coherent_fock(-alpha, ncut)));
        }
        case Family::laguerre: {
            const std::size_t ncut = truncation_for(alpha * alpha);
            const double r_max = 4.0 * static_cast<double>(ncut) + 50.0;
            return DensityPair(
                LabelDomain::halfline_r, {0.0, r_max},
                std::make_shared<ExpansionPairModel>(Seed::laguerre,
                                                     kernels::laguerre_normalized_recurrence(ncut + 1, *spec.nu),
                                                     coherent_fock(alpha, ncut), coherent_fock(-alpha, ncut), *spec.nu));
        }
        case Family::pacs: {
            const double radius = 8.0 + std::sqrt(2.0 * static_cast<double>(*spec.n_add));
            return DensityPair(LabelDomain::plane_beta, {-alpha - radius, alpha + radius, -radius, radius},
                               std::make_shared<PacsPairModel>(alpha, *spec.n_add), true);
        }
        case Family::cpg: {
            const double g = std::fabs(*spec.gamma);
            const double near = 12.0 + 40.0 * std::cbrt(g);
            // The slow side of the Airy tail decays like e^{u/(3 gamma)}.
            const double far = std::max(near, 66.0 * g);
            const double lo = *spec.gamma > 0.0 ? far : near;
            const double hi = *spec.gamma > 0.0 ? near : far;
            return DensityPair(LabelDomain::line, {-shift - lo, shift + hi},
                               std::make_shared<CubicPhasePairModel>(alpha, *spec.gamma));
        }
    }
    throw Error(ErrorKind::validation, "unknown receiver family");
}

namespace {

double integrate_line(const DensityPair& pair, bool first, double v, double tol) {
    const Window& w = pair.window();
    const bool plane = pair.two_dimensional();
    auto f = [&](std::span<const double> x, std::span<double> out) {
        std::array<double, 15> other{};
        std::array<double, 15> vs{};
        vs.fill(v);
        std::span<double> sink(other.data(), x.size());
        std::span<const double> vspan = plane ? std::span<const double>(vs.data(), x.size()) : std::span<const double>{};
        if (first) {
            pair.eval(x, vspan, out, sink);
        } else {
            pair.eval(x, vspan, sink, out);
        }
    };
    const std::array<double, 2> bounds{w.lo, w.hi};
    quad::Options opts;
    opts.abs_tol = tol;
    opts.initial_panels = 16;
    return quad::integrate(f, bounds, opts).value;
}

}  // namespace

double normalization_check(const DensityPair& pair) {
    double worst = 0.0;
    for (bool first : {true, false}) {
        double total = 0.0;
        if (!pair.two_dimensional()) {
            total = integrate_line(pair, first, 0.0, 1e-12);
        } else {
            const Window& w = pair.window();
            auto outer = [&](std::span<const double> vs, std::span<double> out) {
                for (std::size_t i = 0; i < vs.size(); ++i) out[i] = integrate_line(pair, first, vs[i], 1e-11);
            };
            const bool mirror = pair.mirror_symmetric_v();
            const std::array<double, 2> bounds{mirror ? 0.0 : w.v_lo, w.v_hi};
            quad::Options opts;
            opts.abs_tol = 1e-10;
            opts.initial_panels = 8;
            total = quad::integrate(outer, bounds, opts).value * (mirror ? 2.0 : 1.0);
        }
        worst = std::max(worst, std::fabs(total - 1.0));
    }
    return worst;
}

double partial_vacuum_mass(double a) {
    if (!(a >= 0.0) || std::isnan(a)) throw Error(ErrorKind::domain, "partial_vacuum_mass: a must be >= 0");
    if (a >= 40.0) return 1.0;
    const FockVector vacuum = fock_basis(0, 0);
    auto density = [&vacuum](std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::norm(quad_overlap(x[i], vacuum));
    };
    // Mass inside = 1 - 2 * (mass beyond a); the tail is non-negative, so the
    // result never exceeds 1.
    const std::array<double, 2> bounds{a, 40.0};
    quad::Options opts;
    opts.abs_tol = 1e-15;
    opts.initial_panels = 16;
    const double tail = quad::integrate(density, bounds, opts).value;
    return std::max(0.0, 1.0 - 2.0 * tail);
}

}  // namespace cvdisc
