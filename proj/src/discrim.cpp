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

#include "cvdisc/discrim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cvdisc/error.hpp"
#include "cvdisc/quadrature.hpp"
#include "cvdisc/specfun.hpp"

namespace cvdisc {

namespace {

// rho_1 - rho_2 along a line of constant v.
class LineDiff {
  public:
    LineDiff(const DensityPair& pair, double v) : pair_(pair), v_(v) {}

    void operator()(std::span<const double> x, std::span<double> out) const {
        constexpr std::size_t kChunk = 256;
        std::array<double, kChunk> r1{}, r2{}, vs{};
        vs.fill(v_);
        for (std::size_t start = 0; start < x.size(); start += kChunk) {
            const std::size_t len = std::min(kChunk, x.size() - start);
            std::span<const double> vspan;
            if (pair_.two_dimensional()) vspan = {vs.data(), len};
            pair_.eval(x.subspan(start, len), vspan, {r1.data(), len}, {r2.data(), len});
            for (std::size_t i = 0; i < len; ++i) out[start + i] = r1[i] - r2[i];
        }
    }

    double at(double x) const {
        double d = 0.0;
        (*this)({&x, 1}, {&d, 1});
        return d;
    }

  private:
    const DensityPair& pair_;
    double v_;
};

int sign_of(double d, double floor) {
    if (!std::isfinite(d) || std::fabs(d) <= floor) return 0;
    return d > 0.0 ? 1 : -1;
}

struct Bracket {
    double lo, hi;
    std::size_t i_lo, i_hi;
};

struct LineResult {
    double integral = 0.0;
    double abs_error = 0.0;
    std::size_t n_evals = 0;
    bool converged = true;
    std::vector<double> kinks;
};

LineResult integrate_abs_diff(const DensityPair& pair, double lo, double hi, double v, double tol,
                              const TvOptions& opts) {
    LineResult out;
    out.kinks = locate_kinks(pair, lo, hi, v, opts, &out.n_evals);
    std::vector<double> bounds;
    bounds.reserve(out.kinks.size() + 2);
    bounds.push_back(lo);
    for (double k : out.kinks) {
        if (k > bounds.back() && k < hi) bounds.push_back(k);
    }
    bounds.push_back(hi);
    LineDiff diff(pair, v);
    auto integrand = [&diff](std::span<const double> x, std::span<double> f) {
        diff(x, f);
        for (double& y : f) y = std::isfinite(y) ? std::fabs(y) : 0.0;
    };
    quad::Options qopts;
    qopts.abs_tol = tol;
    qopts.max_evals = opts.max_evals;
    qopts.initial_panels = 2;
    const quad::Result r = quad::integrate(integrand, bounds, qopts);
    out.integral = r.value;
    out.abs_error = r.abs_error;
    out.n_evals += r.n_evals;
    out.converged = r.converged;
    return out;
}

}  // namespace

std::vector<double> locate_kinks(const DensityPair& pair, double lo, double hi, double v, const TvOptions& opts,
                                 std::size_t* n_evals) {
    LineDiff diff(pair, v);
    std::size_t evals = 0;
    std::size_t probes = std::max<std::size_t>(opts.probes, 8);
    std::vector<Bracket> brackets;
    std::vector<double> xs, ds;
    double floor = 0.0;
    for (;;) {
        xs.resize(probes + 1);
        ds.resize(probes + 1);
        for (std::size_t i = 0; i <= probes; ++i) {
            xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(probes);
        }
        diff(xs, ds);
        evals += xs.size();
        double peak = 0.0;
        for (double d : ds) {
            if (std::isfinite(d)) peak = std::max(peak, std::fabs(d));
        }
        // Crossings where |rho_1 - rho_2| never rises above rounding noise
        // cannot move the integral and are ignored.
        floor = 1e-13 * peak;
        brackets.clear();
        int last_sign = 0;
        std::size_t last_i = 0;
        for (std::size_t i = 0; i <= probes; ++i) {
            const int s = sign_of(ds[i], floor);
            if (s == 0) continue;
            if (last_sign != 0 && s != last_sign) brackets.push_back({xs[last_i], xs[i], last_i, i});
            last_sign = s;
            last_i = i;
        }
        bool crowded = false;
        for (std::size_t k = 0; k + 2 < brackets.size(); ++k) {
            if (brackets[k].i_hi - brackets[k].i_lo == 1 && brackets[k + 1].i_lo == brackets[k].i_hi &&
                brackets[k + 1].i_hi - brackets[k + 1].i_lo == 1 && brackets[k + 2].i_lo == brackets[k + 1].i_hi &&
                brackets[k + 2].i_hi - brackets[k + 2].i_lo == 1) {
                crowded = true;
                break;
            }
        }
        if (!crowded || probes * 2 > opts.max_probes) break;
        probes *= 2;
    }
    std::vector<double> kinks;
    kinks.reserve(brackets.size());
    for (const Bracket& b : brackets) {
        double a = b.lo, c = b.hi;
        const int sa = sign_of(diff.at(a), floor);
        evals += 1;
        for (int it = 0; it < 200 && c - a > opts.kink_tol; ++it) {
            const double m = 0.5 * (a + c);
            if (m <= a || m >= c) break;
            const int sm = sign_of(diff.at(m), floor);
            evals += 1;
            if (sm == 0) {
                a = c = m;
                break;
            }
            if (sm == sa) {
                a = m;
            } else {
                c = m;
            }
        }
        kinks.push_back(0.5 * (a + c));
    }
    if (n_evals != nullptr) *n_evals += evals;
    return kinks;
}

QuadratureReport error_rate_tv(const DensityPair& pair, const TvOptions& opts) {
    QuadratureReport rep;
    const Window& w = pair.window();
    if (!pair.two_dimensional()) {
        LineResult line = integrate_abs_diff(pair, w.lo, w.hi, 0.0, 4.0 * opts.abs_tol, opts);
        rep.value = 0.5 - 0.25 * line.integral;
        rep.est_abs_error = 0.25 * line.abs_error;
        rep.n_evals = line.n_evals;
        rep.kinks = std::move(line.kinks);
        rep.accuracy_warning = !line.converged || rep.est_abs_error > opts.abs_tol;
    } else {
        const bool mirror = pair.mirror_symmetric_v();
        const double v_lo = mirror ? 0.0 : w.v_lo;
        const double weight = mirror ? 2.0 : 1.0;
        TvOptions inner_opts = opts;
        inner_opts.probes = std::max<std::size_t>(256, opts.probes / 8);
        const double inner_tol = 0.1 * opts.plane_tol / (w.v_hi - v_lo);
        double inner_error = 0.0;
        bool inner_ok = true;
        std::size_t evals = 0;
        auto outer = [&](std::span<const double> vs, std::span<double> out) {
            for (std::size_t i = 0; i < vs.size(); ++i) {
                LineResult line = integrate_abs_diff(pair, w.lo, w.hi, vs[i], inner_tol, inner_opts);
                out[i] = line.integral;
                inner_error = std::max(inner_error, line.abs_error);
                inner_ok = inner_ok && line.converged;
                evals += line.n_evals;
            }
        };
        const std::array<double, 2> bounds{v_lo, w.v_hi};
        quad::Options qopts;
        qopts.abs_tol = 4.0 * opts.plane_tol / weight;
        qopts.initial_panels = 4;
        qopts.max_evals = 20000;
        const quad::Result r = quad::integrate(outer, bounds, qopts);
        rep.value = 0.5 - 0.25 * weight * r.value;
        rep.est_abs_error = 0.25 * weight * (r.abs_error + inner_error * (w.v_hi - v_lo));
        rep.n_evals = evals;
        rep.kinks = locate_kinks(pair, w.lo, w.hi, 0.0, inner_opts);
        rep.accuracy_warning = !r.converged || !inner_ok || rep.est_abs_error > opts.plane_tol;
    }
    rep.value = std::clamp(rep.value, 0.0, 0.5);
    return rep;
}

QuadratureReport error_rate(const ReceiverSpec& spec, double alpha, const TvOptions& opts) {
    return error_rate_tv(build_density(spec, alpha), opts);
}

namespace {
void require_nonnegative(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::domain, "alpha must be finite and >= 0");
}
}  // namespace

double helstrom_bpsk(double alpha) {
    require_nonnegative(alpha);
    // 1 - sqrt(1 - e) = e / (1 + sqrt(1 - e)) avoids cancellation at large alpha.
    const double e = std::exp(-4.0 * alpha * alpha);
    return 0.5 * e / (1.0 + std::sqrt(1.0 - e));
}

double gaussian_limit(double alpha) {
    require_nonnegative(alpha);
    return 0.5 * specfun::erfc(std::numbers::sqrt2 * alpha);
}

double kennedy_error(double alpha) {
    require_nonnegative(alpha);
    return 0.5 * std::exp(-4.0 * alpha * alpha);
}

double helstrom_pure(double overlap_sq) {
    if (!(overlap_sq >= 0.0 && overlap_sq <= 1.0)) throw Error(ErrorKind::domain, "overlap_sq must lie in [0, 1]");
    return 0.5 * overlap_sq / (1.0 + std::sqrt(1.0 - overlap_sq));
}

}  // namespace cvdisc
