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

#include "cvdisc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "cvdisc/error.hpp"

namespace cvdisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBetaStep = 0.05;
constexpr double kBetaTol = 1e-4;
constexpr double kFlat = 1e-12;

void require_positive_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::domain, "optimization requires alpha > 0");
}

double wrap_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

double radical_inverse(unsigned i, unsigned base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (i > 0) {
        r += f * (i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.5;
    std::size_t evals = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, double step, std::size_t budget) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> pts(d + 1, x0);
    std::vector<double> vals(d + 1);
    NelderMeadResult out;
    for (std::size_t j = 0; j < d; ++j) pts[j + 1][j] += step;
    for (std::size_t j = 0; j <= d; ++j) {
        vals[j] = f(pts[j]);
        ++out.evals;
    }
    std::vector<std::size_t> order(d + 1);
    auto sort_simplex = [&] {
        for (std::size_t j = 0; j <= d; ++j) order[j] = j;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (std::size_t j : order) {
            p2.push_back(pts[j]);
            v2.push_back(vals[j]);
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };
    auto along = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
        std::vector<double> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = c[j] + t * (w[j] - c[j]);
        return r;
    };
    while (out.evals < budget) {
        sort_simplex();
        double size = 0.0;
        for (std::size_t k = 1; k <= d; ++k) {
            for (std::size_t j = 0; j < d; ++j) size = std::max(size, std::fabs(pts[k][j] - pts[0][j]));
        }
        if (vals[d] - vals[0] <= 1e-13 && size <= 1e-7) {
            out.converged = true;
            break;
        }
        std::vector<double> centroid(d, 0.0);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j) centroid[j] += pts[k][j] / static_cast<double>(d);
        }
        const std::vector<double> xr = along(centroid, pts[d], -1.0);
        const double fr = f(xr);
        ++out.evals;
        if (fr < vals[0]) {
            const std::vector<double> xe = along(centroid, pts[d], -2.0);
            const double fe = f(xe);
            ++out.evals;
            if (fe < fr) {
                pts[d] = xe;
                vals[d] = fe;
            } else {
                pts[d] = xr;
                vals[d] = fr;
            }
            continue;
        }
        if (fr < vals[d - 1]) {
            pts[d] = xr;
            vals[d] = fr;
            continue;
        }
        const bool outside = fr < vals[d];
        const std::vector<double> xc = along(centroid, outside ? xr : pts[d], 0.5);
        const double fc = f(xc);
        ++out.evals;
        if (fc < std::min(fr, vals[d])) {
            pts[d] = xc;
            vals[d] = fc;
            continue;
        }
        for (std::size_t k = 1; k <= d; ++k) {
            pts[k] = along(pts[0], pts[k], 0.5);
            vals[k] = f(pts[k]);
            ++out.evals;
        }
    }
    sort_simplex();
    out.x = pts[0];
    out.f = vals[0];
    return out;
}

}  // namespace

double beta_ceiling(double alpha) { return 0.5 * std::fabs(alpha) + 3.0; }

OptResult optimize_beta(RotationKind kind, double alpha, std::optional<double> warm_start, const TvOptions& tv) {
    if (kind == RotationKind::fock) throw Error(ErrorKind::validation, "optimize_beta: fock rotations have no amplitude");
    require_positive_alpha(alpha);
    OptResult res;
    std::map<double, double> seen;
    auto pe_at = [&](double beta) {
        auto it = seen.find(beta);
        if (it != seen.end()) return it->second;
        const RotationParams params{kind, {beta}, {}, {std::numbers::pi}, 0.0};
        const double pe = error_rate(ReceiverSpec::rotated(params), alpha, tv).value;
        ++res.n_evals;
        seen.emplace(beta, pe);
        return pe;
    };

    const double beta_max = beta_ceiling(alpha);
    const auto k_max = static_cast<long>(std::floor(beta_max / kBetaStep + 1e-9));
    auto scan = [&](long k_lo, long k_hi) {
        long best = k_lo;
        double best_pe = 2.0;
        for (long k = k_lo; k <= k_hi; ++k) {
            const double pe = pe_at(kBetaStep * static_cast<double>(k));
            if (pe < best_pe) {
                best_pe = pe;
                best = k;
            }
        }
        return best;
    };

    long k_lo = 1, k_hi = k_max;
    if (warm_start && std::isfinite(*warm_start)) {
        k_lo = std::max<long>(1, static_cast<long>(std::ceil((*warm_start - 0.5) / kBetaStep - 1e-9)));
        k_hi = std::min<long>(k_max, static_cast<long>(std::floor((*warm_start + 0.5) / kBetaStep + 1e-9)));
        if (k_lo > k_hi) {
            k_lo = 1;
            k_hi = k_max;
        }
    }
    long k_best = scan(k_lo, k_hi);
    const bool at_edge = (k_best == k_lo && k_lo > 1) || (k_best == k_hi && k_hi < k_max);
    if (at_edge) {
        k_lo = 1;
        k_hi = k_max;
        k_best = scan(k_lo, k_hi);
    }

    double lo_pe = 2.0, hi_pe = -1.0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double pe = seen.at(kBetaStep * static_cast<double>(k));
        lo_pe = std::min(lo_pe, pe);
        hi_pe = std::max(hi_pe, pe);
    }
    if (hi_pe - lo_pe <= kFlat) {
        res.no_improvement = true;
        res.converged = true;
        res.best_params = {kBetaStep * static_cast<double>(k_best)};
        res.best_pe = error_rate(ReceiverSpec::homodyne(), alpha, tv).value;
        ++res.n_evals;
        return res;
    }

    const double centre = kBetaStep * static_cast<double>(k_best);
    double a = std::max(centre - kBetaStep, 1e-6);
    double b = std::min(centre + kBetaStep, beta_max);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = pe_at(c), fd = pe_at(d);
    while (b - a > kBetaTol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = pe_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = pe_at(d);
        }
    }
    double best_beta = centre, best_pe = seen.at(centre);
    for (const auto& [beta, pe] : seen) {
        if (pe < best_pe) {
            best_pe = pe;
            best_beta = beta;
        }
    }
    res.best_params = {best_beta};
    res.best_pe = best_pe;
    res.converged = true;
    return res;
}

OptResult optimize_thetas(const std::vector<unsigned>& fock_set, double alpha, const ThetaOptions& opts,
                          const TvOptions& tv) {
    require_positive_alpha(alpha);
    const std::size_t d = fock_set.size();
    if (d == 0 || d > 8) throw Error(ErrorKind::validation, "optimize_thetas: set size must be 1..8");
    OptResult res;
    auto pe_at = [&](const std::vector<double>& theta) {
        std::vector<double> wrapped(theta.size());
        std::transform(theta.begin(), theta.end(), wrapped.begin(), wrap_angle);
        return error_rate(ReceiverSpec::fock_rotation(fock_set, wrapped), alpha, tv).value;
    };

    std::vector<std::vector<double>> seeds;
    seeds.emplace_back(d, std::numbers::pi);
    seeds.emplace_back(d, std::numbers::pi / 2.0);
    seeds.emplace_back(d, 0.0);
    constexpr unsigned primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    for (unsigned i = 1; i <= 8; ++i) {
        std::vector<double> s(d);
        for (std::size_t j = 0; j < d; ++j) s[j] = kTwoPi * radical_inverse(i, primes[j]);
        seeds.push_back(std::move(s));
    }
    for (const auto& s : opts.extra_seeds) {
        if (s.size() != d) throw Error(ErrorKind::shape, "optimize_thetas: extra seed has the wrong dimension");
        seeds.push_back(s);
    }

    bool first = true;
    for (const auto& seed : seeds) {
        NelderMeadResult nm = nelder_mead(pe_at, seed, 0.4, opts.budget_per_start);
        res.n_evals += nm.evals;
        if (first || nm.f < res.best_pe) {
            res.best_pe = nm.f;
            res.best_params = nm.x;
            res.converged = nm.converged;
            first = false;
        }
    }
    std::transform(res.best_params.begin(), res.best_params.end(), res.best_params.begin(), wrap_angle);
    return res;
}

std::vector<double> embed_thetas(const std::vector<unsigned>& from_set, const std::vector<double>& thetas,
                                 const std::vector<unsigned>& to_set) {
    if (from_set.size() != thetas.size()) throw Error(ErrorKind::shape, "embed_thetas: one angle per state required");
    std::vector<double> out(to_set.size(), 0.0);
    for (std::size_t i = 0; i < from_set.size(); ++i) {
        auto it = std::find(to_set.begin(), to_set.end(), from_set[i]);
        if (it == to_set.end()) throw Error(ErrorKind::validation, "embed_thetas: sets are not nested");
        out[static_cast<std::size_t>(it - to_set.begin())] = thetas[i];
    }
    return out;
}

std::vector<double> params_of(const ReceiverSpec& spec) {
    if (!spec.rotation) return {};
    return spec.rotation->kind == RotationKind::fock ? spec.rotation->thetas : spec.rotation->betas;
}

ReceiverSpec with_params(const ReceiverSpec& spec, const std::vector<double>& params) {
    if (!spec.rotation) return spec;
    ReceiverSpec out = spec;
    std::vector<double>& target = out.rotation->kind == RotationKind::fock ? out.rotation->thetas : out.rotation->betas;
    if (target.size() != params.size()) throw Error(ErrorKind::shape, "with_params: parameter count mismatch");
    target = params;
    return out;
}

ErrorCurve sweep_error_curve(const ReceiverSpec& spec, const std::vector<double>& alpha_sq_grid, bool optimize,
                             const TvOptions& tv) {
    spec.validate();
    for (std::size_t i = 0; i < alpha_sq_grid.size(); ++i) {
        const double a2 = alpha_sq_grid[i];
        if (!(a2 > 0.0) || !std::isfinite(a2)) throw Error(ErrorKind::validation, "sweep grid must be positive");
        if (i > 0 && !(a2 > alpha_sq_grid[i - 1])) {
            throw Error(ErrorKind::validation, "sweep grid must be strictly increasing");
        }
    }
    const bool tunable = optimize && spec.rotation.has_value();
    if (tunable && spec.rotation->kind != RotationKind::fock && spec.rotation->size() != 1) {
        throw Error(ErrorKind::validation, "beta optimization supports a single rotation state");
    }
    ErrorCurve curve{spec, {}};
    std::optional<double> warm_beta;
    std::vector<double> warm_thetas;
    for (double a2 : alpha_sq_grid) {
        const double alpha = std::sqrt(a2);
        CurvePoint pt;
        pt.alpha_sq = a2;
        if (tunable && spec.rotation->kind != RotationKind::fock) {
            const OptResult r = optimize_beta(spec.rotation->kind, alpha, warm_beta, tv);
            pt.pe = r.best_pe;
            pt.params = r.best_params;
            pt.no_improvement = r.no_improvement;
            warm_beta = r.best_params.front();
            const QuadratureReport rep = error_rate(with_params(spec, r.best_params), alpha, tv);
            pt.est_abs_error = rep.est_abs_error;
            pt.accuracy_warning = rep.accuracy_warning;
        } else if (tunable) {
            ThetaOptions topts;
            if (!warm_thetas.empty()) topts.extra_seeds.push_back(warm_thetas);
            const OptResult r = optimize_thetas(spec.rotation->fock_set, alpha, topts, tv);
            pt.pe = r.best_pe;
            pt.params = r.best_params;
            warm_thetas = r.best_params;
            const QuadratureReport rep = error_rate(with_params(spec, r.best_params), alpha, tv);
            pt.est_abs_error = rep.est_abs_error;
            pt.accuracy_warning = rep.accuracy_warning;
        } else {
            const QuadratureReport rep = error_rate(spec, alpha, tv);
            pt.pe = rep.value;
            pt.params = params_of(spec);
            pt.est_abs_error = rep.est_abs_error;
            pt.accuracy_warning = rep.accuracy_warning;
        }
        pt.pe_helstrom = helstrom_bpsk(alpha);
        pt.pe_gaussian = gaussian_limit(alpha);
        pt.pe_kennedy = kennedy_error(alpha);
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

FitResult linear_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw Error(ErrorKind::rank, "linear_fit: at least two points required");
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (!(sxx > 0.0)) throw Error(ErrorKind::rank, "linear_fit: abscissae are all equal");
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (fit.intercept + fit.slope * x);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw Error(ErrorKind::validation, "grid bounds must be finite");
    }
    if (!(step > 0.0)) throw Error(ErrorKind::validation, "grid step must be > 0");
    if (!(lo < hi)) throw Error(ErrorKind::validation, "grid requires min < max");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6)) + 1;
    if (count > 1000000) throw Error(ErrorKind::validation, "grid has too many points");
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k) {
        // Snap to 12 significant digits so 0.01 * 7 prints as 0.07.
        const double x = lo + step * static_cast<double>(k);
        const double scale = std::pow(10.0, 11 - static_cast<int>(std::floor(std::log10(std::fabs(x) + 1e-300))));
        grid[k] = std::round(x * scale) / scale;
    }
    return grid;
}

ScalingRun fit_beta_scaling(RotationKind kind, const std::vector<double>& alpha_sq_grid, const TvOptions& tv) {
    ScalingRun run;
    std::optional<double> warm;
    std::vector<std::pair<double, double>> pts;
    for (double a2 : alpha_sq_grid) {
        const OptResult r = optimize_beta(kind, std::sqrt(a2), warm, tv);
        warm = r.best_params.front();
        run.alpha_sq.push_back(a2);
        run.beta.push_back(r.best_params.front());
        run.pe.push_back(r.best_pe);
        pts.emplace_back(a2, r.best_params.front());
    }
    run.fit = linear_fit(pts);
    return run;
}

}  // namespace cvdisc
