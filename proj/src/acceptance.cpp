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

#include "cvdisc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "cvdisc/discrim.hpp"
#include "cvdisc/error.hpp"
#include "cvdisc/optimize.hpp"
#include "cvdisc/oracles.hpp"
#include "cvdisc/receivers.hpp"
#include "cvdisc/report.hpp"
#include "cvdisc/stellar.hpp"

namespace cvdisc::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Context {
  public:
    explicit Context(const Options& opts) : opts_(opts) {}

    double tol(double base) const { return base * opts_.tolerance_scale; }
    const Options& opts() const { return opts_; }

    void emit(const std::string& name, const std::string& content) const {
        if (opts_.out_dir.empty()) return;
        std::filesystem::create_directories(opts_.out_dir);
        std::ofstream f(std::filesystem::path(opts_.out_dir) / name, std::ios::binary);
        f << content;
        if (!f) throw Error(ErrorKind::validation, "cannot write artifact " + name);
    }

  private:
    Options opts_;
};

std::string fmt(const char* pattern, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string fmt(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::string fmt(const char* pattern, double a, double b, double c) {
    char buf[200];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail.clear();
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += why;
}

double pe_of(const ReceiverSpec& spec, double alpha_sq) { return error_rate(spec, std::sqrt(alpha_sq)).value; }

ReceiverSpec coherent_fit_spec(double a2) { return ReceiverSpec::coherent_rotation(1.07 + 0.296 * a2, kPi); }
ReceiverSpec cat_fit_spec(double a2) { return ReceiverSpec::cat_rotation(0.715 + 0.355 * a2, kPi); }

// 1
Outcome closed_form(const Context& ctx) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double a2 : {0.01, 0.25, 1.0, 2.25}) {
        const double alpha = std::sqrt(a2);
        const double pe = error_rate(ReceiverSpec::homodyne(), alpha).value;
        const double ref = 0.5 * std::erfc(std::numbers::sqrt2 * alpha);
        worst = std::max(worst, std::fabs(pe - ref));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail = fmt("max |pe - erfc form| = %.3g", worst);
    if (worst > ctx.tol(1e-7)) fail(o, fmt("deviation %.3g exceeds %.3g", worst, ctx.tol(1e-7)));
    if (secs >= 1.0) fail(o, fmt("runtime %.3g s >= 1 s", secs));
    return o;
}

// 2
Outcome identity_rotation(const Context& ctx) {
    Outcome o;
    const std::vector<ReceiverSpec> rotations = {
        ReceiverSpec::coherent_rotation(0.8, 0.0),
        ReceiverSpec::cat_rotation(1.1, 0.0),
        ReceiverSpec::fock_rotation({0, 1, 2}, {0.0, 0.0, 0.0}),
    };
    double worst_pe = 0.0, worst_rho = 0.0;
    for (double a2 : {0.01, 0.25, 1.0, 2.25}) {
        const double alpha = std::sqrt(a2);
        const DensityPair hom = build_density(ReceiverSpec::homodyne(), alpha);
        const double pe_hom = error_rate_tv(hom).value;
        for (const auto& spec : rotations) {
            const DensityPair rot = build_density(spec, alpha);
            worst_pe = std::max(worst_pe, std::fabs(error_rate_tv(rot).value - pe_hom));
            for (int i = -60; i <= 60; ++i) {
                const double x = 0.1 * i;
                const auto [h1, h2] = hom(x);
                const auto [r1, r2] = rot(x);
                worst_rho = std::max({worst_rho, std::fabs(h1 - r1), std::fabs(h2 - r2)});
            }
        }
    }
    o.detail = fmt("max |pe diff| = %.3g, max |rho diff| = %.3g", worst_pe, worst_rho);
    if (worst_pe > ctx.tol(1e-10)) fail(o, fmt("pe deviation %.3g exceeds %.3g", worst_pe, ctx.tol(1e-10)));
    if (worst_rho > ctx.tol(1e-12)) fail(o, fmt("density deviation %.3g exceeds %.3g", worst_rho, ctx.tol(1e-12)));
    return o;
}

// 3
Outcome bounds_chain(const Context& ctx) {
    Outcome o;
    struct Named {
        std::string name;
        std::function<ReceiverSpec(double)> make;
    };
    const std::vector<Named> families = {
        {"homodyne", [](double) { return ReceiverSpec::homodyne(); }},
        {"coherent_rotation", coherent_fit_spec},
        {"cat_rotation", cat_fit_spec},
        {"fock_rotation", [](double) { return ReceiverSpec::fock_rotation({0, 1, 2}, {kPi, kPi, kPi}); }},
        {"legendre", [](double) { return ReceiverSpec::legendre(); }},
        {"laguerre", [](double) { return ReceiverSpec::laguerre(10.0); }},
        {"pacs", [](double) { return ReceiverSpec::pacs(1); }},
        {"heterodyne", [](double) { return ReceiverSpec::heterodyne(); }},
        {"cpg", [](double) { return ReceiverSpec::cpg(0.1); }},
    };
    double min_gap = 1.0, max_pe = 0.0;
    std::size_t checked = 0;
    for (const auto& fam : families) {
        for (int k = 1; k <= 30; ++k) {
            const double a2 = 0.1 * k;
            const double pe = pe_of(fam.make(a2), a2);
            const double hel = helstrom_bpsk(std::sqrt(a2));
            min_gap = std::min(min_gap, pe - hel);
            max_pe = std::max(max_pe, pe);
            ++checked;
            if (pe < hel) fail(o, fam.name + fmt(" below Helstrom at alpha^2=%.2g (pe %.6g)", a2, pe));
            if (pe > 0.5 + ctx.tol(1e-8)) fail(o, fam.name + fmt(" above 1/2 at alpha^2=%.2g", a2));
        }
    }
    if (o.pass) {
        o.detail = fmt("%.0f points, min(pe - helstrom) = %.3g, max pe = %.6g", static_cast<double>(checked), min_gap,
                       max_pe);
    }
    return o;
}

// 4
Outcome near_optimality(const Context& ctx) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = make_grid(0.01, 0.70, 0.01);
    const ErrorCurve cat = sweep_error_curve(ReceiverSpec::cat_rotation(1.0, kPi), grid, true);
    const ErrorCurve coh = sweep_error_curve(ReceiverSpec::coherent_rotation(1.0, kPi), grid, true);
    ctx.emit("near_optimality_cat.csv", report::curve_csv(cat));
    ctx.emit("near_optimality_coherent.csv", report::curve_csv(coh));
    double worst_margin = 1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a2 = grid[i];
        const double gl = cat.points[i].pe_gaussian;
        worst_margin = std::min({worst_margin, gl - cat.points[i].pe, gl - coh.points[i].pe});
        if (!(cat.points[i].pe < gl)) fail(o, fmt("cat not below Gaussian limit at alpha^2=%.2g", a2));
        if (!(coh.points[i].pe < gl)) fail(o, fmt("coherent not below Gaussian limit at alpha^2=%.2g", a2));
        if (a2 < 0.45 && !(cat.points[i].pe <= coh.points[i].pe)) {
            fail(o, fmt("cat worse than coherent at alpha^2=%.2g (%.6g vs %.6g)", a2, cat.points[i].pe,
                        coh.points[i].pe));
        }
        if (a2 > 0.50 && !(coh.points[i].pe <= cat.points[i].pe)) {
            fail(o, fmt("coherent worse than cat at alpha^2=%.2g (%.6g vs %.6g)", a2, coh.points[i].pe,
                        cat.points[i].pe));
        }
    }
    // Locate the cat/coherent crossover for the record.
    double crossover = std::nan("");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double d0 = cat.points[i - 1].pe - coh.points[i - 1].pe;
        const double d1 = cat.points[i].pe - coh.points[i].pe;
        if (d0 <= 0.0 && d1 > 0.0) crossover = grid[i - 1] + (grid[i] - grid[i - 1]) * (-d0) / (d1 - d0);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 600.0) fail(o, fmt("runtime %.3g s > 600 s", secs));
    (void)ctx;
    if (o.pass) {
        o.detail = fmt("%.0f points, min margin below Gaussian %.3g, cat/coherent crossover at alpha^2 = %.3f",
                       static_cast<double>(grid.size()), worst_margin, crossover);
    }
    return o;
}

// 5
Outcome kennedy_crossover(const Context& ctx) {
    Outcome o;
    const auto grid = make_grid(0.05, 3.0, 0.05);
    const ErrorCurve coh = sweep_error_curve(ReceiverSpec::coherent_rotation(1.0, kPi), grid, true);
    ctx.emit("kennedy_crossover_coherent.csv", report::curve_csv(coh));
    double crossover = std::nan("");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a2 = grid[i];
        const auto& p = coh.points[i];
        if (a2 <= 1.3 + 1e-9 && !(p.pe < p.pe_kennedy)) fail(o, fmt("not below Kennedy at alpha^2=%.2g", a2));
        if (a2 >= 1.5 - 1e-9 && !(p.pe > p.pe_kennedy)) fail(o, fmt("not above Kennedy at alpha^2=%.2g", a2));
        if (i > 0) {
            const auto& q = coh.points[i - 1];
            const double d0 = q.pe - q.pe_kennedy, d1 = p.pe - p.pe_kennedy;
            if (d0 < 0.0 && d1 >= 0.0) crossover = grid[i - 1] + (a2 - grid[i - 1]) * (-d0) / (d1 - d0);
        }
    }
    if (o.pass) o.detail = fmt("coherent rotation meets Kennedy at alpha^2 = %.3f", crossover);
    return o;
}

// 6
Outcome legendre_suite(const Context& ctx) {
    Outcome o;
    const auto grid = make_grid(0.5, 3.0, 0.05);
    const ErrorCurve leg = sweep_error_curve(ReceiverSpec::legendre(), grid, false);
    ctx.emit("legendre.csv", report::curve_csv(leg));
    double worst = 1.0;
    for (const auto& p : leg.points) {
        worst = std::min(worst, p.pe_gaussian - p.pe);
        if (!(p.pe < p.pe_gaussian)) fail(o, fmt("Legendre not below Gaussian limit at alpha^2=%.2g", p.alpha_sq));
    }
    std::string cmp;
    for (double a2 : {2.3, 2.5}) {
        const double pe_leg = pe_of(ReceiverSpec::legendre(), a2);
        const double pe_coh = optimize_beta(RotationKind::coherent, std::sqrt(a2)).best_pe;
        cmp += fmt(", alpha^2=%.1f: %.4g vs coherent %.4g", a2, pe_leg, pe_coh);
        if (!(pe_leg < pe_coh)) fail(o, fmt("Legendre %.6g not below coherent rotation %.6g", pe_leg, pe_coh));
    }
    if (o.pass) o.detail = fmt("min margin below Gaussian %.3g", worst) + cmp;
    return o;
}

// 7
Outcome appendix_b(const Context& ctx) {
    Outcome o;
    const std::vector<unsigned> s1{1}, s2{0, 1, 2}, s3{0, 1, 2, 3, 4};
    std::string summary;
    for (double a2 : {0.25, 1.0, 2.0}) {
        const double alpha = std::sqrt(a2);
        const OptResult r1 = optimize_thetas(s1, alpha);
        ThetaOptions o2;
        o2.extra_seeds.push_back(embed_thetas(s1, r1.best_params, s2));
        const OptResult r2 = optimize_thetas(s2, alpha, o2);
        ThetaOptions o3;
        o3.extra_seeds.push_back(embed_thetas(s2, r2.best_params, s3));
        const OptResult r3 = optimize_thetas(s3, alpha, o3);
        const double gap21 = r1.best_pe - r2.best_pe;
        const double gap32 = r2.best_pe - r3.best_pe;
        if (gap21 < -ctx.tol(1e-8)) fail(o, fmt("S2 worse than S1 at alpha^2=%.2g by %.3g", a2, -gap21));
        if (gap32 < -ctx.tol(1e-8)) fail(o, fmt("S3 worse than S2 at alpha^2=%.2g by %.3g", a2, -gap32));
        summary += (summary.empty() ? "" : "; ") + fmt("alpha^2=%.2g: %.4g >= %.4g", a2, r1.best_pe, r2.best_pe) +
                   fmt(" >= %.4g", r3.best_pe);
    }
    if (o.pass) o.detail = summary;
    return o;
}

// 8
Outcome appendix_c(const Context& ctx) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = make_grid(0.01, 3.0, ctx.opts().fit_step);
    struct Target {
        RotationKind kind;
        double slope, slope_tol, intercept, intercept_tol;
    };
    const Target targets[] = {{RotationKind::coherent, 0.296, 0.030, 1.07, 0.11},
                              {RotationKind::cat, 0.355, 0.036, 0.715, 0.072}};
    std::string summary;
    for (const Target& t : targets) {
        const ScalingRun run = fit_beta_scaling(t.kind, grid);
        ctx.emit("appendix_c_" + to_string(t.kind) + ".json", report::scaling_json(t.kind, run));
        const std::string name = to_string(t.kind);
        if (std::fabs(run.fit.slope - t.slope) > ctx.tol(t.slope_tol)) {
            fail(o, name + fmt(" slope %.4f outside %.3f +- %.4g", run.fit.slope, t.slope, ctx.tol(t.slope_tol)));
        }
        if (std::fabs(run.fit.intercept - t.intercept) > ctx.tol(t.intercept_tol)) {
            fail(o, name + fmt(" intercept %.4f outside %.3f +- %.4g", run.fit.intercept, t.intercept,
                               ctx.tol(t.intercept_tol)));
        }
        summary += (summary.empty() ? "" : "; ") + name +
                   fmt(" beta* = %.4f + %.4f alpha^2 (rms %.3g)", run.fit.intercept, run.fit.slope, run.fit.rms_residual);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 1800.0) fail(o, fmt("runtime %.3g s > 1800 s", secs));
    if (o.pass) o.detail = summary;
    return o;
}

// 9
Outcome non_optimal(const Context& ctx) {
    Outcome o;
    std::string summary;
    std::string csv = "alpha_sq,pe_pacs1,pe_pacs2,pe_cpg0.1,pe_cpg1,pe_gaussian\n";
    for (double a2 : {0.5, 1.0, 2.0}) {
        const double gl = gaussian_limit(std::sqrt(a2));
        const double p1 = pe_of(ReceiverSpec::pacs(1), a2);
        const double p2 = pe_of(ReceiverSpec::pacs(2), a2);
        const double c01 = pe_of(ReceiverSpec::cpg(0.1), a2);
        const double c1 = pe_of(ReceiverSpec::cpg(1.0), a2);
        csv += report::format_number(a2) + "," + report::format_number(p1) + "," + report::format_number(p2) + "," +
               report::format_number(c01) + "," + report::format_number(c1) + "," + report::format_number(gl) + "\n";
        if (!(p2 > p1)) fail(o, fmt("alpha^2=%.2g: PACS n=2 (%.6g) not above n=1 (%.6g)", a2, p2, p1));
        if (!(p1 > gl)) fail(o, fmt("alpha^2=%.2g: PACS n=1 (%.6g) not above Gaussian (%.6g)", a2, p1, gl));
        if (!(c1 > c01)) fail(o, fmt("alpha^2=%.2g: CPG gamma=1 (%.6g) not above gamma=0.1 (%.6g)", a2, c1, c01));
        if (!(c01 > gl)) fail(o, fmt("alpha^2=%.2g: CPG gamma=0.1 (%.6g) not above Gaussian (%.6g)", a2, c01, gl));
        summary += (summary.empty() ? "" : "; ") + fmt("alpha^2=%.1f pacs %.4g/", a2, p1) + fmt("%.4g cpg %.4g/", p2, c01) +
                   fmt("%.4g", c1);
    }
    ctx.emit("non_optimal.csv", csv);
    if (o.pass) o.detail = summary;
    return o;
}

// 10
Outcome laguerre_suite(const Context& ctx) {
    Outcome o;
    const auto grid = make_grid(0.5, 3.0, 0.1);
    const ErrorCurve leg = sweep_error_curve(ReceiverSpec::legendre(), grid, false);
    std::string summary;
    for (double nu : {10.0, 15.0}) {
        const ErrorCurve lag = sweep_error_curve(ReceiverSpec::laguerre(nu), grid, false);
        ctx.emit(fmt("laguerre_nu%.0f.csv", nu), report::curve_csv(lag));
        int below = 0;
        double best_gain = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& p = lag.points[i];
            const double gain = p.pe_gaussian - p.pe;
            if (gain <= 0.0) continue;
            ++below;
            best_gain = std::max(best_gain, gain);
            const double leg_gain = p.pe_gaussian - leg.points[i].pe;
            if (!(gain < leg_gain)) {
                fail(o, fmt("nu=%.0f gain %.3g not below Legendre gain at alpha^2=%.2g", nu, gain, p.alpha_sq));
            }
        }
        if (below < 3) fail(o, fmt("nu=%.0f below Gaussian at only %.0f grid points", nu, below));
        summary += (summary.empty() ? "" : "; ") +
                   fmt("nu=%.0f below Gaussian at %.0f/%.0f points", nu, below, static_cast<double>(grid.size())) +
                   fmt(", max gain %.3g", best_gain);
    }
    if (o.pass) o.detail = summary;
    return o;
}

// 11
Outcome appendix_a(const Context& ctx) {
    Outcome o;
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const double m = partial_vacuum_mass(a);
        const double ref = a <= 3.0 ? oracle::erf_maclaurin(a) : 1.0 - std::erfc(a);
        worst = std::max(worst, std::fabs(m - ref));
        if (!(m < 1.0)) fail(o, fmt("mass reaches 1 at a=%.2g", a));
        if (std::fabs(m - ref) > ctx.tol(1e-10)) fail(o, fmt("a=%.2g: |mass - erf| = %.3g", a, std::fabs(m - ref)));
    }
    if (o.pass) o.detail = fmt("max |mass - erf(a)| = %.3g, all strictly below 1", worst);
    return o;
}

// 12
Outcome oracle_equivalence(const Context& ctx) {
    Outcome o;
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> amp(-1.5, 1.5), angle(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> count(1, 3);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n_states = count(rng);
        const double alpha = amp(rng);
        std::vector<double> betas;
        double mu = alpha * alpha;
        for (int k = 0; k < n_states; ++k) {
            betas.push_back(amp(rng));
            mu = std::max(mu, betas.back() * betas.back());
        }
        const std::size_t ncut = truncation_for(mu);
        RotationSpec rot;
        for (double b : betas) {
            rot.states.push_back(coherent_fock(b, ncut));
            rot.thetas.push_back(angle(rng));
        }
        const FockVector input = coherent_fock(alpha, ncut);
        const FockVector seq = apply_projector_rotation(input, rot);
        const FockVector lit = oracle::tsum_rotation(input, rot);
        for (std::size_t n = 0; n <= ncut; ++n) worst = std::max(worst, std::abs(seq[n] - lit[n]));
    }
    bool counts_ok = true;
    for (std::size_t m = 1; m <= 3; ++m) {
        std::size_t binom = 1;  // C(m, k + 1)
        for (std::size_t k = 0; k < m; ++k) {
            binom = binom * (m - k) / (k + 1);
            if (oracle::tsum_cardinality(m, k) != binom) counts_ok = false;
        }
    }
    o.detail = fmt("50 cases, max |sequential - expansion| = %.3g", worst);
    if (worst > ctx.tol(1e-10)) fail(o, fmt("deviation %.3g exceeds %.3g", worst, ctx.tol(1e-10)));
    if (!counts_ok) fail(o, "index-set cardinality differs from C(N+1, k+1)");
    return o;
}

// 13
Outcome stellar_suite(const Context& ctx) {
    Outcome o;
    struct Expected {
        const char* scheme;
        const char* rank;
        bool near_optimal;
    };
    const Expected table[] = {
        {"Homodyne", "0", false},
        {"Heterodyne", "0", false},
        {"Photon-added coherent states", "n", false},
        {"Cubic phase gate + homodyne", "infinite", false},
        {"Unitary Fock state rotation + homodyne", "infinite", true},
        {"Unitary cat state rotation + homodyne", "infinite", true},
        {"Unitary coherent state rotation + homodyne", "infinite", true},
        {"Generalised Laguerre polynomial states", ">=1", true},
        {"Legendre polynomial states", ">=1", true},
    };
    const auto rows = table1_rows();
    const std::string json = table1_json();
    ctx.emit("table1.json", json);
    if (rows.size() != std::size(table)) fail(o, "table1 row count differs");
    for (std::size_t i = 0; i < std::min(rows.size(), std::size(table)); ++i) {
        if (rows[i].scheme != table[i].scheme || rows[i].stellar_rank != table[i].rank ||
            rows[i].near_optimal != table[i].near_optimal) {
            fail(o, "table1 row mismatch: " + rows[i].scheme);
        }
        if (json.find("\"" + std::string(table[i].scheme) + "\"") == std::string::npos) {
            fail(o, std::string("table1 json lacks ") + table[i].scheme);
        }
    }
    const std::pair<ReceiverSpec, std::string> declared[] = {
        {ReceiverSpec::homodyne(), "0"},
        {ReceiverSpec::heterodyne(), "0"},
        {ReceiverSpec::pacs(2), "2"},
        {ReceiverSpec::cpg(0.5), "infinite"},
        {ReceiverSpec::fock_rotation({0, 1, 2}, {kPi, kPi, kPi}), "infinite"},
        {ReceiverSpec::cat_rotation(1.0, kPi), "infinite"},
        {ReceiverSpec::coherent_rotation(1.0, kPi), "infinite"},
        {ReceiverSpec::laguerre(10.0), ">=1"},
        {ReceiverSpec::legendre(), ">=1"},
    };
    for (const auto& [spec, label] : declared) {
        if (declared_rank(spec).to_string() != label) fail(o, "declared rank mismatch for " + spec.name());
    }
    int checks = 0;
    for (auto beta : {std::complex<double>(0.0, 0.0), {0.3, 0.0}, {1.2, 0.0}, {-0.8, 0.5}}) {
        for (unsigned n = 0; n <= 10; ++n) {
            ++checks;
            const unsigned r = pacs_rank_check(n, beta);
            if (r != n) fail(o, fmt("pacs rank %.0f for n=%.0f", r, n));
        }
    }
    if (o.pass) o.detail = fmt("9 table rows match; %.0f PACS rank checks", checks);
    return o;
}

// 14
std::map<std::string, std::string> deterministic_artifacts() {
    std::map<std::string, std::string> out;
    const auto grid = make_grid(0.1, 1.0, 0.1);
    out["det_homodyne.csv"] = report::curve_csv(sweep_error_curve(ReceiverSpec::homodyne(), grid, false));
    const auto short_grid = make_grid(0.2, 1.0, 0.2);
    const ErrorCurve coh = sweep_error_curve(ReceiverSpec::coherent_rotation(1.0, kPi), short_grid, true);
    out["det_coherent.csv"] = report::curve_csv(coh);
    out["det_coherent.json"] = report::curve_json(coh);
    const ErrorCurve fock =
        sweep_error_curve(ReceiverSpec::fock_rotation({0, 1, 2}, {kPi, kPi, kPi}), make_grid(0.5, 1.0, 0.5), true);
    out["det_fock.csv"] = report::curve_csv(fock);
    out["det_pacs.csv"] = report::curve_csv(sweep_error_curve(ReceiverSpec::pacs(1), make_grid(0.5, 1.0, 0.5), false));
    out["det_fit.json"] = report::scaling_json(RotationKind::cat, fit_beta_scaling(RotationKind::cat, short_grid));
    out["det_table1.json"] = table1_json();
    return out;
}

Outcome determinism(const Context& ctx) {
    Outcome o;
    const auto first = deterministic_artifacts();
    const auto second = deterministic_artifacts();
    std::size_t bytes = 0;
    for (const auto& [name, content] : first) {
        bytes += content.size();
        if (second.at(name) != content) fail(o, name + " differs between runs");
        ctx.emit(name, content);
    }
    if (o.pass) o.detail = fmt("%.0f artifacts, %.0f bytes, identical across two runs",
                               static_cast<double>(first.size()), static_cast<double>(bytes));
    return o;
}

using Suite = std::function<Outcome(const Context&)>;

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {closed_form,    identity_rotation, bounds_chain,      near_optimality,
                                           kennedy_crossover, legendre_suite, appendix_b,       appendix_c,
                                           non_optimal,    laguerre_suite,    appendix_a,        oracle_equivalence,
                                           stellar_suite,  determinism};
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "closed_form", "identity_rotation", "bounds_chain", "near_optimality", "kennedy_crossover",
        "legendre",    "appendix_b",        "appendix_c",   "non_optimal",     "laguerre",
        "appendix_a",  "oracle_equivalence", "stellar",     "determinism"};
    return names;
}

std::vector<CriterionResult> run(const Options& opts, std::ostream& log) {
    const auto& names = suite_names();
    if (!opts.only.empty() && std::find(names.begin(), names.end(), opts.only) == names.end()) {
        throw Error(ErrorKind::validation, "unknown suite '" + opts.only + "'");
    }
    if (!(opts.tolerance_scale > 0.0) || !std::isfinite(opts.tolerance_scale)) {
        throw Error(ErrorKind::validation, "tolerance scale must be > 0");
    }
    if (!(opts.fit_step > 0.0)) throw Error(ErrorKind::validation, "fit step must be > 0");
    const Context ctx(opts);
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!opts.only.empty() && names[i] != opts.only) continue;
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.suite = names[i];
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Outcome out = suites()[i](ctx);
            r.pass = out.pass;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char head[96];
        std::snprintf(head, sizeof head, "[%s] %2d %-19s (%7.2f s) ", r.pass ? "PASS" : "FAIL", r.id, r.suite.c_str(),
                      r.seconds);
        log << head << r.detail << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace cvdisc::acceptance
