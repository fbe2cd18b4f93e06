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

#include "cvdisc/quadrature.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <utility>
#include <stdexcept>
#include <vector>

namespace cvdisc::quad {

namespace {

// Kronrod abscissae on [0, 1) half-range; index 7 is the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// Node layout: [0..6] = centre - h*x_k, [7] = centre, [8..14] = centre + h*x_k.
Panel evaluate_panel(const BatchIntegrand& f, double lo, double hi, std::array<double, 15>& xs,
                     std::array<double, 15>& fs) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    for (int k = 0; k < 7; ++k) {
        xs[k] = c - h * kXgk[k];
        xs[14 - k] = c + h * kXgk[k];
    }
    xs[7] = c;
    f(xs, fs);
    double kron = kWgk[7] * fs[7];
    double gauss = kWg[3] * fs[7];
    for (int k = 0; k < 7; ++k) {
        const double pair = fs[k] + fs[14 - k];
        kron += kWgk[k] * pair;
        if (k % 2 == 1) gauss += kWg[k / 2] * pair;
    }
    return {lo, hi, kron * h, std::fabs((kron - gauss) * h)};
}

}  // namespace

void kronrod_nodes(double lo, double hi, std::span<double, 15> x, std::span<double, 15> w) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    for (int k = 0; k < 7; ++k) {
        x[k] = c - h * kXgk[k];
        x[14 - k] = c + h * kXgk[k];
        w[k] = w[14 - k] = h * kWgk[k];
    }
    x[7] = c;
    w[7] = h * kWgk[7];
}

Result integrate(const BatchIntegrand& f, std::span<const double> breakpoints, const Options& opts) {
    if (breakpoints.size() < 2) throw std::invalid_argument("quad::integrate: need at least two breakpoints");
    std::vector<Panel> heap;
    std::array<double, 15> xs{}, fs{};
    Result result;
    double error = 0.0;
    const std::size_t panels = opts.initial_panels == 0 ? 1 : opts.initial_panels;
    for (std::size_t b = 0; b + 1 < breakpoints.size(); ++b) {
        const double lo = breakpoints[b];
        const double hi = breakpoints[b + 1];
        if (!(hi > lo)) continue;
        const double width = (hi - lo) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            const double plo = lo + width * static_cast<double>(p);
            const double phi = (p + 1 == panels) ? hi : lo + width * static_cast<double>(p + 1);
            heap.push_back(evaluate_panel(f, plo, phi, xs, fs));
            error += heap.back().error;
            result.n_evals += 15;
        }
    }
    std::make_heap(heap.begin(), heap.end());
    result.converged = true;
    while (!heap.empty() && error > opts.abs_tol) {
        const Panel worst = heap.front();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (result.n_evals + 30 > opts.max_evals || !(mid > worst.lo && mid < worst.hi)) {
            result.converged = false;
            break;
        }
        std::pop_heap(heap.begin(), heap.end());
        heap.pop_back();
        for (const auto& [lo, hi] : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
            heap.push_back(evaluate_panel(f, lo, hi, xs, fs));
            std::push_heap(heap.begin(), heap.end());
        }
        result.n_evals += 30;
        error = 0.0;
        for (const auto& panel : heap) error += panel.error;
    }
    // Sum left to right so the total does not depend on heap layout.
    std::sort(heap.begin(), heap.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    result.value = 0.0;
    result.abs_error = 0.0;
    for (const auto& panel : heap) {
        result.value += panel.value;
        result.abs_error += panel.error;
    }
    return result;
}

}  // namespace cvdisc::quad
