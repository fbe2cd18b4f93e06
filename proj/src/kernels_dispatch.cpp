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

#include <atomic>

#include "cvdisc/kernels.hpp"

namespace cvdisc::kernels {

#ifndef CVDISC_HAVE_AVX2
namespace avx2 {
// Not compiled for this target; the dispatcher never selects these.
void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2) {
    scalar::density_pair(rec, x, seed, first, second, rho1, rho2);
}
double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    return scalar::weighted_abs_diff(w, f, g);
}
}  // namespace avx2
#endif

namespace {

Isa detect() {
#if defined(CVDISC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
    return Isa::scalar;
}

std::atomic<Isa>& selected() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || detect() == Isa::avx2; }

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) { selected().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed); }

void reset_isa() { selected().store(detect(), std::memory_order_relaxed); }

void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2) {
    if (active_isa() == Isa::avx2) {
        avx2::density_pair(rec, x, seed, first, second, rho1, rho2);
    } else {
        scalar::density_pair(rec, x, seed, first, second, rho1, rho2);
    }
}

double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    return active_isa() == Isa::avx2 ? avx2::weighted_abs_diff(w, f, g) : scalar::weighted_abs_diff(w, f, g);
}

}  // namespace cvdisc::kernels
