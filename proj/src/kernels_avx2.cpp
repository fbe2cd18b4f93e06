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

#include <immintrin.h>

#include <cstddef>

#include "cvdisc/kernels.hpp"

namespace cvdisc::kernels {

namespace detail {
void check_density_args(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                        Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2);
}

namespace avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

// Four points per lane group; the recurrence is broadcast across lanes.
void density_pair(const Recurrence& rec, std::span<const double> x, std::span<const double> seed,
                  Coefficients first, Coefficients second, std::span<double> rho1, std::span<double> rho2) {
    detail::check_density_args(rec, x, seed, first, second, rho1, rho2);
    const std::size_t n_terms = first.re.size();
    const bool complex = !first.im.empty();
    const std::size_t n_points = x.size();
    std::size_t i = 0;
    for (; i + 4 <= n_points; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        __m256d p_prev = _mm256_setzero_pd();
        __m256d p = _mm256_loadu_pd(seed.data() + i);
        __m256d s1r = _mm256_setzero_pd(), s1i = _mm256_setzero_pd();
        __m256d s2r = _mm256_setzero_pd(), s2i = _mm256_setzero_pd();
        for (std::size_t n = 0; n < n_terms; ++n) {
            s1r = _mm256_fmadd_pd(_mm256_set1_pd(first.re[n]), p, s1r);
            s2r = _mm256_fmadd_pd(_mm256_set1_pd(second.re[n]), p, s2r);
            if (complex) {
                s1i = _mm256_fmadd_pd(_mm256_set1_pd(first.im[n]), p, s1i);
                s2i = _mm256_fmadd_pd(_mm256_set1_pd(second.im[n]), p, s2i);
            }
            if (n + 1 < n_terms) {
                const __m256d t = _mm256_fmadd_pd(_mm256_set1_pd(rec.a[n]), xv, _mm256_set1_pd(rec.b[n]));
                const __m256d p_next = _mm256_fmsub_pd(t, p, _mm256_mul_pd(_mm256_set1_pd(rec.c[n]), p_prev));
                p_prev = p;
                p = p_next;
            }
        }
        _mm256_storeu_pd(rho1.data() + i, _mm256_fmadd_pd(s1i, s1i, _mm256_mul_pd(s1r, s1r)));
        _mm256_storeu_pd(rho2.data() + i, _mm256_fmadd_pd(s2i, s2i, _mm256_mul_pd(s2r, s2r)));
    }
    if (i < n_points) {
        const std::size_t rest = n_points - i;
        scalar::density_pair(rec, x.subspan(i, rest), seed.subspan(i, rest), first, second, rho1.subspan(i, rest),
                             rho2.subspan(i, rest));
    }
}

double weighted_abs_diff(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= w.size(); i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(f.data() + i), _mm256_loadu_pd(g.data() + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + i), _mm256_andnot_pd(sign_mask, d), acc);
    }
    double sum = hsum(acc);
    for (; i < w.size(); ++i) sum += w[i] * (f[i] > g[i] ? f[i] - g[i] : g[i] - f[i]);
    return sum;
}

}  // namespace avx2

}  // namespace cvdisc::kernels
