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

#include "cvdisc/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cvdisc/error.hpp"

namespace cvdisc::specfun {

double hermite_phys(unsigned n, double x) {
    if (n > 1000) throw Error(ErrorKind::range, "hermite_phys: n = " + std::to_string(n) + " exceeds 1000");
    if (!std::isfinite(x)) throw Error(ErrorKind::range, "hermite_phys: non-finite argument");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (unsigned k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur)) throw Error(ErrorKind::range, "hermite_phys: result overflows for n = " + std::to_string(n));
    return cur;
}

double legendre(unsigned n, double s) {
    if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::domain, "legendre: argument outside [-1, 1]");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = s;
    for (unsigned k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = ((2.0 * kk + 1.0) * s * cur - kk * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_gen(unsigned n, double nu, double x) {
    if (!(nu > -1.0)) throw Error(ErrorKind::domain, "laguerre_gen: nu must exceed -1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::domain, "laguerre_gen: x must be finite and >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + nu - x;
    for (unsigned k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = ((2.0 * kk + 1.0 + nu - x) * cur - (kk + nu) * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur)) throw Error(ErrorKind::range, "laguerre_gen: result overflows");
    return cur;
}

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

namespace {

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;   // Ai(0)
constexpr long double kAiP0 = 0.258819403792806798405183560189203963L;  // -Ai'(0)

// Maclaurin pair Ai(z) = Ai(0) f(z) + Ai'(0) g(z); summed in extended precision
// because the two series cancel for negative z.
double airy_maclaurin(double z) {
    const long double zl = z;
    const long double z3 = zl * zl * zl;
    long double f = 1.0L, g = zl;
    long double tf = 1.0L, tg = zl;
    for (int k = 1; k < 200; ++k) {
        const long double k3 = 3.0L * k;
        tf *= z3 / ((k3 - 1.0L) * k3);
        tg *= z3 / (k3 * (k3 + 1.0L));
        f += tf;
        g += tg;
        if (std::fabs(tf) + std::fabs(tg) < 1e-22L * (std::fabs(f) + std::fabs(g))) break;
    }
    return static_cast<double>(kAi0 * f - kAiP0 * g);
}

// Coefficient u_k of the large-argument Airy expansions.
struct AiryAsymptoticTerms {
    static constexpr int size = 40;
    std::array<double, size> u{};
    AiryAsymptoticTerms() {
        u[0] = 1.0;
        for (int k = 1; k < size; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        }
    }
};

const AiryAsymptoticTerms& airy_terms() {
    static const AiryAsymptoticTerms terms;
    return terms;
}

// Sum_k (-1)^k u_k / zeta^k, truncated at the smallest term.
double airy_decaying_series(double zeta) {
    const auto& u = airy_terms().u;
    double sum = 1.0;
    double last = 1.0;
    double pow = 1.0;
    for (int k = 1; k < AiryAsymptoticTerms::size; ++k) {
        pow /= zeta;
        const double term = u[k] * pow;
        if (term > last) break;
        sum += (k % 2 == 0 ? term : -term);
        last = term;
        if (term < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// Ai(-x) for x > 0 large: oscillatory form.
double airy_oscillatory(double x) {
    const auto& u = airy_terms().u;
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double even = 1.0, odd = 0.0;
    double pow = 1.0;
    double last = 1.0;
    for (int k = 1; k < AiryAsymptoticTerms::size; ++k) {
        pow /= zeta;
        const double term = u[k] * pow;
        if (term > last) break;
        // k = 2j contributes (-1)^j to the even sum, k = 2j+1 contributes (-1)^j to the odd sum.
        const int j = k / 2;
        const double signed_term = (j % 2 == 0) ? term : -term;
        if (k % 2 == 0) {
            even += signed_term;
        } else {
            odd += signed_term;
        }
        last = term;
        if (term < 1e-17) break;
    }
    const double phase = zeta - std::numbers::pi / 4.0;
    return (std::cos(phase) * even + std::sin(phase) * odd) / (std::sqrt(std::numbers::pi) * std::sqrt(std::sqrt(x)));
}

}  // namespace

double airy_ai(double z) {
    if (!(z >= -60.0 && z <= 40.0)) throw Error(ErrorKind::range, "airy_ai: argument outside [-60, 40]");
    if (std::fabs(z) <= airy_switch) return airy_maclaurin(z);
    if (z < 0.0) return airy_oscillatory(-z);
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    return std::exp(-zeta) * airy_decaying_series(zeta) / (2.0 * std::sqrt(std::numbers::pi) * std::sqrt(std::sqrt(z)));
}

SignedLog airy_ai_log(double z) {
    if (std::isnan(z) || z < -60.0) throw Error(ErrorKind::range, "airy_ai_log: argument below -60");
    if (z > airy_switch) {
        const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
        const double log_abs =
            -zeta - std::log(2.0 * std::sqrt(std::numbers::pi)) - 0.25 * std::log(z) + std::log(airy_decaying_series(zeta));
        return {log_abs, 1};
    }
    const double v = airy_ai(z);
    if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
}

namespace {

constexpr unsigned kLogFactorialTable = 2048;

struct LogFactorialTable {
    std::array<double, kLogFactorialTable + 1> values{};
    LogFactorialTable() {
        long double acc = 0.0L;
        values[0] = 0.0;
        for (unsigned k = 1; k <= kLogFactorialTable; ++k) {
            acc += std::log(static_cast<long double>(k));
            values[k] = static_cast<double>(acc);
        }
    }
};

}  // namespace

double log_factorial(unsigned n) {
    static const LogFactorialTable table;
    if (n <= kLogFactorialTable) return table.values[n];
    // Stirling series; the first omitted term is below 1e-20 here.
    const double x = static_cast<double>(n);
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    return x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x) +
           inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

}  // namespace cvdisc::specfun
