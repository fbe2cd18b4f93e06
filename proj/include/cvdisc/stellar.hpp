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

// Stellar-rank labels of the receiver families and the constructive rank
// check for displaced number states.

#include <complex>
#include <string>
#include <vector>

#include "cvdisc/receivers.hpp"

namespace cvdisc {

struct StellarRankLabel {
    enum class Kind { finite, infinite, at_least_one };

    Kind kind = Kind::finite;
    unsigned n = 0;

    static StellarRankLabel finite(unsigned n) { return {Kind::finite, n}; }
    static StellarRankLabel infinite() { return {Kind::infinite, 0}; }
    static StellarRankLabel at_least_one() { return {Kind::at_least_one, 1}; }

    /// "0", "3", "infinite" or ">=1".
    std::string to_string() const;

    friend bool operator==(const StellarRankLabel&, const StellarRankLabel&) = default;
};

StellarRankLabel declared_rank(const ReceiverSpec& spec);

/// Zeros of the polynomial part of the stellar function of D(beta)|n>,
/// counted through the eigenvalues of its companion matrix. n <= 30.
unsigned pacs_rank_check(unsigned n, std::complex<double> beta);

/// Coefficients p_0 .. p_{n + extra} of the polynomial part.
std::vector<std::complex<double>> pacs_stellar_polynomial(unsigned n, std::complex<double> beta, unsigned extra = 4);

struct Table1Row {
    std::string scheme;
    std::string family;
    std::string povm;
    std::string stellar_rank;
    bool near_optimal = false;
};

std::vector<Table1Row> table1_rows();
/// {"columns": [...], "rows": [{scheme, family, povm, stellar_rank, near_optimal}, ...]}
std::string table1_json();

}  // namespace cvdisc
