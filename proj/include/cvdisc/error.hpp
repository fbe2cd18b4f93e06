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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cvdisc {

/// Broad category of a failed precondition or numerical contract.
enum class ErrorKind {
    domain,                // argument outside the mathematical domain
    range,                 // argument outside the accuracy contract, or overflow
    shape,                 // mismatched truncation dimensions
    truncation,            // Fock cutoff too small for the requested amplitude
    invariant,             // an object invariant does not hold (e.g. unnormalized state)
    degenerate_parameter,  // parameter value for which the scheme degenerates
    rank,                  // singular design in a least-squares fit
    validation,            // malformed receiver description or run configuration
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::range: return "range";
        case ErrorKind::shape: return "shape";
        case ErrorKind::truncation: return "truncation";
        case ErrorKind::invariant: return "invariant";
        case ErrorKind::degenerate_parameter: return "degenerate-parameter";
        case ErrorKind::rank: return "rank";
        case ErrorKind::validation: return "validation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace cvdisc
