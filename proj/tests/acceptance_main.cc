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

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails. An optional argument selects a
// single suite by name.

#include <iostream>

#include "cvdisc/acceptance.hpp"

int main(int argc, char** argv) {
    cvdisc::acceptance::Options opts;
    if (argc > 1) opts.only = argv[1];
    const auto results = cvdisc::acceptance::run(opts, std::cout);
    bool ok = !results.empty();
    for (const auto& r : results) ok = ok && r.pass;
    return ok ? 0 : 1;
}
