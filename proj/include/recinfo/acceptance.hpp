// Copyright 2026 The recinfo Authors
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

#ifndef RECINFO_ACCEPTANCE_HPP
#define RECINFO_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "recinfo/polyring.hpp"

namespace recinfo {

struct AcceptanceCheck {
    std::string what;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct AcceptanceRow {
    int id = 0;
    std::string title;
    bool conjecture = false;
    double seconds = 0;
    double budget_seconds = 0;  // 0 means no budget
    std::vector<AcceptanceCheck> checks;
    std::string error;  // set when the row threw

    bool pass() const;
};

struct AcceptanceOptions {
    bool include_conjectures = false;
    /// Negative control: use a Haah map with one monomial flipped.
    bool corrupt_haah = false;
    /// Restrict to these row ids; empty runs everything.
    std::vector<int> only;
};

/// The Haah map with the x monomial of alpha moved to x^2.
StabilizerMap corrupted_haah_map();

std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opts = {});

/// One "PASS"/"FAIL" line per row, followed by indented check lines.
std::string format_ledger(const std::vector<AcceptanceRow>& rows, bool verbose = true);

/// True when every non-conjecture row passes.
bool required_rows_pass(const std::vector<AcceptanceRow>& rows);

}  // namespace recinfo

#endif  // RECINFO_ACCEPTANCE_HPP
