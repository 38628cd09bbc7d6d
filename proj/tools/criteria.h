// Copyright 2026 The mubforge Authors
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


// Acceptance checks shared by `mubforge selftest` and the acceptance test.

#ifndef MUBFORGE_TOOLS_CRITERIA_H
#define MUBFORGE_TOOLS_CRITERIA_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace mubforge::cli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct CriteriaOptions {
    /// Directory holding fib_tables.json and stabilizer_sets.json.
    std::string data_dir;
    /// Factor file; empty means the default lookup.
    std::string factors;
    size_t jobs = 1;
    /// Trials per Monte Carlo run.
    uint64_t mc_trials = 1000000;
    /// Criteria to run; empty means all.
    std::set<int> only;
};

constexpr int kCriteriaCount = 13;

/// Directory of golden tables: $MUBFORGE_GOLDEN_DIR, the source tree, then the install prefix.
std::string default_golden_dir();

/// Runs the selected criteria in order; `report` sees each result as it finishes.
std::vector<CriterionResult> run_criteria(const CriteriaOptions &options,
                                          const std::function<void(const CriterionResult &)> &report = {});

std::string format_result(const CriterionResult &r);

}  // namespace mubforge::cli

#endif
