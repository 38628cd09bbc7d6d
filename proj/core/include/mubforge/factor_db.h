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

#ifndef MUBFORGE_FACTOR_DB_H
#define MUBFORGE_FACTOR_DB_H

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mubforge/biguint.h"

namespace mubforge {

/// Prime factorizations of 2^m + 1 and 2^m - 1.
///
/// File format, one entry per line:
///
///     2^<m>+1: <p1>,<p2>,...
///     2^<m>-1: <p1>,<p2>,...
///
/// Primes are decimal and repeated for multiplicity. '#' starts a comment.
/// Every entry is checked on load: the product must equal the left-hand side.
class FactorDb {
   public:
    /// Largest m handled by built-in trial division when an entry is missing.
    static constexpr unsigned kTrialDivisionLimit = 40;

    FactorDb() = default;

    static FactorDb parse(std::string_view text, const std::string &origin = "<string>");
    static FactorDb load(const std::string &path);
    /// $MUBFORGE_FACTOR_DB if set, else the shipped data file.
    static std::string default_path();
    static FactorDb load_default();

    bool has(unsigned m, int sign) const;
    /// Factors of 2^m + 1 (sign > 0) or 2^m - 1 (sign < 0).
    /// Falls back to trial division for m <= kTrialDivisionLimit; throws std::out_of_range otherwise.
    FactorList factors(unsigned m, int sign) const;
    void insert(unsigned m, int sign, FactorList factors);
    size_t size() const { return entries_.size(); }

   private:
    std::map<std::pair<unsigned, int>, FactorList> entries_;
};

}  // namespace mubforge

#endif
