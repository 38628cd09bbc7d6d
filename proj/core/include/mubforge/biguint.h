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

#ifndef MUBFORGE_BIGUINT_H
#define MUBFORGE_BIGUINT_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mubforge {

/// Non-negative integer of arbitrary size. Little-endian 64-bit limbs, never any leading zero limbs.
class BigUint {
   public:
    BigUint() = default;
    BigUint(uint64_t v);  // NOLINT(google-explicit-constructor)

    /// 2^m + 1 when sign > 0, 2^m - 1 otherwise.
    static BigUint pow2_pm1(unsigned m, int sign);
    static BigUint pow2(unsigned m);
    /// Throws std::invalid_argument on anything but decimal digits.
    static BigUint parse(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    size_t bit_length() const;
    bool bit(size_t k) const;
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
    const std::vector<uint64_t> &limbs() const { return limbs_; }

    std::string to_string() const;

    BigUint operator+(const BigUint &other) const;
    BigUint operator*(const BigUint &other) const;
    BigUint &operator*=(const BigUint &other);
    /// Remainder of division by a small value.
    uint32_t mod_small(uint32_t d) const;
    /// Quotient of division by a small value.
    BigUint div_small(uint32_t d) const;

    bool operator==(const BigUint &other) const = default;
    std::strong_ordering operator<=>(const BigUint &other) const;

   private:
    void trim();
    std::vector<uint64_t> limbs_;
};

using FactorList = std::vector<BigUint>;

/// Product of all entries.
BigUint product(const FactorList &factors);

/// Distinct entries in ascending order.
FactorList distinct_primes(const FactorList &factors);

/// Product of the list with one copy of `p` removed.
BigUint cofactor(const FactorList &factors, const BigUint &p);

/// Trial division; only meant for values below 2^80 or so.
FactorList trial_factor(const BigUint &n);

}  // namespace mubforge

#endif
