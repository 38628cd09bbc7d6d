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

#ifndef MUBFORGE_GF2POLY_H
#define MUBFORGE_GF2POLY_H

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mubforge/bit_matrix.h"

namespace mubforge {

/// Polynomial over GF(2). Bit i of the word vector is the coefficient of x^i.
class GF2Poly {
   public:
    /// Degree reported for the zero polynomial. Never do arithmetic with it.
    static constexpr size_t kZeroDegree = std::numeric_limits<size_t>::max();

    GF2Poly() = default;
    /// Constant 0 or 1.
    static GF2Poly constant(bool c);
    static GF2Poly x() { return monomial(1); }
    static GF2Poly monomial(size_t k);
    /// From the low 64 coefficients packed in `bits` (bit i = coefficient of x^i).
    static GF2Poly from_u64(uint64_t bits);
    static GF2Poly from_words(std::vector<uint64_t> words);
    /// Parses "x^3 + x + 1" style text ("0" and "1" are accepted).
    static GF2Poly parse(std::string_view text);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    size_t degree() const;
    bool coeff(size_t k) const;
    void set_coeff(size_t k, bool v);
    const std::vector<uint64_t> &words() const { return words_; }

    GF2Poly operator+(const GF2Poly &o) const;
    GF2Poly &operator+=(const GF2Poly &o);
    GF2Poly operator*(const GF2Poly &o) const;
    GF2Poly shifted(size_t k) const;
    GF2Poly square() const;

    /// Coefficients low to high as a '0'/'1' string.
    std::string bit_string() const;
    std::string str() const;

    bool operator==(const GF2Poly &o) const = default;

   private:
    void trim();
    std::vector<uint64_t> words_;
};

/// Quotient and remainder. Throws std::domain_error when `b` is zero.
std::pair<GF2Poly, GF2Poly> poly_divmod(const GF2Poly &a, const GF2Poly &b);
GF2Poly poly_mod(const GF2Poly &a, const GF2Poly &f);
GF2Poly poly_mulmod(const GF2Poly &a, const GF2Poly &b, const GF2Poly &f);
GF2Poly poly_gcd(GF2Poly a, GF2Poly b);
/// Does `d` divide `a`?
bool poly_divides(const GF2Poly &d, const GF2Poly &a);
bool is_irreducible(const GF2Poly &f);

/// f(a) by Horner's rule.
BitMatrix poly_eval_matrix(const GF2Poly &f, const BitMatrix &a);
/// det(xI - a), by fraction-free elimination over F2[x].
GF2Poly char_poly(const BitMatrix &a);

}  // namespace mubforge

#endif
