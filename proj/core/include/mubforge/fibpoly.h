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

#ifndef MUBFORGE_FIBPOLY_H
#define MUBFORGE_FIBPOLY_H

#include <cstdint>
#include <string>
#include <utility>

#include "mubforge/biguint.h"
#include "mubforge/gf2poly.h"

namespace mubforge {

/// F_n over GF(2) with F_0 = 0, F_1 = 1, F_{n+1} = x F_n + F_{n-1}.
GF2Poly fib_poly(size_t n);

/// Coefficient of x^k in F_n, without building F_n.
bool fib_coeff(uint64_t n, uint64_t k);

/// (F_n mod f, F_{n+1} mod f) by doubling along the bits of n.
std::pair<GF2Poly, GF2Poly> fib_pair_mod(const BigUint &n, const GF2Poly &f);

enum class FibSide {
    MinusOne,
    PlusOne,
    IsX,
    ProperDivisorOfPlusOne,
};

const char *fib_side_name(FibSide side);

struct FibIndexResult {
    BigUint index;
    FibSide side;
};

/// Minimal n > 0 with f | F_n, for f irreducible of degree m.
///
/// Needs the complete prime factorizations of 2^m - 1 and 2^m + 1. Throws std::invalid_argument
/// when f is reducible and std::runtime_error when neither side is annihilated (bad factor lists).
FibIndexResult fibonacci_index(const GF2Poly &f, const FactorList &factors_minus, const FactorList &factors_plus);

struct IdentityReport {
    size_t trials = 0;
    bool ok = true;
    /// Description of the first counterexample, empty when ok.
    std::string failure;
};

/// Randomized check of the general, symmetric and subtractive recursions and of
/// F_a | F_b <=> a | b, on (k, l) drawn uniformly from [1, max_index].
IdentityReport identity_suite(uint64_t seed, size_t trials, size_t max_index = 300);

enum class TriangleKind {
    Fibonacci,
    CharPoly,
    Pascal,
};

/// '#'/' ' pattern, one newline-terminated line per row, no trailing spaces.
///
/// Fibonacci: row j = 1.. is F_j, lowest coefficient leftmost.
/// CharPoly: row m = 1.. is the characteristic polynomial of the m x m matrix with
/// ones on and above the anti-diagonal, highest coefficient leftmost.
/// Pascal: row n = 0.. holds C(n, k) mod 2 for k = 0..n.
std::string emit_triangle(TriangleKind kind, size_t rows);

}  // namespace mubforge

#endif
