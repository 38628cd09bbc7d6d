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

#ifndef MUBFORGE_STABSEARCH_H
#define MUBFORGE_STABSEARCH_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mubforge/bit_matrix.h"
#include "mubforge/factor_db.h"
#include "mubforge/gf2poly.h"

namespace mubforge {

enum class Family {
    Triangle,
    Companion,
    Fermat,
    Group,
    GeneralSymplectic,
};

const char *family_name(Family f);
/// Accepts the names returned by family_name. Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

struct StabilizerCandidate {
    BitMatrix C;
    std::optional<BitMatrix> B;
    std::optional<BitMatrix> R;
    BitMatrix G0;
    std::string provenance;
};

/// [[B, I], [I, 0]]
BitMatrix fib_stabilizer(const BitMatrix &b);
/// [[B, R], [R^{-1}, 0]]. Throws std::domain_error when R is singular.
BitMatrix group_stabilizer(const BitMatrix &b, const BitMatrix &r);
/// (I, 0)^t
BitMatrix standard_g0(size_t m);
/// (I, g0x)^t
BitMatrix inhomogeneous_g0(const BitMatrix &g0x);
/// (0, I)^t
BitMatrix x_g0(size_t m);

/// C symplectic, C^{d+1} = I, and both off-diagonal blocks of C^{(d+1)/p} nonzero for every
/// prime p | d+1. `plus_factors` is the factorization of 2^m + 1.
bool validate_stabilizer(const BitMatrix &c, size_t m, const FactorList &plus_factors);

/// General completeness test for (C, G0): C symplectic with C^{d+1} = I, G0 isotropic of
/// full rank, and [G0 | C^j G0] invertible for j = 1..ceil(d/2).
bool validate_set(const BitMatrix &c, const BitMatrix &g0);

/// Ones on and above the anti-diagonal, with the lower-right r x r corner replaced by A.
BitMatrix triangle_B(size_t m, const BitMatrix &a);

struct TriangleResult {
    BitMatrix A;
    BitMatrix B;
    /// Candidates tried before the hit.
    uint64_t tried = 0;
};

/// First corner matrix A (ascending by row-major upper-triangle code, first bit most
/// significant; r = 1, 2, ...) whose B validates. Throws std::runtime_error past r = floor(m/2).
TriangleResult search_triangle(size_t m, const FactorList &plus_factors, size_t r_start = 1);

/// Hankel matrix b_ij = s_{i+j}; `s` lists s_1 s_2 ... and missing entries are zero.
BitMatrix hankel_B(size_t m, std::string_view s);

/// Does B have an irreducible characteristic polynomial of Fibonacci index 2^m + 1?
bool has_full_fibonacci_index(const BitMatrix &b, const FactorDb &db);

/// First Hankel parameter string (s_1 least significant, ascending) accepted by
/// has_full_fibonacci_index, with trailing zeros dropped. Throws on exhaustion.
std::string search_companion(size_t m, const FactorDb &db);

/// B_{2^k}: B_1 = (1), B_{2n} = [[B_n, I], [I, 0]].
BitMatrix fermat_B(unsigned k);
/// Stabilizer of the 2^k-qubit Fermat set; equals fermat_B(k + 1).
BitMatrix fermat_C(unsigned k);

/// x^n f(x + 1/x) for n = deg f.
GF2Poly reciprocal_op(const GF2Poly &f);

/// validate_stabilizer on fermat_C(k) with the factors of 2^{2^k} + 1.
bool wiedemann_test(unsigned k, const FactorDb &db);

struct GroupPair {
    BitMatrix B;
    BitMatrix R;
    /// R is a polynomial in B.
    bool fibonacci_equivalent = false;
    std::vector<size_t> structure;
};

/// All (B, R) with R symmetric invertible, BR symmetric, chi_B of Fibonacci index 2^m + 1 and
/// a complete set from G0 = (I, 0)^t. Exhaustive, m <= 4. limit = 0 means no limit.
std::vector<GroupPair> search_group(size_t m, const FactorDb &db, size_t limit = 0);

/// Keeps one R per orbit R ~ p(B) R (the smallest in row-major order) for each B.
std::vector<GroupPair> dedup_group(const std::vector<GroupPair> &pairs);

/// Is R in the span of I, B, ..., B^{m-1}?
bool is_polynomial_in(const BitMatrix &r, const BitMatrix &b);

struct GeneralSearchOptions {
    size_t m = 3;
    /// Symmetric lower block of G0 = (I, g0x)^t; zero when absent.
    std::optional<BitMatrix> g0x;
    /// Full 2m x m G0; overrides g0x.
    std::optional<BitMatrix> g0;
    std::optional<std::vector<size_t>> target;
    /// Stop after this many hits; 0 means no limit.
    size_t limit = 1;
    size_t jobs = 1;
    /// Random sampling (used for m = 4): number of candidates and seed.
    uint64_t samples = 0;
    uint64_t seed = 1;
};

/// Symplectic C = [[s, t], [u, v]] with s invertible, u = (s^t)^{-1} S for symmetric S and
/// v = (s^t)^{-1}(I + u^t t), forming a complete set with G0 and matching the target structure.
/// Exhaustive for m <= 3, sampled when options.samples > 0 (required for m = 4).
std::vector<StabilizerCandidate> search_general(const GeneralSearchOptions &options);

/// Closed form for the number of symmetric invertible m x m matrices over GF(2).
BigUint count_symmetric_invertible(size_t m);
/// The same count by enumeration, m <= 6.
uint64_t count_symmetric_invertible_exhaustive(size_t m);

}  // namespace mubforge

#endif
