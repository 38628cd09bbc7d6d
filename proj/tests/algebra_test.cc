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

#include <gtest/gtest.h>

#include <random>

#include "mubforge/biguint.h"
#include "mubforge/bit_matrix.h"
#include "mubforge/gf2poly.h"

using namespace mubforge;

namespace {

BitMatrix random_matrix(std::mt19937_64 &rng, size_t r, size_t c) {
    BitMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

BitMatrix naive_mul(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            bool v = false;
            for (size_t k = 0; k < a.cols(); k++) {
                v ^= a.get(i, k) && b.get(k, j);
            }
            r.set(i, j, v);
        }
    }
    return r;
}

}  // namespace

TEST(BigUint, parse_and_print) {
    auto v = BigUint::parse("340282366920938463463374607431768211457");
    EXPECT_EQ(v, BigUint::pow2_pm1(128, +1));
    EXPECT_EQ(v.to_string(), "340282366920938463463374607431768211457");
    EXPECT_EQ(BigUint(0).to_string(), "0");
    EXPECT_THROW(BigUint::parse("12a"), std::invalid_argument);
}

TEST(BigUint, arithmetic) {
    EXPECT_EQ(BigUint(641) * BigUint(6700417), BigUint::pow2_pm1(32, +1));
    EXPECT_EQ(BigUint::pow2(64) + BigUint(1), BigUint::pow2_pm1(64, +1));
    EXPECT_EQ(BigUint::pow2_pm1(65, -1).mod_small(3), 1u);
    EXPECT_EQ(BigUint(1000).div_small(7), BigUint(142));
    EXPECT_LT(BigUint(5), BigUint::pow2(70));
    EXPECT_EQ(BigUint::pow2(70).bit_length(), 71u);
}

TEST(BigUint, factor_helpers) {
    FactorList f{BigUint(3), BigUint(3), BigUint(5)};
    EXPECT_EQ(product(f), BigUint(45));
    EXPECT_EQ(distinct_primes(f), (FactorList{BigUint(3), BigUint(5)}));
    EXPECT_EQ(cofactor(f, BigUint(3)), BigUint(15));
    EXPECT_EQ(trial_factor(BigUint(4294967297ull)), (FactorList{BigUint(641), BigUint(6700417)}));
}

TEST(BitMatrix, multiplication_matches_naive) {
    std::mt19937_64 rng(7);
    for (size_t trial = 0; trial < 40; trial++) {
        size_t r = 1 + rng() % 70;
        size_t k = 1 + rng() % 70;
        size_t c = 1 + rng() % 70;
        auto a = random_matrix(rng, r, k);
        auto b = random_matrix(rng, k, c);
        EXPECT_EQ(mat_mul(a, b), naive_mul(a, b));
    }
}

TEST(BitMatrix, inverse_round_trip) {
    std::mt19937_64 rng(11);
    size_t hits = 0;
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 80;
        auto a = random_matrix(rng, n, n);
        auto inv = mat_inverse(a);
        EXPECT_EQ(inv.has_value(), a.rank() == n);
        if (inv) {
            hits++;
            EXPECT_TRUE(mat_mul(a, *inv).is_identity());
            EXPECT_TRUE(mat_mul(*inv, a).is_identity());
        }
    }
    EXPECT_GT(hits, 5u);
}

TEST(BitMatrix, power_by_squaring) {
    std::mt19937_64 rng(3);
    auto a = random_matrix(rng, 9, 9);
    BitMatrix p = BitMatrix::identity(9);
    for (uint64_t e = 0; e < 40; e++) {
        EXPECT_EQ(mat_pow(a, BigUint(e)), p) << e;
        p = mat_mul(p, a);
    }
}

TEST(BitMatrix, blocks_and_transpose) {
    auto a = BitMatrix::from_rows({"10", "11"});
    auto c = BitMatrix::from_blocks(a, BitMatrix::identity(2), BitMatrix::identity(2), BitMatrix(2, 2));
    EXPECT_EQ(c.block(0, 0, 2, 2), a);
    EXPECT_EQ(c.block(2, 0, 2, 2), BitMatrix::identity(2));
    EXPECT_EQ(c.transpose().transpose(), c);
    EXPECT_EQ(a.transpose(), BitMatrix::from_rows({"11", "01"}));
    EXPECT_TRUE(is_symplectic(BitMatrix::from_blocks(BitMatrix::from_rows({"11", "10"}), BitMatrix::identity(2),
                                                     BitMatrix::identity(2), BitMatrix(2, 2))));
    EXPECT_FALSE(is_symplectic(c));
    EXPECT_THROW(is_symplectic(BitMatrix::identity(3)), std::invalid_argument);
}

TEST(BitMatrix, text_round_trip) {
    std::mt19937_64 rng(5);
    auto a = random_matrix(rng, 6, 11);
    EXPECT_EQ(read_matrix_text(write_matrix_text(a)), a);
    EXPECT_EQ(read_matrix_text("# comment\n2 2\n\n10\n01\n"), BitMatrix::identity(2));
    try {
        read_matrix_text("2 2\n10\n0x\n");
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(BitMatrix, symplectic_product_of_paulis) {
    // X and Z anticommute, X and X commute.
    auto x = PauliVector::from_zx(1, 0, 1);
    auto z = PauliVector::from_zx(1, 1, 0);
    EXPECT_EQ(symplectic_product(x, z), 1);
    EXPECT_EQ(symplectic_product(x, x), 0);
}

TEST(GF2Poly, parse_print_arith) {
    auto f = GF2Poly::parse("x^3 + x + 1");
    EXPECT_EQ(f.degree(), 3u);
    EXPECT_EQ(f.bit_string(), "1101");
    EXPECT_EQ(GF2Poly::parse(f.str()), f);
    EXPECT_EQ(f * f, f.square());
    auto [q, r] = poly_divmod(f * GF2Poly::parse("x^2 + 1") + GF2Poly::x(), f);
    EXPECT_EQ(q, GF2Poly::parse("x^2 + 1"));
    EXPECT_EQ(r, GF2Poly::x());
    EXPECT_THROW(poly_divmod(f, GF2Poly()), std::domain_error);
}

TEST(GF2Poly, division_identity_random) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; t++) {
        auto a = GF2Poly::from_words({rng(), rng() & 0xFFFF});
        auto b = GF2Poly::from_words({rng() | 1, rng() & 0xFF});
        auto [q, r] = poly_divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
        EXPECT_EQ(poly_mod(a, b), r);
    }
}

TEST(GF2Poly, irreducibility_counts) {
    // Number of irreducible polynomials of degree n over GF(2): 2, 1, 2, 3, 6, 9, 18, 30.
    const size_t expect[] = {0, 2, 1, 2, 3, 6, 9, 18, 30};
    for (size_t n = 1; n <= 8; n++) {
        size_t count = 0;
        for (uint64_t low = 0; low < (uint64_t{1} << n); low++) {
            if (is_irreducible(GF2Poly::from_u64((uint64_t{1} << n) | low))) {
                count++;
            }
        }
        EXPECT_EQ(count, expect[n]) << n;
    }
}

TEST(GF2Poly, char_poly_cayley_hamilton) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; t++) {
        size_t n = 1 + rng() % 20;
        auto a = random_matrix(rng, n, n);
        auto chi = char_poly(a);
        EXPECT_EQ(chi.degree(), n);
        EXPECT_TRUE(poly_eval_matrix(chi, a).is_zero());
    }
    EXPECT_EQ(char_poly(BitMatrix::from_rows({"11", "10"})), GF2Poly::parse("x^2 + x + 1"));
}
