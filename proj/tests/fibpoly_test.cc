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

#include "mubforge/factor_db.h"
#include "mubforge/fibpoly.h"
#include "test_data.h"

using namespace mubforge;
using mubforge::testing::data_path;
using mubforge::testing::read_file;

TEST(FibPoly, first_terms) {
    EXPECT_TRUE(fib_poly(0).is_zero());
    EXPECT_TRUE(fib_poly(1).is_one());
    EXPECT_EQ(fib_poly(2), GF2Poly::x());
    EXPECT_EQ(fib_poly(3), GF2Poly::parse("x^2 + 1"));
    EXPECT_EQ(fib_poly(4), GF2Poly::parse("x^3"));
    EXPECT_EQ(fib_poly(5), GF2Poly::parse("x^4 + x^2 + 1"));
}

TEST(FibPoly, coefficient_formula_matches_recursion) {
    for (uint64_t n = 0; n < 260; n++) {
        auto f = fib_poly(n);
        for (uint64_t k = 0; k < n + 3; k++) {
            ASSERT_EQ(fib_coeff(n, k), f.coeff(k)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(FibPoly, doubling_matches_direct_reduction) {
    auto f = GF2Poly::parse("x^7 + x^3 + 1");
    for (uint64_t n = 0; n < 150; n++) {
        auto [a, b] = fib_pair_mod(BigUint(n), f);
        EXPECT_EQ(a, poly_mod(fib_poly(n), f)) << n;
        EXPECT_EQ(b, poly_mod(fib_poly(n + 1), f)) << n;
    }
}

TEST(FibPoly, identity_suite_passes) {
    auto rep = identity_suite(2026, 200);
    EXPECT_TRUE(rep.ok) << rep.failure;
    EXPECT_EQ(rep.trials, 200u);
}

TEST(FibonacciIndex, small_cases) {
    auto db = FactorDb::load_default();
    auto idx = [&](const char *text) {
        auto f = GF2Poly::parse(text);
        unsigned m = static_cast<unsigned>(f.degree());
        return fibonacci_index(f, db.factors(m, -1), db.factors(m, +1));
    };
    EXPECT_EQ(idx("x").side, FibSide::IsX);
    EXPECT_EQ(idx("x").index, BigUint(2));
    EXPECT_EQ(idx("x + 1").index, BigUint(3));
    EXPECT_EQ(idx("x^2 + x + 1").index, BigUint(5));
    EXPECT_EQ(idx("x^2 + x + 1").side, FibSide::PlusOne);
    EXPECT_THROW(idx("x^2 + 1"), std::invalid_argument);
}

TEST(FibonacciIndex, agrees_with_brute_force) {
    auto db = FactorDb::load_default();
    for (size_t m = 2; m <= 9; m++) {
        for (uint64_t low = 1; low < (uint64_t{1} << m); low += 2) {
            auto f = GF2Poly::from_u64((uint64_t{1} << m) | low);
            if (!is_irreducible(f)) {
                continue;
            }
            uint64_t n = 1;
            GF2Poly a, b = GF2Poly::constant(true);
            // Walk (F_n, F_{n+1}) mod f until F_n vanishes.
            a = GF2Poly::constant(true);
            b = poly_mod(GF2Poly::x(), f);
            while (!a.is_zero()) {
                GF2Poly next = poly_mod(GF2Poly::x() * b + a, f);
                a = b;
                b = next;
                n++;
            }
            auto r = fibonacci_index(f, db.factors(static_cast<unsigned>(m), -1), db.factors(static_cast<unsigned>(m), +1));
            EXPECT_EQ(r.index, BigUint(n)) << f.str();
            uint64_t plus = (uint64_t{1} << m) + 1;
            uint64_t minus = (uint64_t{1} << m) - 1;
            if (r.side == FibSide::PlusOne) {
                EXPECT_EQ(n, plus);
            } else if (r.side == FibSide::MinusOne) {
                EXPECT_EQ(minus % n, 0u);
            } else {
                EXPECT_EQ(plus % n, 0u);
            }
        }
    }
}

TEST(Fractal, emitted_rows_have_no_trailing_space) {
    for (auto kind : {TriangleKind::Fibonacci, TriangleKind::CharPoly, TriangleKind::Pascal}) {
        auto text = emit_triangle(kind, 40);
        EXPECT_EQ(text.back(), '\n');
        size_t pos = 0;
        while ((pos = text.find('\n', pos)) != std::string::npos) {
            if (pos > 0) {
                EXPECT_NE(text[pos - 1], ' ');
            }
            pos++;
        }
    }
    EXPECT_THROW(emit_triangle(TriangleKind::Pascal, 5000), std::invalid_argument);
}

TEST(Fractal, golden_patterns) {
    struct Case {
        TriangleKind kind;
        const char *file;
    };
    for (auto c : {Case{TriangleKind::Fibonacci, "fractal_fibonacci.txt"}, Case{TriangleKind::CharPoly, "fractal_charpoly.txt"},
                   Case{TriangleKind::Pascal, "fractal_pascal.txt"}}) {
        std::string golden = read_file(data_path(c.file));
        size_t rows = static_cast<size_t>(std::count(golden.begin(), golden.end(), '\n'));
        EXPECT_EQ(emit_triangle(c.kind, rows), golden) << c.file;
    }
}
