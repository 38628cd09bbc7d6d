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

#include "mubforge/fibpoly.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace mubforge {

namespace {

constexpr size_t kMaxFibIndex = 1000000;

std::vector<GF2Poly> fib_table(size_t n) {
    std::vector<GF2Poly> t(n + 1);
    if (n >= 1) {
        t[1] = GF2Poly::constant(true);
    }
    for (size_t k = 2; k <= n; k++) {
        t[k] = t[k - 1].shifted(1) + t[k - 2];
    }
    return t;
}

bool divides_int(uint64_t a, uint64_t b) {
    return b % a == 0;
}

// Strips trailing spaces and appends a newline.
void push_row(std::string &out, std::string row) {
    while (!row.empty() && row.back() == ' ') {
        row.pop_back();
    }
    out += row;
    out += '\n';
}

}  // namespace

GF2Poly fib_poly(size_t n) {
    if (n > kMaxFibIndex) {
        throw std::length_error("fib_poly: index exceeds " + std::to_string(kMaxFibIndex));
    }
    GF2Poly prev;
    GF2Poly cur = GF2Poly::constant(true);
    if (n == 0) {
        return prev;
    }
    for (size_t k = 1; k < n; k++) {
        GF2Poly next = cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool fib_coeff(uint64_t n, uint64_t k) {
    if (k >= n || (n - k) % 2 == 0) {
        return false;
    }
    uint64_t top = (n + k - 1) / 2;
    // Lucas: C(top, k) is odd iff the bits of k are a subset of the bits of top.
    return (k & ~top) == 0;
}

std::pair<GF2Poly, GF2Poly> fib_pair_mod(const BigUint &n, const GF2Poly &f) {
    if (f.is_zero()) {
        throw std::domain_error("fib_pair_mod: modulus is zero");
    }
    GF2Poly x = poly_mod(GF2Poly::x(), f);
    GF2Poly a;                                        // F_j
    GF2Poly b = poly_mod(GF2Poly::constant(true), f);  // F_{j+1}
    for (size_t k = n.bit_length(); k-- > 0;) {
        // F_{2j} = x F_j^2, F_{2j+1} = F_j^2 + F_{j+1}^2
        GF2Poly a2 = poly_mod(a.square(), f);
        GF2Poly b2 = poly_mod(b.square(), f);
        a = poly_mod(a2 * x, f);
        b = a2 + b2;
        if (n.bit(k)) {
            GF2Poly next = poly_mod(b * x, f) + a;
            a = std::move(b);
            b = std::move(next);
        }
    }
    return {a, b};
}

const char *fib_side_name(FibSide side) {
    switch (side) {
        case FibSide::MinusOne:
            return "minus_one";
        case FibSide::PlusOne:
            return "plus_one";
        case FibSide::IsX:
            return "is_x";
        case FibSide::ProperDivisorOfPlusOne:
            return "proper_divisor_of_plus_one";
    }
    return "?";
}

namespace {

bool annihilates(const FactorList &factors, const GF2Poly &f) {
    return fib_pair_mod(product(factors), f).first.is_zero();
}

// Walks down the divisor lattice of prod(factors), removing primes while F_{N/p} stays 0 mod f.
BigUint minimal_divisor(FactorList factors, const GF2Poly &f) {
    for (const BigUint &p : distinct_primes(factors)) {
        while (true) {
            auto it = std::find(factors.begin(), factors.end(), p);
            if (it == factors.end()) {
                break;
            }
            FactorList trial = factors;
            trial.erase(trial.begin() + (it - factors.begin()));
            if (!annihilates(trial, f)) {
                break;
            }
            factors = std::move(trial);
        }
    }
    return product(factors);
}

}  // namespace

FibIndexResult fibonacci_index(const GF2Poly &f, const FactorList &factors_minus, const FactorList &factors_plus) {
    if (f == GF2Poly::x()) {
        return {BigUint(2), FibSide::IsX};
    }
    if (!is_irreducible(f)) {
        throw std::invalid_argument("fibonacci_index: " + f.str() + " is reducible");
    }
    unsigned m = static_cast<unsigned>(f.degree());
    if (product(factors_minus) != BigUint::pow2_pm1(m, -1)) {
        throw std::invalid_argument("fibonacci_index: factor list does not multiply to 2^" + std::to_string(m) + "-1");
    }
    if (product(factors_plus) != BigUint::pow2_pm1(m, +1)) {
        throw std::invalid_argument("fibonacci_index: factor list does not multiply to 2^" + std::to_string(m) + "+1");
    }
    // A linear term puts f on the 2^m + 1 side.
    bool plus = f.coeff(1);
    const FactorList &first = plus ? factors_plus : factors_minus;
    const FactorList &second = plus ? factors_minus : factors_plus;
    bool on_plus = plus;
    const FactorList *side = &first;
    if (!annihilates(first, f)) {
        if (!annihilates(second, f)) {
            throw std::runtime_error("fibonacci_index: neither 2^m-1 nor 2^m+1 annihilates " + f.str());
        }
        side = &second;
        on_plus = !plus;
    }
    BigUint index = minimal_divisor(*side, f);
    FibSide kind = FibSide::MinusOne;
    if (on_plus) {
        kind = index == BigUint::pow2_pm1(m, +1) ? FibSide::PlusOne : FibSide::ProperDivisorOfPlusOne;
    }
    return {index, kind};
}

IdentityReport identity_suite(uint64_t seed, size_t trials, size_t max_index) {
    IdentityReport rep;
    std::vector<GF2Poly> fib = fib_table(2 * max_index + 2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(1, max_index);
    auto fail = [&](const std::string &what, size_t k, size_t l) {
        rep.ok = false;
        rep.failure = what + " fails at k=" + std::to_string(k) + ", l=" + std::to_string(l);
    };
    for (size_t t = 0; t < trials && rep.ok; t++) {
        size_t k = pick(rng);
        size_t l = pick(rng);
        size_t diff = k > l ? k - l : l - k;
        rep.trials++;
        if (fib[k + l] != fib[k] * fib[l + 1] + fib[k - 1] * fib[l]) {
            fail("general recursion", k, l);
        } else if (fib[k + l] + fib[diff] != (fib[k] * fib[l]).shifted(1)) {
            fail("symmetric recursion", k, l);
        } else if (fib[k + 1] * fib[l] + fib[k] * fib[l + 1] != fib[diff]) {
            fail("subtractive recursion", k, l);
        } else if (poly_divides(fib[k], fib[l]) != divides_int(k, l)) {
            fail("divisibility", k, l);
        }
    }
    return rep;
}

std::string emit_triangle(TriangleKind kind, size_t rows) {
    if (rows > 4096) {
        throw std::invalid_argument("emit_triangle: at most 4096 rows");
    }
    std::string out;
    switch (kind) {
        case TriangleKind::Fibonacci: {
            GF2Poly prev;
            GF2Poly cur = GF2Poly::constant(true);
            for (size_t j = 1; j <= rows; j++) {
                std::string row;
                for (size_t k = 0; k <= cur.degree(); k++) {
                    row.push_back(cur.coeff(k) ? '#' : ' ');
                }
                push_row(out, std::move(row));
                GF2Poly next = cur.shifted(1) + prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            break;
        }
        case TriangleKind::CharPoly: {
            // The m x m characteristic polynomial read highest-first equals the even-power
            // coefficients of F_{2m+1} read lowest-first.
            GF2Poly prev = GF2Poly::constant(true);  // F_1
            GF2Poly cur = GF2Poly::x();              // F_2
            for (size_t m = 1; m <= rows; m++) {
                GF2Poly f3 = cur.shifted(1) + prev;  // F_{2m+1}
                GF2Poly f4 = f3.shifted(1) + cur;    // F_{2m+2}
                std::string row;
                for (size_t k = 0; k <= m; k++) {
                    row.push_back(f3.coeff(2 * k) ? '#' : ' ');
                }
                push_row(out, std::move(row));
                prev = std::move(f3);
                cur = std::move(f4);
            }
            break;
        }
        case TriangleKind::Pascal: {
            for (size_t n = 0; n < rows; n++) {
                std::string row;
                for (size_t k = 0; k <= n; k++) {
                    row.push_back((k & ~n) == 0 ? '#' : ' ');
                }
                push_row(out, std::move(row));
            }
            break;
        }
    }
    return out;
}

}  // namespace mubforge
