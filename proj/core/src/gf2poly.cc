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

#include "mubforge/gf2poly.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace mubforge {

namespace {

void xor_shifted(std::vector<uint64_t> &dst, const std::vector<uint64_t> &src, size_t shift) {
    size_t ws = shift / 64;
    size_t bs = shift % 64;
    size_t need = src.size() + ws + 1;
    if (dst.size() < need) {
        dst.resize(need, 0);
    }
    if (bs == 0) {
        for (size_t k = 0; k < src.size(); k++) {
            dst[k + ws] ^= src[k];
        }
        return;
    }
    for (size_t k = 0; k < src.size(); k++) {
        dst[k + ws] ^= src[k] << bs;
        dst[k + ws + 1] ^= src[k] >> (64 - bs);
    }
}

// Spreads the low 32 bits of v to the even bit positions.
uint64_t spread32(uint64_t v) {
    v &= 0xFFFFFFFFull;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

}  // namespace

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

GF2Poly GF2Poly::constant(bool c) {
    return from_u64(c ? 1 : 0);
}

GF2Poly GF2Poly::monomial(size_t k) {
    GF2Poly p;
    p.set_coeff(k, true);
    return p;
}

GF2Poly GF2Poly::from_u64(uint64_t bits) {
    GF2Poly p;
    if (bits) {
        p.words_.push_back(bits);
    }
    return p;
}

GF2Poly GF2Poly::from_words(std::vector<uint64_t> words) {
    GF2Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

GF2Poly GF2Poly::parse(std::string_view text) {
    GF2Poly p;
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            compact.push_back(c);
        }
    }
    if (compact.empty()) {
        throw std::invalid_argument("empty polynomial");
    }
    size_t pos = 0;
    while (pos <= compact.size()) {
        size_t end = compact.find('+', pos);
        if (end == std::string::npos) {
            end = compact.size();
        }
        std::string_view term(compact.data() + pos, end - pos);
        if (term == "0") {
        } else if (term == "1") {
            p += constant(true);
        } else if (term == "x") {
            p += GF2Poly::x();
        } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
            size_t k = 0;
            auto [ptr, ec] = std::from_chars(term.data() + 2, term.data() + term.size(), k);
            if (ec != std::errc() || ptr != term.data() + term.size()) {
                throw std::invalid_argument("bad polynomial term: " + std::string(term));
            }
            p += monomial(k);
        } else {
            throw std::invalid_argument("bad polynomial term: " + std::string(term));
        }
        pos = end + 1;
    }
    return p;
}

size_t GF2Poly::degree() const {
    if (words_.empty()) {
        return kZeroDegree;
    }
    return 64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back());
}

bool GF2Poly::coeff(size_t k) const {
    size_t w = k / 64;
    return w < words_.size() && ((words_[w] >> (k % 64)) & 1);
}

void GF2Poly::set_coeff(size_t k, bool v) {
    size_t w = k / 64;
    if (w >= words_.size()) {
        if (!v) {
            return;
        }
        words_.resize(w + 1, 0);
    }
    uint64_t m = uint64_t{1} << (k % 64);
    words_[w] = v ? (words_[w] | m) : (words_[w] & ~m);
    trim();
}

GF2Poly GF2Poly::operator+(const GF2Poly &o) const {
    GF2Poly r = *this;
    r += o;
    return r;
}

GF2Poly &GF2Poly::operator+=(const GF2Poly &o) {
    if (words_.size() < o.words_.size()) {
        words_.resize(o.words_.size(), 0);
    }
    for (size_t k = 0; k < o.words_.size(); k++) {
        words_[k] ^= o.words_[k];
    }
    trim();
    return *this;
}

GF2Poly GF2Poly::operator*(const GF2Poly &o) const {
    GF2Poly r;
    if (is_zero() || o.is_zero()) {
        return r;
    }
    const GF2Poly &a = words_.size() <= o.words_.size() ? *this : o;
    const GF2Poly &b = words_.size() <= o.words_.size() ? o : *this;
    r.words_.assign(a.words_.size() + b.words_.size() + 1, 0);
    for (size_t w = 0; w < a.words_.size(); w++) {
        uint64_t bits = a.words_[w];
        while (bits) {
            size_t i = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            xor_shifted(r.words_, b.words_, i);
        }
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::shifted(size_t k) const {
    GF2Poly r;
    if (is_zero()) {
        return r;
    }
    xor_shifted(r.words_, words_, k);
    r.trim();
    return r;
}

GF2Poly GF2Poly::square() const {
    GF2Poly r;
    r.words_.resize(2 * words_.size(), 0);
    for (size_t k = 0; k < words_.size(); k++) {
        r.words_[2 * k] = spread32(words_[k]);
        r.words_[2 * k + 1] = spread32(words_[k] >> 32);
    }
    r.trim();
    return r;
}

std::string GF2Poly::bit_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    for (size_t k = 0; k <= degree(); k++) {
        s.push_back(coeff(k) ? '1' : '0');
    }
    return s;
}

std::string GF2Poly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    for (size_t k = degree() + 1; k-- > 0;) {
        if (!coeff(k)) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        if (k == 0) {
            s += "1";
        } else if (k == 1) {
            s += "x";
        } else {
            s += "x^" + std::to_string(k);
        }
    }
    return s;
}

std::pair<GF2Poly, GF2Poly> poly_divmod(const GF2Poly &a, const GF2Poly &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    GF2Poly q;
    GF2Poly r = a;
    size_t db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        size_t s = r.degree() - db;
        q.set_coeff(s, true);
        r += b.shifted(s);
    }
    return {q, r};
}

GF2Poly poly_mod(const GF2Poly &a, const GF2Poly &f) {
    if (f.is_zero()) {
        throw std::domain_error("polynomial reduction modulo zero");
    }
    if (a.is_zero() || a.degree() < f.degree()) {
        return a;
    }
    // In-place long division on raw words; avoids reallocating a shifted copy per step.
    std::vector<uint64_t> r = a.words();
    size_t df = f.degree();
    const auto &fw = f.words();
    auto top = [&]() -> size_t {
        while (!r.empty() && r.back() == 0) {
            r.pop_back();
        }
        if (r.empty()) {
            return GF2Poly::kZeroDegree;
        }
        return 64 * (r.size() - 1) + 63 - std::countl_zero(r.back());
    };
    for (size_t d = top(); d != GF2Poly::kZeroDegree && d >= df; d = top()) {
        size_t s = d - df;
        size_t ws = s / 64;
        size_t bs = s % 64;
        for (size_t k = 0; k < fw.size(); k++) {
            r[k + ws] ^= fw[k] << bs;
            if (bs && k + ws + 1 < r.size()) {
                r[k + ws + 1] ^= fw[k] >> (64 - bs);
            }
        }
    }
    return GF2Poly::from_words(std::move(r));
}

GF2Poly poly_mulmod(const GF2Poly &a, const GF2Poly &b, const GF2Poly &f) {
    return poly_mod(a * b, f);
}

GF2Poly poly_gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_divides(const GF2Poly &d, const GF2Poly &a) {
    if (d.is_zero()) {
        return a.is_zero();
    }
    return poly_mod(a, d).is_zero();
}

bool is_irreducible(const GF2Poly &f) {
    if (f.is_zero() || f.degree() == 0) {
        return false;
    }
    size_t n = f.degree();
    if (n == 1) {
        return true;
    }
    // Rabin: x^(2^n) = x mod f, and gcd(x^(2^(n/q)) - x, f) = 1 for every prime q | n.
    std::vector<GF2Poly> frob(n + 1);
    frob[0] = GF2Poly::x();
    for (size_t i = 1; i <= n; i++) {
        frob[i] = poly_mod(frob[i - 1].square(), f);
    }
    if (frob[n] != GF2Poly::x()) {
        return false;
    }
    size_t rest = n;
    for (size_t q = 2; q <= rest; q++) {
        if (rest % q) {
            continue;
        }
        while (rest % q == 0) {
            rest /= q;
        }
        if (!poly_gcd(f, frob[n / q] + GF2Poly::x()).is_one()) {
            return false;
        }
    }
    return true;
}

BitMatrix poly_eval_matrix(const GF2Poly &f, const BitMatrix &a) {
    if (!a.square()) {
        throw std::invalid_argument("poly_eval_matrix: matrix not square");
    }
    size_t n = a.rows();
    BitMatrix r(n, n);
    if (f.is_zero()) {
        return r;
    }
    for (size_t k = f.degree() + 1; k-- > 0;) {
        r = mat_mul(r, a);
        if (f.coeff(k)) {
            for (size_t i = 0; i < n; i++) {
                r.flip(i, i);
            }
        }
    }
    return r;
}

GF2Poly char_poly(const BitMatrix &a) {
    if (!a.square()) {
        throw std::invalid_argument("char_poly: matrix not square");
    }
    size_t n = a.rows();
    std::vector<std::vector<GF2Poly>> m(n, std::vector<GF2Poly>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m[i][j] = GF2Poly::constant(a.get(i, j));
        }
        m[i][i] += GF2Poly::x();
    }
    GF2Poly prev = GF2Poly::constant(true);
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) {
                p++;
            }
            if (p == n) {
                return GF2Poly();
            }
            std::swap(m[k], m[p]);
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                GF2Poly num = m[k][k] * m[i][j] + m[i][k] * m[k][j];
                m[i][j] = prev.is_one() ? num : poly_divmod(num, prev).first;
            }
            m[i][k] = GF2Poly();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

}  // namespace mubforge
