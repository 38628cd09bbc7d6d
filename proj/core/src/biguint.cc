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

#include "mubforge/biguint.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mubforge {

BigUint::BigUint(uint64_t v) {
    if (v) {
        limbs_.push_back(v);
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigUint BigUint::pow2(unsigned m) {
    BigUint r;
    r.limbs_.assign(m / 64 + 1, 0);
    r.limbs_[m / 64] = uint64_t{1} << (m % 64);
    return r;
}

BigUint BigUint::pow2_pm1(unsigned m, int sign) {
    BigUint r = pow2(m);
    if (sign > 0) {
        return r + BigUint(1);
    }
    // subtract one with borrow
    for (auto &w : r.limbs_) {
        if (w--) {
            break;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::parse(std::string_view s) {
    if (s.empty()) {
        throw std::invalid_argument("empty integer");
    }
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a decimal integer: " + std::string(s));
        }
        // r = r * 10 + digit
        unsigned __int128 carry = static_cast<unsigned>(c - '0');
        for (auto &w : r.limbs_) {
            unsigned __int128 t = static_cast<unsigned __int128>(w) * 10 + carry;
            w = static_cast<uint64_t>(t);
            carry = t >> 64;
        }
        if (carry) {
            r.limbs_.push_back(static_cast<uint64_t>(carry));
        }
    }
    r.trim();
    return r;
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) {
        return 0;
    }
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(size_t k) const {
    size_t w = k / 64;
    return w < limbs_.size() && ((limbs_[w] >> (k % 64)) & 1);
}

uint32_t BigUint::mod_small(uint32_t d) const {
    unsigned __int128 r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        r = ((r << 64) | limbs_[i]) % d;
    }
    return static_cast<uint32_t>(r);
}

BigUint BigUint::div_small(uint32_t d) const {
    BigUint q;
    q.limbs_.resize(limbs_.size());
    unsigned __int128 r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (r << 64) | limbs_[i];
        q.limbs_[i] = static_cast<uint64_t>(cur / d);
        r = cur % d;
    }
    q.trim();
    return q;
}

std::string BigUint::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    BigUint t = *this;
    while (!t.is_zero()) {
        uint32_t chunk = t.mod_small(1000000000u);
        t = t.div_small(1000000000u);
        for (int i = 0; i < 9; i++) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
            if (t.is_zero() && chunk == 0) {
                break;
            }
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigUint BigUint::operator+(const BigUint &o) const {
    BigUint r;
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.resize(n + 1, 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < n; i++) {
        unsigned __int128 t = carry;
        if (i < limbs_.size()) t += limbs_[i];
        if (i < o.limbs_.size()) t += o.limbs_[i];
        r.limbs_[i] = static_cast<uint64_t>(t);
        carry = t >> 64;
    }
    r.limbs_[n] = static_cast<uint64_t>(carry);
    r.trim();
    return r;
}

BigUint BigUint::operator*(const BigUint &o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) {
        return r;
    }
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); i++) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); j++) {
            unsigned __int128 t = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint64_t>(t);
            carry = t >> 64;
        }
        r.limbs_[i + o.limbs_.size()] = static_cast<uint64_t>(carry);
    }
    r.trim();
    return r;
}

BigUint &BigUint::operator*=(const BigUint &o) {
    *this = *this * o;
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint &o) const {
    if (limbs_.size() != o.limbs_.size()) {
        return limbs_.size() <=> o.limbs_.size();
    }
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) {
            return limbs_[i] <=> o.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

BigUint product(const FactorList &factors) {
    BigUint r(1);
    for (const auto &f : factors) {
        r *= f;
    }
    return r;
}

FactorList distinct_primes(const FactorList &factors) {
    FactorList r = factors;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

BigUint cofactor(const FactorList &factors, const BigUint &p) {
    BigUint r(1);
    bool skipped = false;
    for (const auto &f : factors) {
        if (!skipped && f == p) {
            skipped = true;
            continue;
        }
        r *= f;
    }
    if (!skipped) {
        throw std::invalid_argument("cofactor: " + p.to_string() + " not in factor list");
    }
    return r;
}

FactorList trial_factor(const BigUint &n) {
    if (!n.fits_u64()) {
        throw std::invalid_argument("trial_factor: value too large");
    }
    uint64_t v = n.low_u64();
    FactorList r;
    if (v < 2) {
        return r;
    }
    for (uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        while (v % p == 0) {
            r.emplace_back(p);
            v /= p;
        }
    }
    if (v > 1) {
        r.emplace_back(v);
    }
    return r;
}

}  // namespace mubforge
