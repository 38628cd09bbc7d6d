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

#include "mubforge/stabsearch.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "mubforge/entclass.h"
#include "mubforge/fibpoly.h"
#include "mubforge/mubgen.h"

namespace mubforge {

namespace {

// Matrices of at most 8 x 8 packed one row per byte: bit j of byte i is entry (i, j).
using M8 = uint64_t;

inline uint64_t row8(M8 a, size_t i) {
    return (a >> (8 * i)) & 0xFF;
}

M8 id8(size_t n) {
    M8 r = 0;
    for (size_t i = 0; i < n; i++) {
        r |= uint64_t{1} << (9 * i);
    }
    return r;
}

M8 mul8(M8 a, M8 b, size_t rows) {
    M8 r = 0;
    for (size_t i = 0; i < rows; i++) {
        uint64_t bits = row8(a, i);
        uint64_t acc = 0;
        while (bits) {
            acc ^= row8(b, std::countr_zero(bits));
            bits &= bits - 1;
        }
        r |= acc << (8 * i);
    }
    return r;
}

M8 transpose8(M8 a, size_t rows, size_t cols) {
    M8 r = 0;
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            if ((a >> (8 * i + j)) & 1) {
                r |= uint64_t{1} << (8 * j + i);
            }
        }
    }
    return r;
}

size_t rank8(M8 a, size_t rows) {
    uint64_t r[8];
    for (size_t i = 0; i < rows; i++) {
        r[i] = row8(a, i);
    }
    size_t rank = 0;
    for (size_t col = 0; col < 8 && rank < rows; col++) {
        size_t piv = rank;
        while (piv < rows && !((r[piv] >> col) & 1)) {
            piv++;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(r[rank], r[piv]);
        for (size_t i = 0; i < rows; i++) {
            if (i != rank && ((r[i] >> col) & 1)) {
                r[i] ^= r[rank];
            }
        }
        rank++;
    }
    return rank;
}

std::optional<M8> inv8(M8 a, size_t n) {
    uint64_t l[8];
    uint64_t rr[8];
    for (size_t i = 0; i < n; i++) {
        l[i] = row8(a, i);
        rr[i] = uint64_t{1} << i;
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && !((l[piv] >> col) & 1)) {
            piv++;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(l[col], l[piv]);
        std::swap(rr[col], rr[piv]);
        for (size_t i = 0; i < n; i++) {
            if (i != col && ((l[i] >> col) & 1)) {
                l[i] ^= l[col];
                rr[i] ^= rr[col];
            }
        }
    }
    M8 out = 0;
    for (size_t i = 0; i < n; i++) {
        out |= rr[i] << (8 * i);
    }
    return out;
}

M8 pow8(M8 a, uint64_t e, size_t n) {
    M8 r = id8(n);
    for (int k = 63; k >= 0; k--) {
        r = mul8(r, r, n);
        if ((e >> k) & 1) {
            r = mul8(r, a, n);
        }
    }
    return r;
}

M8 to8(const BitMatrix &m) {
    M8 r = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            if (m.get(i, j)) {
                r |= uint64_t{1} << (8 * i + j);
            }
        }
    }
    return r;
}

BitMatrix from8(M8 a, size_t rows, size_t cols) {
    BitMatrix r(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            r.set(i, j, (a >> (8 * i + j)) & 1);
        }
    }
    return r;
}

M8 code_to8(uint64_t code, size_t n) {
    M8 r = 0;
    for (size_t k = 0; k < n * n; k++) {
        if ((code >> k) & 1) {
            r |= uint64_t{1} << (8 * (k / n) + k % n);
        }
    }
    return r;
}

bool symmetric8(M8 a, size_t n) {
    return a == transpose8(a, n, n);
}

// (F_N(B), F_{N+1}(B)) by the doubling rules F_{2j} = B F_j^2, F_{2j+1} = F_j^2 + F_{j+1}^2.
std::pair<BitMatrix, BitMatrix> fib_matrix_pair(const BitMatrix &b, const BigUint &n) {
    size_t m = b.rows();
    BitMatrix f(m, m);
    BitMatrix g = BitMatrix::identity(m);
    for (size_t k = n.bit_length(); k-- > 0;) {
        BitMatrix f2 = mat_mul(f, f);
        BitMatrix g2 = mat_mul(g, g);
        f = mat_mul(b, f2);
        g = f2 + g2;
        if (n.bit(k)) {
            BitMatrix next = mat_mul(b, g) + f;
            f = std::move(g);
            g = std::move(next);
        }
    }
    return {f, g};
}

std::vector<uint64_t> invertible_codes(size_t n) {
    std::vector<uint64_t> out;
    for (uint64_t c = 0; c < (uint64_t{1} << (n * n)); c++) {
        if (inv8(code_to8(c, n), n)) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<M8> symmetric_matrices(size_t n) {
    std::vector<M8> out;
    size_t bits = n * (n + 1) / 2;
    for (uint64_t c = 0; c < (uint64_t{1} << bits); c++) {
        M8 r = 0;
        size_t k = 0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i; j < n; j++, k++) {
                if ((c >> k) & 1) {
                    r |= uint64_t{1} << (8 * i + j);
                    r |= uint64_t{1} << (8 * j + i);
                }
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace

const char *family_name(Family f) {
    switch (f) {
        case Family::Triangle:
            return "triangle";
        case Family::Companion:
            return "companion";
        case Family::Fermat:
            return "fermat";
        case Family::Group:
            return "group";
        case Family::GeneralSymplectic:
            return "general";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Triangle, Family::Companion, Family::Fermat, Family::Group, Family::GeneralSymplectic}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

BitMatrix fib_stabilizer(const BitMatrix &b) {
    size_t m = b.rows();
    return BitMatrix::from_blocks(b, BitMatrix::identity(m), BitMatrix::identity(m), BitMatrix(m, m));
}

BitMatrix group_stabilizer(const BitMatrix &b, const BitMatrix &r) {
    auto ri = mat_inverse(r);
    if (!ri) {
        throw std::domain_error("group_stabilizer: R is singular");
    }
    return BitMatrix::from_blocks(b, r, *ri, BitMatrix(b.rows(), b.rows()));
}

BitMatrix standard_g0(size_t m) {
    return BitMatrix::vstack(BitMatrix::identity(m), BitMatrix(m, m));
}

BitMatrix inhomogeneous_g0(const BitMatrix &g0x) {
    if (!is_symmetric(g0x)) {
        throw std::invalid_argument("inhomogeneous_g0: g0x must be symmetric");
    }
    return BitMatrix::vstack(BitMatrix::identity(g0x.rows()), g0x);
}

BitMatrix x_g0(size_t m) {
    return BitMatrix::vstack(BitMatrix(m, m), BitMatrix::identity(m));
}

bool validate_stabilizer(const BitMatrix &c, size_t m, const FactorList &plus_factors) {
    if (c.rows() != 2 * m || c.cols() != 2 * m) {
        throw std::invalid_argument("validate_stabilizer: C must be 2m x 2m");
    }
    if (plus_factors.empty()) {
        throw std::invalid_argument("validate_stabilizer: empty factor list");
    }
    BigUint n = BigUint::pow2_pm1(static_cast<unsigned>(m), +1);
    if (product(plus_factors) != n) {
        throw std::invalid_argument("validate_stabilizer: factors do not multiply to 2^m+1");
    }
    if (!is_symplectic(c)) {
        return false;
    }
    if (!mat_pow(c, n).is_identity()) {
        return false;
    }
    for (const BigUint &p : distinct_primes(plus_factors)) {
        BitMatrix q = mat_pow(c, cofactor(plus_factors, p));
        if (q.block(0, m, m, m).is_zero() || q.block(m, 0, m, m).is_zero()) {
            return false;
        }
    }
    return true;
}

bool validate_set(const BitMatrix &c, const BitMatrix &g0) {
    size_t m = g0.cols();
    if (c.rows() != 2 * m || c.cols() != 2 * m || g0.rows() != 2 * m) {
        throw std::invalid_argument("validate_set: need C of size 2m x 2m and G0 of size 2m x m");
    }
    if (m > 16) {
        throw std::invalid_argument("validate_set: at most 16 qubits");
    }
    if (g0.rank() != m) {
        return false;
    }
    BitMatrix j = BitMatrix::from_blocks(BitMatrix(m, m), BitMatrix::identity(m), BitMatrix::identity(m), BitMatrix(m, m));
    if (!mat_mul(mat_mul(g0.transpose(), j), g0).is_zero()) {
        return false;
    }
    if (!is_symplectic(c)) {
        return false;
    }
    size_t d = size_t{1} << m;
    if (!mat_pow(c, BigUint(d + 1)).is_identity()) {
        return false;
    }
    BitMatrix g = g0;
    for (size_t k = 1; k <= (d + 1) / 2; k++) {
        g = mat_mul(c, g);
        if (BitMatrix::hstack(g0, g).rank() != 2 * m) {
            return false;
        }
    }
    return true;
}

BitMatrix triangle_B(size_t m, const BitMatrix &a) {
    size_t r = a.rows();
    if (!a.square() || r > m) {
        throw std::invalid_argument("triangle_B: corner must be square and fit");
    }
    BitMatrix b(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; i + j < m; j++) {
            b.set(i, j, true);
        }
    }
    b.set_block(m - r, m - r, a);
    return b;
}

TriangleResult search_triangle(size_t m, const FactorList &plus_factors, size_t r_start) {
    if (m == 0) {
        throw std::invalid_argument("search_triangle: m must be positive");
    }
    size_t r_max = std::max<size_t>(1, m / 2);
    BigUint n = BigUint::pow2_pm1(static_cast<unsigned>(m), +1);
    TriangleResult res;
    for (size_t r = std::max<size_t>(1, r_start); r <= r_max; r++) {
        size_t bits = r * (r + 1) / 2;
        if (bits > 40) {
            break;
        }
        for (uint64_t code = 0; code < (uint64_t{1} << bits); code++) {
            BitMatrix a(r, r);
            size_t e = 0;
            for (size_t i = 0; i < r; i++) {
                for (size_t j = i; j < r; j++, e++) {
                    bool v = (code >> (bits - 1 - e)) & 1;
                    a.set(i, j, v);
                    a.set(j, i, v);
                }
            }
            BitMatrix b = triangle_B(m, a);
            res.tried++;
            if (!fib_matrix_pair(b, n).first.is_zero()) {
                continue;
            }
            if (validate_stabilizer(fib_stabilizer(b), m, plus_factors)) {
                res.A = a;
                res.B = b;
                return res;
            }
        }
    }
    throw std::runtime_error("search_triangle: no corner matrix up to r = " + std::to_string(r_max) +
                             " yields a valid stabilizer for m = " + std::to_string(m));
}

BitMatrix hankel_B(size_t m, std::string_view s) {
    if (s.size() > 2 * m - 1) {
        throw std::invalid_argument("hankel_B: at most 2m-1 parameters");
    }
    BitMatrix b(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            size_t k = i + j;
            if (k < s.size()) {
                if (s[k] != '0' && s[k] != '1') {
                    throw std::invalid_argument("hankel_B: parameters must be 0/1");
                }
                b.set(i, j, s[k] == '1');
            }
        }
    }
    return b;
}

bool has_full_fibonacci_index(const BitMatrix &b, const FactorDb &db) {
    GF2Poly chi = char_poly(b);
    if (!is_irreducible(chi)) {
        return false;
    }
    unsigned m = static_cast<unsigned>(b.rows());
    auto idx = fibonacci_index(chi, db.factors(m, -1), db.factors(m, +1));
    return idx.side == FibSide::PlusOne;
}

std::string search_companion(size_t m, const FactorDb &db) {
    if (m == 0 || m > 40) {
        throw std::invalid_argument("search_companion: need 1 <= m <= 40");
    }
    size_t len = 2 * m - 1;
    FactorList plus = db.factors(static_cast<unsigned>(m), +1);
    for (uint64_t v = 1; v < (uint64_t{1} << len); v++) {
        std::string s;
        for (size_t t = 0; t < len; t++) {
            s.push_back(((v >> t) & 1) ? '1' : '0');
        }
        BitMatrix b = hankel_B(m, s);
        if (!has_full_fibonacci_index(b, db)) {
            continue;
        }
        if (!validate_stabilizer(fib_stabilizer(b), m, plus)) {
            throw std::logic_error("search_companion: accepted B fails validate_stabilizer");
        }
        s.erase(s.find_last_of('1') + 1);
        return s;
    }
    throw std::runtime_error("search_companion: parameter space exhausted for m = " + std::to_string(m));
}

BitMatrix fermat_B(unsigned k) {
    if (k > 12) {
        throw std::invalid_argument("fermat_B: k must be at most 12");
    }
    BitMatrix b = BitMatrix::identity(1);
    for (unsigned j = 0; j < k; j++) {
        b = fib_stabilizer(b);
    }
    return b;
}

BitMatrix fermat_C(unsigned k) {
    return fermat_B(k + 1);
}

GF2Poly reciprocal_op(const GF2Poly &f) {
    if (f.is_zero()) {
        throw std::invalid_argument("reciprocal_op: zero polynomial");
    }
    size_t n = f.degree();
    GF2Poly base = GF2Poly::monomial(2) + GF2Poly::constant(true);
    GF2Poly power = GF2Poly::constant(true);
    GF2Poly out;
    for (size_t i = 0; i <= n; i++) {
        if (f.coeff(i)) {
            out += (power).shifted(n - i);
        }
        power = power * base;
    }
    return out;
}

bool wiedemann_test(unsigned k, const FactorDb &db) {
    if (k > 11) {
        throw std::invalid_argument("wiedemann_test: k must be at most 11");
    }
    unsigned m = 1u << k;
    FactorList plus = db.factors(m, +1);
    return validate_stabilizer(fermat_C(k), m, plus);
}

bool is_polynomial_in(const BitMatrix &r, const BitMatrix &b) {
    size_t m = b.rows();
    // Flatten I, B, ..., B^{m-1} and R into rows of length m^2 and compare ranks.
    auto flat = [m](const BitMatrix &x, BitMatrix &dst, size_t row) {
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                dst.set(row, i * m + j, x.get(i, j));
            }
        }
    };
    BitMatrix basis(m, m * m);
    BitMatrix p = BitMatrix::identity(m);
    for (size_t k = 0; k < m; k++) {
        flat(p, basis, k);
        p = mat_mul(p, b);
    }
    BitMatrix ext(m + 1, m * m);
    for (size_t k = 0; k < m; k++) {
        for (size_t c = 0; c < m * m; c++) {
            ext.set(k, c, basis.get(k, c));
        }
    }
    flat(r, ext, m);
    return ext.rank() == basis.rank();
}

std::vector<GroupPair> search_group(size_t m, const FactorDb &db, size_t limit) {
    if (m == 0 || m > 4) {
        throw std::invalid_argument("search_group: exhaustive search needs 1 <= m <= 4");
    }
    std::vector<BitMatrix> rs;
    for (M8 s : symmetric_matrices(m)) {
        if (inv8(s, m)) {
            rs.push_back(from8(s, m, m));
        }
    }
    std::map<std::string, bool> chi_ok;
    std::vector<GroupPair> out;
    BitMatrix g0 = standard_g0(m);
    for (uint64_t code = 0; code < (uint64_t{1} << (m * m)); code++) {
        BitMatrix b = from8(code_to8(code, m), m, m);
        GF2Poly chi = char_poly(b);
        auto key = chi.bit_string();
        auto it = chi_ok.find(key);
        if (it == chi_ok.end()) {
            bool ok = false;
            if (is_irreducible(chi)) {
                auto idx = fibonacci_index(chi, db.factors(m, -1), db.factors(m, +1));
                ok = idx.side == FibSide::PlusOne;
            }
            it = chi_ok.emplace(key, ok).first;
        }
        if (!it->second) {
            continue;
        }
        for (const auto &r : rs) {
            if (!is_symmetric(mat_mul(b, r))) {
                continue;
            }
            BitMatrix c = group_stabilizer(b, r);
            if (!validate_set(c, g0)) {
                continue;
            }
            GroupPair gp{b, r, is_polynomial_in(r, b), structure_vector(generate_classes(c, g0))};
            out.push_back(std::move(gp));
            if (limit && out.size() >= limit) {
                return out;
            }
        }
    }
    return out;
}

std::vector<GroupPair> dedup_group(const std::vector<GroupPair> &pairs) {
    std::vector<GroupPair> out;
    for (const auto &gp : pairs) {
        size_t m = gp.B.rows();
        bool minimal = true;
        // Nonzero polynomials of degree < m in B.
        for (uint64_t code = 2; code < (uint64_t{1} << m) && minimal; code++) {
            BitMatrix p(m, m);
            BitMatrix pw = BitMatrix::identity(m);
            for (size_t k = 0; k < m; k++) {
                if ((code >> k) & 1) {
                    p += pw;
                }
                pw = mat_mul(pw, gp.B);
            }
            if (mat_mul(p, gp.R) < gp.R) {
                minimal = false;
            }
        }
        if (minimal) {
            out.push_back(gp);
        }
    }
    return out;
}

std::vector<StabilizerCandidate> search_general(const GeneralSearchOptions &opt) {
    size_t m = opt.m;
    if (m == 0 || m > 4) {
        throw std::invalid_argument("search_general: need 1 <= m <= 4");
    }
    if (m == 4 && opt.samples == 0) {
        throw std::invalid_argument("search_general: m = 4 needs random sampling (samples > 0)");
    }
    BitMatrix g0;
    if (opt.g0) {
        g0 = *opt.g0;
    } else if (opt.g0x) {
        g0 = inhomogeneous_g0(*opt.g0x);
    } else {
        g0 = standard_g0(m);
    }
    if (g0.rows() != 2 * m || g0.cols() != m) {
        throw std::invalid_argument("search_general: G0 must be 2m x m");
    }
    size_t n2 = 2 * m;
    size_t d = size_t{1} << m;
    M8 g0_8 = to8(g0);
    M8 id = id8(m);
    auto inv_codes = invertible_codes(m);
    auto syms = symmetric_matrices(m);

    // Checks one (s, S, t) triple; returns the packed C on success.
    auto check = [&](M8 s, M8 sti, M8 sym, M8 t) -> std::optional<M8> {
        M8 u = mul8(sti, sym, m);
        M8 v = mul8(sti, id ^ mul8(transpose8(u, m, m), t, m), m);
        if (!symmetric8(mul8(transpose8(t, m, m), v, m), m)) {
            return std::nullopt;
        }
        M8 c = 0;
        for (size_t i = 0; i < m; i++) {
            c |= (row8(s, i) | (row8(t, i) << m)) << (8 * i);
            c |= (row8(u, i) | (row8(v, i) << m)) << (8 * (m + i));
        }
        if (pow8(c, d + 1, n2) != id8(n2)) {
            return std::nullopt;
        }
        M8 g = g0_8;
        for (size_t k = 1; k <= (d + 1) / 2; k++) {
            g = mul8(c, g, n2);
            M8 h = 0;
            for (size_t i = 0; i < n2; i++) {
                h |= (row8(g0_8, i) | (row8(g, i) << m)) << (8 * i);
            }
            if (rank8(h, n2) != n2) {
                return std::nullopt;
            }
        }
        return c;
    };

    auto accept = [&](M8 c8, std::vector<StabilizerCandidate> &sink, const char *how) {
        BitMatrix c = from8(c8, n2, n2);
        if (opt.target) {
            auto n = structure_vector(generate_classes(c, g0));
            if (n != *opt.target) {
                return;
            }
        }
        sink.push_back(StabilizerCandidate{c, std::nullopt, std::nullopt, g0, how});
    };

    // Work units: one invertible s each (exhaustive) or one block of samples (random).
    constexpr uint64_t kBlock = 4096;
    size_t units = opt.samples ? static_cast<size_t>((opt.samples + kBlock - 1) / kBlock) : inv_codes.size();
    auto run_unit = [&](size_t unit) {
        std::vector<StabilizerCandidate> found;
        if (!opt.samples) {
            M8 s = code_to8(inv_codes[unit], m);
            M8 sti = *inv8(transpose8(s, m, m), m);
            for (M8 sym : syms) {
                for (uint64_t tc = 0; tc < (uint64_t{1} << (m * m)); tc++) {
                    if (auto c = check(s, sti, sym, code_to8(tc, m))) {
                        accept(*c, found, "general-exhaustive");
                        if (opt.limit && found.size() >= opt.limit) {
                            return found;
                        }
                    }
                }
            }
            return found;
        }
        std::seed_seq seq{opt.seed, static_cast<uint64_t>(unit)};
        std::mt19937_64 rng(seq);
        uint64_t begin = unit * kBlock;
        uint64_t end = std::min<uint64_t>(opt.samples, begin + kBlock);
        std::uniform_int_distribution<size_t> pick_s(0, inv_codes.size() - 1);
        std::uniform_int_distribution<size_t> pick_sym(0, syms.size() - 1);
        for (uint64_t k = begin; k < end; k++) {
            M8 s = code_to8(inv_codes[pick_s(rng)], m);
            M8 sym = syms[pick_sym(rng)];
            M8 t = code_to8(rng() & ((uint64_t{1} << (m * m)) - 1), m);
            M8 sti = *inv8(transpose8(s, m, m), m);
            if (auto c = check(s, sti, sym, t)) {
                accept(*c, found, "general-sampled");
                if (opt.limit && found.size() >= opt.limit) {
                    return found;
                }
            }
        }
        return found;
    };

    std::vector<StabilizerCandidate> out;
    size_t jobs = std::max<size_t>(1, opt.jobs);
    for (size_t wave = 0; wave < units; wave += jobs) {
        size_t count = std::min(jobs, units - wave);
        std::vector<std::vector<StabilizerCandidate>> results(count);
        if (count == 1) {
            results[0] = run_unit(wave);
        } else {
            std::vector<std::thread> threads;
            for (size_t w = 0; w < count; w++) {
                threads.emplace_back([&, w] { results[w] = run_unit(wave + w); });
            }
            for (auto &t : threads) {
                t.join();
            }
        }
        for (auto &r : results) {
            for (auto &cand : r) {
                out.push_back(std::move(cand));
            }
        }
        if (opt.limit && out.size() >= opt.limit) {
            out.resize(opt.limit);
            break;
        }
    }
    return out;
}

BigUint count_symmetric_invertible(size_t m) {
    // a(m) = 2^{m(m+1)/2 - c^2} prod_{i=1..c} (2^{2i-1} - 1), c = ceil(m/2)
    size_t c = (m + 1) / 2;
    BigUint r = BigUint::pow2(static_cast<unsigned>(m * (m + 1) / 2 - c * c));
    for (size_t i = 1; i <= c; i++) {
        r *= BigUint::pow2_pm1(static_cast<unsigned>(2 * i - 1), -1);
    }
    return r;
}

uint64_t count_symmetric_invertible_exhaustive(size_t m) {
    if (m == 0 || m > 6) {
        throw std::invalid_argument("count_symmetric_invertible_exhaustive: need 1 <= m <= 6");
    }
    uint64_t n = 0;
    for (M8 s : symmetric_matrices(m)) {
        if (inv8(s, m)) {
            n++;
        }
    }
    return n;
}

}  // namespace mubforge
