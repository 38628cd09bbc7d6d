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

#include "mubforge/mubgen.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "mubforge/fibpoly.h"
#include "mubforge/gf2poly.h"
#include "mubforge/stabsearch.h"

namespace mubforge {

namespace {

const Complex kI(0, 1);

Complex minus_i_pow(unsigned k) {
    switch (k % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, -1};
        case 2:
            return {-1, 0};
        default:
            return {0, 1};
    }
}

void require_dense(size_t m, const char *what) {
    if (m > kMaxDenseQubits) {
        throw std::invalid_argument(std::string(what) + ": at most " + std::to_string(kMaxDenseQubits) + " qubits");
    }
}

std::vector<PackedPauli> packed_columns(const BitMatrix &g) {
    std::vector<PackedPauli> cols(g.cols());
    for (size_t c = 0; c < g.cols(); c++) {
        cols[c] = pack_pauli(column_vector(g, c));
    }
    return cols;
}

// Gray-code walk over all nonzero combinations of the columns.
template <typename F>
void for_each_combination(const std::vector<PackedPauli> &cols, F &&visit) {
    PackedPauli v = 0;
    uint64_t n = uint64_t{1} << cols.size();
    for (uint64_t c = 1; c < n; c++) {
        v ^= cols[std::countr_zero(c)];
        visit(v);
    }
}

}  // namespace

PackedPauli pack_pauli(const PauliVector &v) {
    size_t m = v.num_qubits();
    if (m > 32) {
        throw std::invalid_argument("pack_pauli: more than 32 qubits");
    }
    PackedPauli p = 0;
    for (size_t k = 0; k < m; k++) {
        p |= PackedPauli{v.z(k)} << k;
        p |= PackedPauli{v.x(k)} << (32 + k);
    }
    return p;
}

PauliVector unpack_pauli(PackedPauli p, size_t m) {
    return PauliVector::from_zx(m, packed_z(p), packed_x(p));
}

int packed_symplectic(PackedPauli a, PackedPauli b) {
    return std::popcount((packed_z(a) & packed_x(b)) ^ (packed_x(a) & packed_z(b))) & 1;
}

std::vector<PackedPauli> column_space(const BitMatrix &g) {
    std::vector<PackedPauli> out;
    out.reserve((size_t{1} << g.cols()) - 1);
    for_each_combination(packed_columns(g), [&](PackedPauli v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

PauliClassSet generate_classes(const BitMatrix &c, const BitMatrix &g0) {
    size_t m = g0.cols();
    if (c.rows() != 2 * m || c.cols() != 2 * m || g0.rows() != 2 * m) {
        throw std::invalid_argument("generate_classes: need C of size 2m x 2m and G0 of size 2m x m");
    }
    if (m > 30) {
        throw std::invalid_argument("generate_classes: too many qubits");
    }
    if (g0.rank() != m) {
        throw std::invalid_argument("generate_classes: G0 does not have full column rank");
    }
    PauliClassSet set;
    set.m = m;
    size_t d = size_t{1} << m;
    BitMatrix g = g0;
    for (size_t j = 0; j <= d; j++) {
        set.generators.push_back(g);
        g = mat_mul(c, g);
    }
    if (m > kMaxMaterializedQubits) {
        return set;
    }
    std::vector<uint64_t> seen((size_t{1} << (2 * m)) / 64 + 1, 0);
    auto index = [m](PackedPauli p) { return (PackedPauli{packed_x(p)} << m) | packed_z(p); };
    for (size_t j = 0; j <= d; j++) {
        std::vector<PackedPauli> cls;
        cls.reserve(d - 1);
        bool clash = false;
        for_each_combination(packed_columns(set.generators[j]), [&](PackedPauli v) {
            uint64_t k = index(v);
            if ((seen[k / 64] >> (k % 64)) & 1) {
                clash = true;
            }
            seen[k / 64] |= uint64_t{1} << (k % 64);
            cls.push_back(v);
        });
        if (clash) {
            throw std::runtime_error("generate_classes: class " + std::to_string(j) +
                                     " overlaps an earlier class; the classes do not partition");
        }
        std::sort(cls.begin(), cls.end());
        set.classes.push_back(std::move(cls));
    }
    return set;
}

BitMatrix standard_form(const BitMatrix &g) {
    size_t m = g.cols();
    if (g.rows() != 2 * m) {
        throw std::invalid_argument("standard_form: need a 2m x m matrix");
    }
    if (auto xi = mat_inverse(g.block(m, 0, m, m))) {
        return mat_mul(g, *xi);
    }
    if (auto zi = mat_inverse(g.block(0, 0, m, m))) {
        return mat_mul(g, *zi);
    }
    throw std::domain_error("standard_form: neither block is invertible");
}

ComplexMatrix pauli_unitary(const PauliVector &a) {
    size_t m = a.num_qubits();
    require_dense(m, "pauli_unitary");
    PackedPauli p = pack_pauli(a);
    uint32_t z = packed_z(p);
    uint32_t x = packed_x(p);
    size_t d = size_t{1} << m;
    Complex global = minus_i_pow(std::popcount(z & x));
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (size_t j = 0; j < d; j++) {
        size_t r = j ^ x;
        u(r, j) = (std::popcount(z & r) & 1) ? -global : global;
    }
    return u;
}

std::vector<Complex> phase_system(const BitMatrix &b) {
    size_t m = b.rows();
    if (!b.square()) {
        throw std::invalid_argument("phase_system: B not square");
    }
    if (m > 24) {
        throw std::invalid_argument("phase_system: too many qubits");
    }
    size_t d = size_t{1} << m;
    std::vector<Complex> p(d);
    for (size_t j = 0; j < d; j++) {
        unsigned quad = 0;
        unsigned diag = 0;
        for (size_t k = 0; k < m; k++) {
            if (!((j >> k) & 1)) {
                continue;
            }
            diag += b.get(k, k);
            for (size_t l = 0; l < m; l++) {
                if ((j >> l) & 1) {
                    quad += b.get(k, l);
                }
            }
        }
        Complex v = minus_i_pow(quad % 4);
        p[j] = (diag & 1) ? -v : v;
    }
    return p;
}

ComplexMatrix build_V(const BitMatrix &b) {
    size_t m = b.rows();
    require_dense(m, "build_V");
    auto p = phase_system(b);
    size_t d = size_t{1} << m;
    ComplexMatrix v(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            v(r, c) = (std::popcount(r & c) & 1) ? -p[r] : p[r];
        }
    }
    return v;
}

ComplexMatrix build_unitary(const BitMatrix &b) {
    if (!is_symmetric(b)) {
        throw std::invalid_argument("build_unitary: B must be symmetric");
    }
    ComplexMatrix u = build_V(b) / std::sqrt(static_cast<double>(size_t{1} << b.rows()));
    Complex tr = u.trace();
    if (std::abs(tr) < 1e-12) {
        throw std::domain_error("build_unitary: tr(P H) vanishes; B does not define a valid set");
    }
    return u * (-1.0 / tr);
}

std::vector<Complex> chop_map(const ComplexMatrix &v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (Eigen::Index c = 0; c < v.cols(); c++) {
        for (Eigen::Index r = 0; r < v.rows(); r++) {
            out.push_back(v(r, c));
        }
    }
    return out;
}

std::vector<Complex> build_V_recursive_phases(unsigned k) {
    if (k > 4) {
        throw std::invalid_argument("build_V_recursive_phases: k must be at most 4");
    }
    std::vector<Complex> ph = {Complex(1, 0), kI};
    for (unsigned level = 1; level <= k; level++) {
        size_t n = ph.size();
        std::vector<Complex> next(n * n);
        for (size_t c = 0; c < n; c++) {
            for (size_t r = 0; r < n; r++) {
                next[c * n + r] = (std::popcount(r & c) & 1) ? -ph[r] : ph[r];
            }
        }
        ph = std::move(next);
    }
    return ph;
}

ComplexMatrix build_V_recursive(unsigned k) {
    if (k > 2) {
        throw std::invalid_argument("build_V_recursive: dense output only for k <= 2");
    }
    auto ph = build_V_recursive_phases(k);
    size_t n = ph.size();
    ComplexMatrix v(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            v(r, c) = (std::popcount(r & c) & 1) ? -ph[r] : ph[r];
        }
    }
    return v;
}

MubReport verify_mub(const std::vector<ComplexMatrix> &bases, double tol) {
    MubReport rep;
    rep.bases = bases.size();
    if (bases.empty()) {
        return rep;
    }
    auto d = bases[0].rows();
    double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(d));
    double inv_d = 1.0 / static_cast<double>(d);
    for (const auto &b : bases) {
        if (b.rows() != d || b.cols() != d) {
            throw std::invalid_argument("verify_mub: bases of different dimensions");
        }
        ComplexMatrix e = b.adjoint() * b - ComplexMatrix::Identity(d, d);
        rep.max_unitarity_deviation = std::max(rep.max_unitarity_deviation, e.cwiseAbs().maxCoeff());
    }
    for (size_t a = 0; a < bases.size(); a++) {
        for (size_t b = a + 1; b < bases.size(); b++) {
            ComplexMatrix g = bases[a].adjoint() * bases[b];
            for (Eigen::Index k = 0; k < g.size(); k++) {
                double amp = std::abs(g(k));
                rep.max_overlap_deviation = std::max(rep.max_overlap_deviation, std::abs(amp - inv_sqrt));
                rep.max_probability_deviation = std::max(rep.max_probability_deviation, std::abs(amp * amp - inv_d));
            }
        }
    }
    rep.ok = rep.max_unitarity_deviation <= tol && rep.max_overlap_deviation <= tol &&
             rep.max_probability_deviation <= tol;
    return rep;
}

std::vector<ComplexMatrix> cyclic_bases(const ComplexMatrix &u) {
    std::vector<ComplexMatrix> out;
    auto d = u.rows();
    ComplexMatrix p = ComplexMatrix::Identity(d, d);
    for (Eigen::Index j = 0; j <= d; j++) {
        out.push_back(p);
        p = u * p;
    }
    return out;
}

SpectrumReport spectrum_check(const ComplexMatrix &u, double tol) {
    SpectrumReport rep;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, false);
    if (solver.info() != Eigen::Success) {
        return rep;
    }
    auto d = u.rows();
    for (Eigen::Index k = 0; k < d; k++) {
        rep.eigenvalues.push_back(solver.eigenvalues()(k));
    }
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    rep.all_roots_of_unity = true;
    rep.excludes_one = true;
    rep.distinct = true;
    for (size_t k = 0; k < rep.eigenvalues.size(); k++) {
        Complex l = rep.eigenvalues[k];
        if (std::abs(std::pow(l, static_cast<double>(d + 1)) - 1.0) > tol) {
            rep.all_roots_of_unity = false;
        }
        if (std::abs(l - 1.0) <= tol) {
            rep.excludes_one = false;
        }
        for (size_t j = 0; j < k; j++) {
            if (std::abs(l - rep.eigenvalues[j]) <= tol) {
                rep.distinct = false;
            }
        }
    }
    rep.ok = rep.all_roots_of_unity && rep.excludes_one && rep.distinct;
    return rep;
}

Complex trace_minor(const ComplexMatrix &v, int l) {
    if (l == 1) {
        return v.trace();
    }
    if (l != 2) {
        throw std::invalid_argument("trace_minor: l must be 1 or 2");
    }
    Complex s = 0;
    for (Eigen::Index i = 0; i < v.rows(); i++) {
        for (Eigen::Index j = i + 1; j < v.rows(); j++) {
            s += v(i, i) * v(j, j) - v(i, j) * v(j, i);
        }
    }
    return s;
}

std::vector<int> induced_permutation(const BitMatrix &t, const PauliClassSet &set) {
    if (set.classes.empty()) {
        throw std::invalid_argument("induced_permutation: classes not materialized");
    }
    std::unordered_map<PackedPauli, int> owner;
    for (size_t j = 0; j < set.classes.size(); j++) {
        for (PackedPauli p : set.classes[j]) {
            owner[p] = static_cast<int>(j);
        }
    }
    std::vector<int> perm;
    for (const auto &g : set.generators) {
        auto space = column_space(mat_mul(t, g));
        auto it = owner.find(space.front());
        int j = it == owner.end() ? -1 : it->second;
        if (j >= 0 && space != set.classes[j]) {
            j = -1;
        }
        perm.push_back(j);
    }
    return perm;
}

std::vector<int> class_permutation(size_t l, const BitMatrix &b) {
    size_t m = b.rows();
    size_t d = size_t{1} << m;
    if (l < 1 || l > d) {
        throw std::invalid_argument("class_permutation: l must lie in 1..d");
    }
    auto fl = mat_inverse(poly_eval_matrix(fib_poly(l), b));
    if (!fl) {
        throw std::domain_error("class_permutation: F_l(B) is singular");
    }
    BitMatrix top = mat_mul(poly_eval_matrix(fib_poly(l + 1), b), *fl);
    BitMatrix a = BitMatrix::from_blocks(BitMatrix::identity(m), top, BitMatrix(m, m), BitMatrix::identity(m));
    auto set = generate_classes(fib_stabilizer(b), standard_g0(m));
    return induced_permutation(a, set);
}

std::optional<BitMatrix> check_equivalence(const BitMatrix &b1, const BitMatrix &b2) {
    size_t m = b1.rows();
    if (m > 4) {
        throw std::invalid_argument("check_equivalence: at most 4 qubits");
    }
    if (char_poly(b1) != char_poly(b2)) {
        return std::nullopt;
    }
    uint64_t n = uint64_t{1} << (m * m);
    for (uint64_t code = 0; code < n; code++) {
        BitMatrix s(m, m);
        for (size_t k = 0; k < m * m; k++) {
            s.set(k / m, k % m, (code >> k) & 1);
        }
        BitMatrix st = s.transpose();
        if (!mat_mul(s, st).is_identity()) {
            continue;
        }
        if (mat_mul(mat_mul(s, b1), st) == b2) {
            return BitMatrix::from_blocks(s, BitMatrix(m, m), BitMatrix(m, m), s);
        }
    }
    return std::nullopt;
}

}  // namespace mubforge
