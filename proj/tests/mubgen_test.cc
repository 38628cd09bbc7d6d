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

#include "mubforge/mubgen.h"
#include "mubforge/stabsearch.h"
#include "test_data.h"

using namespace mubforge;
using mubforge::testing::load_json;
using mubforge::testing::matrix_of;

namespace {

// Valid reduced stabilizers for m = 1..4.
BitMatrix sample_B(size_t m) {
    if (m == 1) {
        return BitMatrix::identity(1);
    }
    auto tab = load_json("fib_tables.json")["triangle"];
    return triangle_B(m, matrix_of(tab[std::to_string(m)]));
}

}  // namespace

TEST(MubGen, pauli_commutation_matches_symplectic_product) {
    std::mt19937_64 rng(1);
    size_t m = 3;
    for (int t = 0; t < 50; t++) {
        auto a = PauliVector::from_zx(m, rng() & 7, rng() & 7);
        auto b = PauliVector::from_zx(m, rng() & 7, rng() & 7);
        ComplexMatrix pa = pauli_unitary(a);
        ComplexMatrix pb = pauli_unitary(b);
        double comm = (pa * pb - pb * pa).cwiseAbs().maxCoeff();
        double anti = (pa * pb + pb * pa).cwiseAbs().maxCoeff();
        if (symplectic_product(a, b)) {
            EXPECT_LT(anti, 1e-12);
        } else {
            EXPECT_LT(comm, 1e-12);
        }
        // Hermitian and squaring to the identity.
        EXPECT_LT((pa - pa.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((pa * pa - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(MubGen, classes_partition_paulis) {
    for (size_t m = 1; m <= 6; m++) {
        BitMatrix b = m <= 4 ? sample_B(m) : triangle_B(m, matrix_of(load_json("fib_tables.json")["triangle"][std::to_string(m)]));
        auto set = generate_classes(fib_stabilizer(b), standard_g0(m));
        size_t d = set.dimension();
        ASSERT_EQ(set.classes.size(), d + 1);
        std::vector<uint8_t> seen(d * d, 0);
        for (const auto &cls : set.classes) {
            EXPECT_EQ(cls.size(), d - 1);
            for (PackedPauli p : cls) {
                for (PackedPauli q : cls) {
                    EXPECT_EQ(packed_symplectic(p, q), 0);
                }
                size_t idx = packed_z(p) | (size_t{packed_x(p)} << m);
                EXPECT_FALSE(seen[idx]);
                seen[idx] = 1;
            }
        }
    }
}

TEST(MubGen, non_partitioning_generator_throws) {
    // The identity stabilizer maps every class onto itself.
    EXPECT_THROW(generate_classes(BitMatrix::identity(4), standard_g0(2)), std::runtime_error);
}

TEST(MubGen, standard_form_normalizes) {
    auto b = sample_B(3);
    auto set = generate_classes(fib_stabilizer(b), standard_g0(3));
    for (size_t j = 1; j < set.generators.size(); j++) {
        auto g = set.generators[j];
        auto s = standard_form(g);
        EXPECT_EQ(column_space(s), column_space(g));
    }
}

TEST(MubGen, cyclic_unitary_generates_mubs) {
    for (size_t m = 1; m <= 4; m++) {
        auto b = sample_B(m);
        ComplexMatrix u = build_unitary(b);
        size_t d = size_t{1} << m;
        auto bases = cyclic_bases(u);
        ASSERT_EQ(bases.size(), d + 1);
        auto rep = verify_mub(bases, 1e-9);
        EXPECT_TRUE(rep.ok) << "m=" << m << " dev=" << rep.max_probability_deviation;
        ComplexMatrix p = u;
        for (size_t k = 1; k <= d; k++) {
            p = p * u;
        }
        EXPECT_LT((p - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-9) << m;
        auto sp = spectrum_check(u);
        EXPECT_TRUE(sp.ok) << m;
    }
}

TEST(MubGen, unitary_conjugates_paulis_like_c) {
    for (size_t m = 1; m <= 3; m++) {
        auto b = sample_B(m);
        auto c = fib_stabilizer(b);
        ComplexMatrix u = build_unitary(b);
        for (size_t k = 0; k < 2 * m; k++) {
            auto e = column_vector(BitMatrix::identity(2 * m), k);
            ComplexMatrix lhs = u * pauli_unitary(e) * u.adjoint();
            ComplexMatrix rhs = pauli_unitary(column_vector(c, k));
            Complex ov = (rhs.adjoint() * lhs).trace() / static_cast<double>(size_t{1} << m);
            EXPECT_NEAR(std::abs(ov), 1.0, 1e-9) << "m=" << m << " k=" << k;
        }
    }
}

TEST(MubGen, verify_mub_detects_repeated_basis) {
    auto u = build_unitary(sample_B(2));
    auto rep = verify_mub({u, u}, 1e-9);
    EXPECT_FALSE(rep.ok);
}

TEST(MubGen, build_unitary_requires_symmetric) {
    EXPECT_THROW(build_unitary(BitMatrix::from_rows({"10", "11"})), std::invalid_argument);
}

TEST(MubGen, recursive_v_matches_direct) {
    for (unsigned k = 0; k <= 2; k++) {
        ComplexMatrix direct = build_V(fermat_B(k));
        ComplexMatrix rec = build_V_recursive(k);
        EXPECT_LT((direct - rec).cwiseAbs().maxCoeff(), 1e-12) << k;
    }
    auto ph = build_V_recursive_phases(3);
    auto direct = phase_system(fermat_B(3));
    ASSERT_EQ(ph.size(), direct.size());
    for (size_t i = 0; i < ph.size(); i++) {
        EXPECT_LT(std::abs(ph[i] - direct[i]), 1e-12) << i;
    }
    EXPECT_EQ(build_V_recursive_phases(4).size(), 65536u);
    EXPECT_THROW(build_V_recursive_phases(5), std::invalid_argument);
}

TEST(MubGen, trace_identities) {
    for (unsigned k : {1u, 2u}) {
        size_t m = size_t{1} << k;
        ComplexMatrix v = build_V_recursive(k);
        Complex tr = trace_minor(v, 1);
        Complex minors = trace_minor(v, 2);
        double scale = std::pow(2.0, m / 2.0);
        EXPECT_LT(std::abs(tr - Complex(0, -scale)), 1e-9) << m;
        EXPECT_LT(std::abs(minors - Complex(-std::pow(2.0, m), 0)), 1e-9) << m;
    }
}

TEST(MubGen, class_permutations_are_permutations) {
    auto b = sample_B(3);
    size_t d = 8;
    for (size_t l = 1; l <= d; l++) {
        std::vector<int> perm;
        try {
            perm = class_permutation(l, b);
        } catch (const std::domain_error &) {
            continue;
        }
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i <= d; i++) {
            EXPECT_EQ(sorted[i], static_cast<int>(i)) << "l=" << l;
        }
    }
}

TEST(MubGen, stabilizer_shifts_classes) {
    auto b = sample_B(3);
    auto c = fib_stabilizer(b);
    auto set = generate_classes(c, standard_g0(3));
    auto perm = induced_permutation(c, set);
    for (size_t j = 0; j < perm.size(); j++) {
        EXPECT_EQ(perm[j], static_cast<int>((j + 1) % perm.size()));
    }
}

TEST(MubGen, equivalence_by_orthogonal_similarity) {
    auto b = sample_B(3);
    // Conjugate by a permutation matrix, which is orthogonal.
    auto p = BitMatrix::from_rows({"010", "001", "100"});
    auto b2 = mat_mul(mat_mul(p, b), p.transpose());
    auto w = check_equivalence(b, b2);
    ASSERT_TRUE(w.has_value());
    auto s = w->block(0, 0, 3, 3);
    EXPECT_EQ(mat_mul(mat_mul(s, b), s.transpose()), b2);
    EXPECT_FALSE(check_equivalence(b, BitMatrix::identity(3)).has_value());
}
