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

#include "mubforge/qcompile.h"
#include "mubforge/stabsearch.h"
#include "test_data.h"

using namespace mubforge;
using mubforge::testing::golden_sets;
using mubforge::testing::load_json;
using mubforge::testing::matrix_of;

namespace {

Circuit random_circuit(std::mt19937_64 &rng, size_t m, size_t len) {
    Circuit c{m, {}};
    for (size_t i = 0; i < len; i++) {
        size_t a = rng() % m;
        size_t b = (a + 1 + rng() % (m > 1 ? m - 1 : 1)) % m;
        switch (rng() % (m > 1 ? 4 : 2)) {
            case 0:
                c.gates.push_back(Gate::h(a));
                break;
            case 1:
                c.gates.push_back(Gate::s(a));
                break;
            case 2:
                c.gates.push_back(Gate::cz(a, b));
                break;
            default:
                c.gates.push_back(Gate::cx(a, b));
                break;
        }
    }
    return c;
}

}  // namespace

TEST(QCompile, single_gate_symplectics) {
    EXPECT_EQ(gate_symplectic(Gate::h(0), 1), BitMatrix::from_rows({"01", "10"}));
    EXPECT_EQ(gate_symplectic(Gate::s(0), 1), BitMatrix::from_rows({"11", "01"}));
    EXPECT_EQ(gate_symplectic(Gate::cx(0, 1), 2), BitMatrix::from_rows({"1100", "0100", "0010", "0011"}));
    EXPECT_EQ(gate_symplectic(Gate::cz(0, 1), 2), BitMatrix::from_rows({"1001", "0110", "0010", "0001"}));
    EXPECT_THROW(gate_symplectic(Gate::cx(1, 1), 2), std::invalid_argument);
    EXPECT_THROW(gate_symplectic(Gate::h(2), 2), std::invalid_argument);
}

TEST(QCompile, gate_symplectics_are_symplectic) {
    for (auto g : {Gate::h(1), Gate::s(2), Gate::cx(0, 2), Gate::cz(2, 1)}) {
        EXPECT_TRUE(is_symplectic(gate_symplectic(g, 3))) << g.str();
    }
}

TEST(QCompile, gauss_reduce_cases) {
    size_t m = 3;
    auto id = BitMatrix::identity(m);
    auto c = BitMatrix::from_blocks(BitMatrix(m, m), id, id, BitMatrix(m, m));
    EXPECT_TRUE(gauss_reduce(c).gates.empty());

    auto swap = BitMatrix::from_rows({"010", "100", "001"});
    auto cs = BitMatrix::from_blocks(BitMatrix(m, m), swap, swap, BitMatrix(m, m));
    auto r = gauss_reduce(cs);
    EXPECT_EQ(r.gates.size(), 3u);
    EXPECT_TRUE(r.reduced.block(m, 0, m, m).is_identity());

    EXPECT_THROW(gauss_reduce(BitMatrix::identity(2 * m)), UBlockSingular);
}

TEST(QCompile, gauss_reduce_random_m3) {
    std::mt19937_64 rng(4);
    size_t tested = 0;
    while (tested < 50) {
        auto circ = random_circuit(rng, 3, 30);
        auto c = circuit_symplectic(circ);
        if (c.block(3, 0, 3, 3).rank() != 3) {
            continue;
        }
        tested++;
        auto r = gauss_reduce(c);
        EXPECT_LE(r.gates.size(), 9u);
        BitMatrix acc = c;
        for (const auto &g : r.gates) {
            acc = mat_mul(gate_symplectic(g, 3), acc);
        }
        EXPECT_EQ(acc, r.reduced);
        EXPECT_TRUE(r.reduced.block(3, 0, 3, 3).is_identity());
    }
}

TEST(QCompile, decompose_block_swap) {
    size_t m = 3;
    auto id = BitMatrix::identity(m);
    auto c = BitMatrix::from_blocks(BitMatrix(m, m), id, id, BitMatrix(m, m));
    auto circ = decompose(c);
    EXPECT_EQ(circ.gates.size(), m);
    EXPECT_EQ(circ.count(GateKind::H), m);
    EXPECT_THROW(decompose(BitMatrix::from_blocks(id, id, id, id)), std::invalid_argument);
}

TEST(QCompile, compile_round_trip_random) {
    std::mt19937_64 rng(8);
    for (size_t m = 1; m <= 8; m++) {
        for (int t = 0; t < 10; t++) {
            auto c = circuit_symplectic(random_circuit(rng, m, 6 * m));
            auto circ = compile(c);
            EXPECT_EQ(circuit_symplectic(circ), c) << "m=" << m;
            auto counts = gate_counts(circ);
            EXPECT_LE(counts.s, 2 * m);
            EXPECT_LE(counts.cz, m * m - m);
            EXPECT_LE(counts.h, 2 * m);
            if (m <= 4) {
                EXPECT_TRUE(verify_compilation(c, circ).ok());
            }
        }
    }
}

TEST(QCompile, fibonacci_circuits) {
    auto fermat = compile_fibonacci(fermat_B(2));
    auto counts = gate_counts(fermat);
    EXPECT_EQ(counts.s, 1u);
    EXPECT_EQ(counts.cz, 3u);
    EXPECT_EQ(counts.h, 4u);
    auto zero = compile_fibonacci(BitMatrix(3, 3));
    EXPECT_EQ(zero.gates.size(), 3u);
    auto id = gate_counts(compile_fibonacci(BitMatrix::identity(3)));
    EXPECT_EQ(id.s, 3u);
    EXPECT_EQ(id.h, 3u);
    EXPECT_THROW(compile_fibonacci(BitMatrix::from_rows({"10", "11"})), std::invalid_argument);

    // The golden figure lists the same gates.
    auto golden = mubforge::testing::circuit_of(load_json("stabilizer_sets.json")["g0_circuits"]["fermat"]);
    auto key = [](Circuit c) {
        std::vector<std::string> v;
        for (auto &g : c.gates) {
            v.push_back(g.str());
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(key(fermat), key(golden));
}

TEST(QCompile, fermat_gate_counts_all_k) {
    for (unsigned k = 0; k <= 6; k++) {
        size_t m = size_t{1} << k;
        auto counts = gate_counts(compile_fibonacci(fermat_B(k)));
        EXPECT_EQ(counts.s, 1u) << k;
        EXPECT_EQ(counts.cz, m - 1) << k;
        EXPECT_EQ(counts.h, m) << k;
    }
}

TEST(QCompile, fibonacci_matches_build_unitary) {
    auto tab = load_json("fib_tables.json")["triangle"];
    std::vector<BitMatrix> bs{BitMatrix::identity(1), fermat_B(1), fermat_B(2)};
    for (size_t m = 2; m <= 4; m++) {
        bs.push_back(triangle_B(m, matrix_of(tab[std::to_string(m)])));
    }
    for (const auto &b : bs) {
        auto circ = compile_fibonacci(b);
        auto rep = verify_fibonacci_compilation(b, circ, 1e-9);
        EXPECT_TRUE(rep.ok()) << b.str() << " dev=" << rep.max_deviation;
    }
}

TEST(QCompile, dropped_gate_fails_verification) {
    auto b = fermat_B(2);
    auto circ = compile_fibonacci(b);
    auto it = std::find_if(circ.gates.begin(), circ.gates.end(), [](const Gate &g) { return g.kind == GateKind::CZ; });
    circ.gates.erase(it);
    auto rep = verify_fibonacci_compilation(b, circ);
    EXPECT_FALSE(rep.symplectic_ok);
    EXPECT_FALSE(rep.ok());
}

TEST(QCompile, phase_layer_order_is_irrelevant) {
    auto b = fermat_B(2);
    auto circ = compile_fibonacci(b);
    std::reverse(circ.gates.begin() + 4, circ.gates.end());
    EXPECT_TRUE(verify_fibonacci_compilation(b, circ).ok());
}

TEST(QCompile, inhomogeneous_circuits) {
    auto g0 = load_json("stabilizer_sets.json")["g0_circuits"];
    auto two = mubforge::testing::circuit_of(g0["2"]);
    auto g0x = BitMatrix::from_rows({"0100", "1000", "0000", "0000"});
    EXPECT_EQ(compile_inhomogeneous(g0x), two);
    EXPECT_TRUE(compile_inhomogeneous(BitMatrix(3, 3)).gates.empty());
    auto id = compile_inhomogeneous(BitMatrix::identity(2));
    EXPECT_EQ(gate_counts(id).h, 4u);
    EXPECT_EQ(gate_counts(id).s, 2u);
    // Maps the standard start generator onto (I, g0x).
    auto sym = circuit_symplectic(compile_inhomogeneous(g0x));
    EXPECT_EQ(mat_mul(sym, standard_g0(4)), inhomogeneous_g0(g0x));
}

TEST(QCompile, simulate_basics) {
    auto h = simulate(Circuit{1, {Gate::h(0)}});
    EXPECT_NEAR(h(0, 0).real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(h(1, 1).real(), -1 / std::sqrt(2.0), 1e-12);
    EXPECT_LT((simulate(Circuit{3, {}}) - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
    auto cx = simulate(Circuit{2, {Gate::cx(0, 1)}});
    // Control is qubit 0 (bit 0): |01> -> |11>.
    EXPECT_NEAR(std::abs(cx(3, 1)), 1.0, 1e-12);
    EXPECT_THROW(simulate(Circuit{6, {}}), std::invalid_argument);
}

TEST(QCompile, golden_sets_compile_and_verify) {
    for (const auto &g : golden_sets()) {
        auto circ = compile(g.C);
        auto rep = verify_compilation(g.C, circ);
        EXPECT_TRUE(rep.ok()) << g.family << " dev=" << rep.max_deviation;
    }
}

TEST(QCompile, binary_power_plan_composes) {
    auto sets = golden_sets();
    const auto &c = sets[0].C;
    auto plan = binary_power_plan(c, 2);
    ASSERT_EQ(plan.size(), 4u);
    for (uint64_t l = 0; l <= 8; l++) {
        bool all = true;
        for (size_t j = 0; j < 4; j++) {
            if (((l >> j) & 1) && !plan[j].circuit) {
                all = false;
            }
        }
        if (!all) {
            EXPECT_THROW(compose_power(plan, l, 3), std::runtime_error);
            continue;
        }
        auto circ = compose_power(plan, l, 3);
        EXPECT_EQ(circuit_symplectic(circ), mat_pow(c, BigUint(l))) << l;
    }
    EXPECT_TRUE(compose_power(plan, 0, 3).gates.empty());
}

TEST(QCompile, text_round_trip_and_errors) {
    std::mt19937_64 rng(2);
    auto c = random_circuit(rng, 4, 20);
    EXPECT_EQ(read_circuit(write_circuit(c)), c);
    EXPECT_EQ(read_circuit("# header\nqubits 2\nH 0  # comment\n\nCX 0 1\n"), (Circuit{2, {Gate::h(0), Gate::cx(0, 1)}}));
    try {
        read_circuit("qubits 2\nH 0\nCZ 0 2\n");
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(read_circuit("H 0\n"), std::runtime_error);
    EXPECT_THROW(read_circuit("qubits 1\nT 0\n"), std::runtime_error);
}
