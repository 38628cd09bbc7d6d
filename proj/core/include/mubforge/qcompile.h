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

// Clifford circuits over {H, S, CZ, CX} and their symplectic matrices.
//
// Gates are listed in application order: the first gate acts on the state first. For a
// circuit g_1 .. g_n the symplectic matrix is S(g_n) ... S(g_1), and the dense unitary U
// satisfies U P(a) U^dag ~ P(C a).

#ifndef MUBFORGE_QCOMPILE_H
#define MUBFORGE_QCOMPILE_H

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mubforge/bit_matrix.h"
#include "mubforge/mubgen.h"

namespace mubforge {

enum class GateKind { H, S, CZ, CX };

struct Gate {
    GateKind kind;
    /// CX: control, target. Unused second entry for one-qubit gates.
    std::array<size_t, 2> q{0, 0};

    static Gate h(size_t q) { return {GateKind::H, {q, 0}}; }
    static Gate s(size_t q) { return {GateKind::S, {q, 0}}; }
    static Gate cz(size_t a, size_t b) { return {GateKind::CZ, {a, b}}; }
    static Gate cx(size_t c, size_t t) { return {GateKind::CX, {c, t}}; }

    bool two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CX; }
    bool operator==(const Gate &o) const;
    std::string str() const;
};

struct Circuit {
    size_t m = 0;
    std::vector<Gate> gates;

    void append(const Circuit &other);
    size_t count(GateKind k) const;
    bool operator==(const Circuit &o) const = default;
};

struct GateCounts {
    size_t s = 0;
    size_t cz = 0;
    size_t h = 0;
    size_t cx = 0;
};
GateCounts gate_counts(const Circuit &c);

/// "qubits m" followed by one gate per line.
std::string write_circuit(const Circuit &c);
/// Accepts '#' comments and blank lines. Errors name the offending line.
Circuit read_circuit(std::string_view text);

BitMatrix gate_symplectic(const Gate &g, size_t m);
BitMatrix circuit_symplectic(const Circuit &c);

struct UBlockSingular : std::domain_error {
    using std::domain_error::domain_error;
};

struct GaussResult {
    /// Left-multiplying S(g) for these gates, in order, turns C into `reduced`.
    std::vector<Gate> gates;
    BitMatrix reduced;
};
/// Row-reduces the lower-left block to I with CX gates. Throws UBlockSingular.
GaussResult gauss_reduce(const BitMatrix &c);

/// Circuit for [[s, I + s v], [I, v]]: phases from v, H on every qubit, phases from s.
Circuit decompose(const BitMatrix &reduced);

/// Full compilation. When the lower-left block is singular, H gates on qubit subsets are
/// tried first (ascending subset code); throws UBlockSingular if none helps.
Circuit compile(const BitMatrix &c);

/// H on every qubit, then S on diagonal ones and CZ on upper-triangle ones of B.
Circuit compile_fibonacci(const BitMatrix &b);

/// H, phases from g0x, H; H pairs on qubits g0x leaves alone are dropped.
Circuit compile_inhomogeneous(const BitMatrix &g0x);

/// Product of dense gate unitaries, m <= 5.
ComplexMatrix simulate(const Circuit &c);

struct CompilationReport {
    bool symplectic_ok = false;
    bool unitary_ok = false;
    /// Largest conjugation or phase-matching residual seen.
    double max_deviation = 0;
    bool ok() const { return symplectic_ok && unitary_ok; }
};

/// Symplectic product equals C, and the simulated unitary maps each Pauli P(e_k) to a
/// multiple of P(C e_k) (m <= 4 for the unitary part; skipped above that).
CompilationReport verify_compilation(const BitMatrix &c, const Circuit &circuit, double tol = 1e-9);

/// Like verify_compilation for [[B, I], [I, 0]] but also requires simulate(circuit) to equal
/// build_unitary(B) up to a global phase.
CompilationReport verify_fibonacci_compilation(const BitMatrix &b, const Circuit &circuit, double tol = 1e-9);

/// Global phase-insensitive distance: min over unit phases of max |a - e^{i phi} b|.
double phase_distance(const ComplexMatrix &a, const ComplexMatrix &b);

struct PowerCircuit {
    /// The circuit realizes C^{2^j}.
    size_t j = 0;
    std::optional<Circuit> circuit;
    std::string error;
};

/// Circuits for C^{2^0} .. C^{2^m}, compiled independently (in parallel when jobs > 1).
std::vector<PowerCircuit> binary_power_plan(const BitMatrix &c, size_t jobs = 1);

/// Concatenation of the plan circuits for the set bits of l. Throws if one is missing.
Circuit compose_power(const std::vector<PowerCircuit> &plan, uint64_t l, size_t m);

}  // namespace mubforge

#endif
