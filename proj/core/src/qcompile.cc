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

#include "mubforge/qcompile.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace mubforge {

namespace {

const char *kind_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CX:
            return "CX";
    }
    return "?";
}

void check_gate(const Gate &g, size_t m) {
    if (g.q[0] >= m || (g.two_qubit() && g.q[1] >= m)) {
        throw std::invalid_argument("gate " + g.str() + ": qubit index out of range for m = " + std::to_string(m));
    }
    if (g.two_qubit() && g.q[0] == g.q[1]) {
        throw std::invalid_argument("gate " + g.str() + ": repeated qubit");
    }
}

// Phase gates and CZ gates of a symmetric matrix, ascending qubit order.
void emit_phases(const BitMatrix &x, std::vector<Gate> &out) {
    size_t m = x.rows();
    for (size_t i = 0; i < m; i++) {
        if (x.get(i, i)) {
            out.push_back(Gate::s(i));
        }
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (x.get(i, j)) {
                out.push_back(Gate::cz(i, j));
            }
        }
    }
}

}  // namespace

bool Gate::operator==(const Gate &o) const {
    if (kind != o.kind || q[0] != o.q[0]) {
        return false;
    }
    return !two_qubit() || q[1] == o.q[1];
}

std::string Gate::str() const {
    std::string s = kind_name(kind);
    s += " " + std::to_string(q[0]);
    if (two_qubit()) {
        s += " " + std::to_string(q[1]);
    }
    return s;
}

void Circuit::append(const Circuit &other) {
    if (other.m != m) {
        throw std::invalid_argument("Circuit::append: qubit counts differ");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

size_t Circuit::count(GateKind k) const {
    return static_cast<size_t>(std::count_if(gates.begin(), gates.end(), [k](const Gate &g) { return g.kind == k; }));
}

GateCounts gate_counts(const Circuit &c) {
    return {c.count(GateKind::S), c.count(GateKind::CZ), c.count(GateKind::H), c.count(GateKind::CX)};
}

std::string write_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.m) + "\n";
    for (const auto &g : c.gates) {
        out += g.str() + "\n";
    }
    return out;
}

Circuit read_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    std::optional<Circuit> c;
    auto fail = [&lineno](const std::string &msg) {
        throw std::runtime_error("circuit text line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        if (!c) {
            long long m = -1;
            if (word != "qubits" || !(ls >> m) || m <= 0) {
                fail("expected 'qubits <m>'");
            }
            c = Circuit{static_cast<size_t>(m), {}};
        } else {
            Gate g{};
            size_t arity = 1;
            if (word == "H") {
                g.kind = GateKind::H;
            } else if (word == "S") {
                g.kind = GateKind::S;
            } else if (word == "CZ") {
                g.kind = GateKind::CZ;
                arity = 2;
            } else if (word == "CX") {
                g.kind = GateKind::CX;
                arity = 2;
            } else {
                fail("unknown gate '" + word + "'");
            }
            for (size_t k = 0; k < arity; k++) {
                long long q = -1;
                if (!(ls >> q) || q < 0) {
                    fail("bad qubit index");
                }
                g.q[k] = static_cast<size_t>(q);
            }
            try {
                check_gate(g, c->m);
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            c->gates.push_back(g);
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing token '" + extra + "'");
        }
    }
    if (!c) {
        throw std::runtime_error("circuit text: missing 'qubits <m>' header");
    }
    return *c;
}

BitMatrix gate_symplectic(const Gate &g, size_t m) {
    check_gate(g, m);
    BitMatrix r = BitMatrix::identity(2 * m);
    size_t a = g.q[0];
    size_t b = g.q[1];
    switch (g.kind) {
        case GateKind::H:
            r.swap_rows(a, m + a);
            break;
        case GateKind::S:
            r.set(a, m + a, true);
            break;
        case GateKind::CX:
            r.set(a, b, true);
            r.set(m + b, m + a, true);
            break;
        case GateKind::CZ:
            r.set(a, m + b, true);
            r.set(b, m + a, true);
            break;
    }
    return r;
}

BitMatrix circuit_symplectic(const Circuit &c) {
    BitMatrix r = BitMatrix::identity(2 * c.m);
    for (const auto &g : c.gates) {
        r = mat_mul(gate_symplectic(g, c.m), r);
    }
    return r;
}

GaussResult gauss_reduce(const BitMatrix &c) {
    if (!c.square() || c.rows() % 2) {
        throw std::invalid_argument("gauss_reduce: C must be 2m x 2m");
    }
    size_t m = c.rows() / 2;
    GaussResult res{{}, c};
    BitMatrix &r = res.reduced;
    // Left multiplication by S(CX(a, b)) adds row m+a to row m+b and row b to row a.
    auto cx = [&](size_t a, size_t b) {
        res.gates.push_back(Gate::cx(a, b));
        r.xor_row(m + b, m + a);
        r.xor_row(a, b);
    };
    for (size_t col = 0; col < m; col++) {
        if (!r.get(m + col, col)) {
            size_t piv = col + 1;
            while (piv < m && !r.get(m + piv, col)) {
                piv++;
            }
            if (piv == m) {
                throw UBlockSingular("gauss_reduce: lower-left block is singular");
            }
            cx(piv, col);
        }
        for (size_t row = 0; row < m; row++) {
            if (row != col && r.get(m + row, col)) {
                cx(col, row);
            }
        }
    }
    return res;
}

Circuit decompose(const BitMatrix &reduced) {
    if (!reduced.square() || reduced.rows() % 2) {
        throw std::invalid_argument("decompose: C' must be 2m x 2m");
    }
    size_t m = reduced.rows() / 2;
    if (!reduced.block(m, 0, m, m).is_identity()) {
        throw std::invalid_argument("decompose: lower-left block must be I");
    }
    BitMatrix s = reduced.block(0, 0, m, m);
    BitMatrix t = reduced.block(0, m, m, m);
    BitMatrix v = reduced.block(m, m, m, m);
    if (t != BitMatrix::identity(m) + mat_mul(s, v) || !is_symmetric(s) || !is_symmetric(v)) {
        throw std::invalid_argument("decompose: input is not symplectic");
    }
    Circuit out{m, {}};
    emit_phases(v, out.gates);
    for (size_t q = 0; q < m; q++) {
        out.gates.push_back(Gate::h(q));
    }
    emit_phases(s, out.gates);
    return out;
}

Circuit compile(const BitMatrix &c) {
    if (!c.square() || c.rows() % 2) {
        throw std::invalid_argument("compile: C must be 2m x 2m");
    }
    if (!is_symplectic(c)) {
        throw std::invalid_argument("compile: C is not symplectic");
    }
    size_t m = c.rows() / 2;
    if (m > 20) {
        throw std::invalid_argument("compile: at most 20 qubits");
    }
    for (uint64_t subset = 0; subset < (uint64_t{1} << m); subset++) {
        // C = C'' H_S with C'' = C H_S, so the H gates act first.
        Circuit pre{m, {}};
        for (size_t q = 0; q < m; q++) {
            if ((subset >> q) & 1) {
                pre.gates.push_back(Gate::h(q));
            }
        }
        BitMatrix target = subset ? mat_mul(c, circuit_symplectic(pre)) : c;
        if (target.block(m, 0, m, m).rank() != m) {
            continue;
        }
        GaussResult g = gauss_reduce(target);
        Circuit body = decompose(g.reduced);
        Circuit out = pre;
        out.append(body);
        for (auto it = g.gates.rbegin(); it != g.gates.rend(); ++it) {
            out.gates.push_back(*it);
        }
        return out;
    }
    throw UBlockSingular("compile: no H layer makes the lower-left block invertible");
}

Circuit compile_fibonacci(const BitMatrix &b) {
    if (!is_symmetric(b)) {
        throw std::invalid_argument("compile_fibonacci: B must be symmetric");
    }
    size_t m = b.rows();
    Circuit out{m, {}};
    for (size_t q = 0; q < m; q++) {
        out.gates.push_back(Gate::h(q));
    }
    emit_phases(b, out.gates);
    return out;
}

Circuit compile_inhomogeneous(const BitMatrix &g0x) {
    if (!is_symmetric(g0x)) {
        throw std::invalid_argument("compile_inhomogeneous: g0x must be symmetric");
    }
    size_t m = g0x.rows();
    std::vector<size_t> touched;
    // Highest qubit first, as in the reference figures.
    for (size_t q = m; q-- > 0;) {
        bool any = false;
        for (size_t k = 0; k < m; k++) {
            any |= g0x.get(q, k);
        }
        if (any) {
            touched.push_back(q);
        }
    }
    Circuit out{m, {}};
    for (size_t q : touched) {
        out.gates.push_back(Gate::h(q));
    }
    emit_phases(g0x, out.gates);
    for (size_t q : touched) {
        out.gates.push_back(Gate::h(q));
    }
    return out;
}

ComplexMatrix simulate(const Circuit &c) {
    if (c.m > 5) {
        throw std::invalid_argument("simulate: at most 5 qubits");
    }
    size_t d = size_t{1} << c.m;
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    const double r = 1.0 / std::sqrt(2.0);
    for (const auto &g : c.gates) {
        check_gate(g, c.m);
        size_t a = size_t{1} << g.q[0];
        size_t b = g.two_qubit() ? size_t{1} << g.q[1] : 0;
        switch (g.kind) {
            case GateKind::H:
                for (size_t j = 0; j < d; j++) {
                    if (j & a) {
                        continue;
                    }
                    auto r0 = u.row(j).eval();
                    auto r1 = u.row(j | a).eval();
                    u.row(j) = (r0 + r1) * r;
                    u.row(j | a) = (r0 - r1) * r;
                }
                break;
            case GateKind::S:
                for (size_t j = 0; j < d; j++) {
                    if (j & a) {
                        u.row(j) *= Complex(0, 1);
                    }
                }
                break;
            case GateKind::CZ:
                for (size_t j = 0; j < d; j++) {
                    if ((j & a) && (j & b)) {
                        u.row(j) *= -1.0;
                    }
                }
                break;
            case GateKind::CX:
                for (size_t j = 0; j < d; j++) {
                    if ((j & a) && !(j & b)) {
                        u.row(j).swap(u.row(j | b));
                    }
                }
                break;
        }
    }
    return u;
}

double phase_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    Complex overlap = (b.adjoint() * a).trace();
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1, 0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

CompilationReport verify_compilation(const BitMatrix &c, const Circuit &circuit, double tol) {
    CompilationReport rep;
    size_t m = circuit.m;
    if (c.rows() != 2 * m || c.cols() != 2 * m) {
        return rep;
    }
    rep.symplectic_ok = circuit_symplectic(circuit) == c;
    if (m > 4) {
        rep.unitary_ok = rep.symplectic_ok;
        return rep;
    }
    ComplexMatrix u = simulate(circuit);
    rep.unitary_ok = true;
    for (size_t k = 0; k < 2 * m; k++) {
        PauliVector e = column_vector(BitMatrix::identity(2 * m), k);
        PauliVector img = column_vector(c, k);
        ComplexMatrix lhs = u * pauli_unitary(e) * u.adjoint();
        double dev = phase_distance(lhs, pauli_unitary(img));
        rep.max_deviation = std::max(rep.max_deviation, dev);
        if (dev > tol) {
            rep.unitary_ok = false;
        }
    }
    return rep;
}

CompilationReport verify_fibonacci_compilation(const BitMatrix &b, const Circuit &circuit, double tol) {
    size_t m = b.rows();
    BitMatrix c = BitMatrix::from_blocks(b, BitMatrix::identity(m), BitMatrix::identity(m), BitMatrix(m, m));
    CompilationReport rep = verify_compilation(c, circuit, tol);
    if (m <= 4 && rep.unitary_ok) {
        double dev = phase_distance(simulate(circuit), build_unitary(b));
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.unitary_ok = dev <= tol;
    }
    return rep;
}

std::vector<PowerCircuit> binary_power_plan(const BitMatrix &c, size_t jobs) {
    if (!c.square() || c.rows() % 2) {
        throw std::invalid_argument("binary_power_plan: C must be 2m x 2m");
    }
    size_t m = c.rows() / 2;
    std::vector<BitMatrix> powers{c};
    for (size_t j = 1; j <= m; j++) {
        powers.push_back(mat_mul(powers.back(), powers.back()));
    }
    std::vector<PowerCircuit> plan(m + 1);
    auto work = [&](size_t j) {
        plan[j].j = j;
        try {
            plan[j].circuit = compile(powers[j]);
        } catch (const std::exception &e) {
            plan[j].error = e.what();
        }
    };
    jobs = std::max<size_t>(1, std::min(jobs, plan.size()));
    if (jobs == 1) {
        for (size_t j = 0; j <= m; j++) {
            work(j);
        }
    } else {
        std::vector<std::thread> threads;
        for (size_t w = 0; w < jobs; w++) {
            threads.emplace_back([&, w] {
                for (size_t j = w; j <= m; j += jobs) {
                    work(j);
                }
            });
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    return plan;
}

Circuit compose_power(const std::vector<PowerCircuit> &plan, uint64_t l, size_t m) {
    Circuit out{m, {}};
    for (size_t j = 0; j < 64 && (l >> j); j++) {
        if (!((l >> j) & 1)) {
            continue;
        }
        if (j >= plan.size() || !plan[j].circuit) {
            throw std::runtime_error("compose_power: no circuit for power 2^" + std::to_string(j));
        }
        out.append(*plan[j].circuit);
    }
    return out;
}

}  // namespace mubforge
