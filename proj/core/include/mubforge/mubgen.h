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

#ifndef MUBFORGE_MUBGEN_H
#define MUBFORGE_MUBGEN_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubforge/bit_matrix.h"

namespace mubforge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest qubit count for which classes are listed element by element.
constexpr size_t kMaxMaterializedQubits = 12;
/// Largest qubit count for dense complex matrices.
constexpr size_t kMaxDenseQubits = 5;

/// A Pauli vector packed as z | (x << 32). Needs m <= 32.
using PackedPauli = uint64_t;

PackedPauli pack_pauli(const PauliVector &v);
PauliVector unpack_pauli(PackedPauli p, size_t m);
inline uint32_t packed_z(PackedPauli p) { return static_cast<uint32_t>(p); }
inline uint32_t packed_x(PackedPauli p) { return static_cast<uint32_t>(p >> 32); }
/// Symplectic product of two packed vectors.
int packed_symplectic(PackedPauli a, PackedPauli b);

struct PauliClassSet {
    size_t m = 0;
    /// G_j = C^j G_0 for j = 0..d, each 2m x m.
    std::vector<BitMatrix> generators;
    /// Nonzero column-space elements of each generator; empty when m > kMaxMaterializedQubits.
    std::vector<std::vector<PackedPauli>> classes;

    size_t dimension() const { return size_t{1} << m; }
};

/// Builds the d+1 classes C^j G0 and checks that they partition the nonzero vectors.
/// Throws std::runtime_error when they do not.
PauliClassSet generate_classes(const BitMatrix &c, const BitMatrix &g0);

/// Right-multiplies G by the inverse of its x-block (or z-block when x is singular).
/// Throws std::domain_error when neither block is invertible.
BitMatrix standard_form(const BitMatrix &g);

/// Column space of a 2m x m matrix as a sorted list of packed nonzero vectors.
std::vector<PackedPauli> column_space(const BitMatrix &g);

/// Tensor product of (-i)^{zx} Z^z X^x; qubit k is bit k of the basis index.
ComplexMatrix pauli_unitary(const PauliVector &a);

/// Diagonal phases p_j = (-i)^{<j|B|j> mod 4} (-1)^{sum_k b_kk j_k}.
std::vector<Complex> phase_system(const BitMatrix &b);
/// Unnormalized V = diag(p) * Hbar^{(x)m}, where Hbar has +-1 entries.
ComplexMatrix build_V(const BitMatrix &b);
/// U = e^{i psi} diag(p) H^{(x)m} with e^{i psi} = -1 / tr(diag(p) H^{(x)m}).
ComplexMatrix build_unitary(const BitMatrix &b);

/// Concatenated columns of a square matrix.
std::vector<Complex> chop_map(const ComplexMatrix &v);
/// V_{2^k} from V_1 by V_{2n} = diag(M(V_n)) Hbar^{(x)2n}. Dense output for k <= 2.
ComplexMatrix build_V_recursive(unsigned k);
/// Diagonal phases of V_{2^k}, for k <= 4.
std::vector<Complex> build_V_recursive_phases(unsigned k);

struct MubReport {
    size_t bases = 0;
    /// max | |<u|v>| - d^{-1/2} | over cross-basis pairs.
    double max_overlap_deviation = 0;
    /// max | |<u|v>|^2 - 1/d |.
    double max_probability_deviation = 0;
    /// max | B^dag B - I | entry.
    double max_unitarity_deviation = 0;
    bool ok = false;
};

/// Each matrix holds one orthonormal basis in its columns.
MubReport verify_mub(const std::vector<ComplexMatrix> &bases, double tol = 1e-9);

/// The d+1 bases U^0 .. U^d.
std::vector<ComplexMatrix> cyclic_bases(const ComplexMatrix &u);

struct SpectrumReport {
    std::vector<Complex> eigenvalues;
    bool all_roots_of_unity = false;
    bool excludes_one = false;
    bool distinct = false;
    bool ok = false;
};

/// Are the eigenvalues d distinct (d+1)-th roots of unity other than 1?
SpectrumReport spectrum_check(const ComplexMatrix &u, double tol = 1e-6);

/// l = 1: trace. l = 2: sum of the 2 x 2 principal minors.
Complex trace_minor(const ComplexMatrix &v, int l);

/// Index permutation induced on the classes of `set` by the symplectic map t.
/// Entry j is the class index of t G_j, or -1 when t G_j is not a class.
std::vector<int> induced_permutation(const BitMatrix &t, const PauliClassSet &set);

/// Permutation induced by A_l = [[I, F_{l+1}(B) F_l(B)^{-1}], [0, I]] on the Fibonacci set of B.
std::vector<int> class_permutation(size_t l, const BitMatrix &b);

/// Searches s with s s^t = I and b2 = s b1 s^t. Returns diag(s, s) or nothing.
/// Only attempted when the characteristic polynomials agree.
std::optional<BitMatrix> check_equivalence(const BitMatrix &b1, const BitMatrix &b2);

}  // namespace mubforge

#endif
