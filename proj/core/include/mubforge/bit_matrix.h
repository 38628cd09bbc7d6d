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

#ifndef MUBFORGE_BIT_MATRIX_H
#define MUBFORGE_BIT_MATRIX_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubforge/biguint.h"

namespace mubforge {

/// Dense matrix over GF(2).
///
/// Rows are packed into 64-bit words; column j lives at bit (j % 64) of word (j / 64).
/// Padding bits past `cols` are always zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix zeros(size_t rows, size_t cols) { return BitMatrix(rows, cols); }
    /// Each string is one row of '0'/'1' characters.
    static BitMatrix from_rows(const std::vector<std::string> &rows);
    /// Row-major list of 0/1 values.
    static BitMatrix from_bits(size_t rows, size_t cols, std::initializer_list<int> bits);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }
    bool square() const { return rows_ == cols_; }

    bool get(size_t r, size_t c) const { return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1; }
    void set(size_t r, size_t c, bool v) {
        uint64_t m = uint64_t{1} << (c % 64);
        uint64_t &w = data_[r * wpr_ + c / 64];
        w = v ? (w | m) : (w & ~m);
    }
    void flip(size_t r, size_t c) { data_[r * wpr_ + c / 64] ^= uint64_t{1} << (c % 64); }

    uint64_t *row(size_t r) { return data_.data() + r * wpr_; }
    const uint64_t *row(size_t r) const { return data_.data() + r * wpr_; }
    /// row(dst) ^= row(src)
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    bool row_is_zero(size_t r) const;

    bool is_zero() const;
    bool is_identity() const;
    size_t popcount() const;

    BitMatrix transpose() const;
    BitMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const BitMatrix &b);
    /// [[a, b], [c, d]] from four equally sized square blocks.
    static BitMatrix from_blocks(const BitMatrix &a, const BitMatrix &b, const BitMatrix &c, const BitMatrix &d);
    static BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);
    static BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);

    BitMatrix operator+(const BitMatrix &o) const;
    BitMatrix &operator+=(const BitMatrix &o);
    BitMatrix operator*(const BitMatrix &o) const;

    size_t rank() const;

    /// Rows of '0'/'1' characters separated by newlines (no trailing newline).
    std::string str() const;
    std::vector<std::string> row_strings() const;

    bool operator==(const BitMatrix &o) const = default;
    /// Total order: dimensions first, then row-major bits.
    bool operator<(const BitMatrix &o) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t wpr_ = 0;
    std::vector<uint64_t> data_;
};

std::ostream &operator<<(std::ostream &out, const BitMatrix &m);

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
BitMatrix mat_pow(const BitMatrix &a, const BigUint &e);
/// Empty when the matrix is singular.
std::optional<BitMatrix> mat_inverse(const BitMatrix &a);
bool is_symmetric(const BitMatrix &a);
/// A^t J A == J with J = [[0, I], [I, 0]].
bool is_symplectic(const BitMatrix &c);

/// Bit vector of length 2m laid out as (z || x).
struct PauliVector {
    std::vector<uint8_t> bits;

    PauliVector() = default;
    explicit PauliVector(std::vector<uint8_t> b) : bits(std::move(b)) {}
    static PauliVector from_zx(size_t m, uint64_t z, uint64_t x);

    size_t num_qubits() const { return bits.size() / 2; }
    uint8_t z(size_t k) const { return bits[k]; }
    uint8_t x(size_t k) const { return bits[num_qubits() + k]; }
    bool is_zero() const;
    bool operator==(const PauliVector &o) const = default;
    auto operator<=>(const PauliVector &o) const = default;
};

/// sum_k a^z_k b^x_k + a^x_k b^z_k mod 2
int symplectic_product(const PauliVector &a, const PauliVector &b);

/// Column `c` of a matrix as a vector.
PauliVector column_vector(const BitMatrix &g, size_t c);
/// g * coeffs, where bit j of `coeffs` selects column j.
PauliVector combine_columns(const BitMatrix &g, uint64_t coeffs);

/// Text format: "rows cols" header, then one line of 0/1 characters per row.
std::string write_matrix_text(const BitMatrix &m);
/// Throws std::runtime_error with a line number on malformed input.
BitMatrix read_matrix_text(std::string_view text);

}  // namespace mubforge

#endif
