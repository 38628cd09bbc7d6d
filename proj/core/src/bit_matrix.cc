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

#include "mubforge/bit_matrix.h"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mubforge {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix r(n, n);
    for (size_t k = 0; k < n; k++) {
        r.set(k, k, true);
    }
    return r;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("from_rows: no rows");
    }
    BitMatrix r(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != r.cols_) {
            throw std::invalid_argument("from_rows: ragged rows");
        }
        for (size_t j = 0; j < r.cols_; j++) {
            char c = rows[i][j];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("from_rows: expected 0/1, got '" + std::string(1, c) + "'");
            }
            r.set(i, j, c == '1');
        }
    }
    return r;
}

BitMatrix BitMatrix::from_bits(size_t rows, size_t cols, std::initializer_list<int> bits) {
    if (bits.size() != rows * cols) {
        throw std::invalid_argument("from_bits: wrong number of entries");
    }
    BitMatrix r(rows, cols);
    size_t k = 0;
    for (int b : bits) {
        r.set(k / cols, k % cols, b & 1);
        k++;
    }
    return r;
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    uint64_t *d = row(dst);
    const uint64_t *s = row(src);
    for (size_t w = 0; w < wpr_; w++) {
        d[w] ^= s[w];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    uint64_t *x = row(a);
    uint64_t *y = row(b);
    for (size_t w = 0; w < wpr_; w++) {
        std::swap(x[w], y[w]);
    }
}

bool BitMatrix::row_is_zero(size_t r) const {
    const uint64_t *p = row(r);
    for (size_t w = 0; w < wpr_; w++) {
        if (p[w]) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_zero() const {
    for (uint64_t w : data_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_identity() const {
    if (!square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *p = row(r);
        for (size_t w = 0; w < wpr_; w++) {
            uint64_t expect = (w == r / 64) ? (uint64_t{1} << (r % 64)) : 0;
            if (p[w] != expect) {
                return false;
            }
        }
    }
    return true;
}

size_t BitMatrix::popcount() const {
    size_t n = 0;
    for (uint64_t w : data_) {
        n += std::popcount(w);
    }
    return n;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *p = row(r);
        for (size_t w = 0; w < wpr_; w++) {
            uint64_t bits = p[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("block: out of range");
    }
    BitMatrix b(nr, nc);
    for (size_t i = 0; i < nr; i++) {
        for (size_t j = 0; j < nc; j++) {
            if (get(r0 + i, c0 + j)) {
                b.set(i, j, true);
            }
        }
    }
    return b;
}

void BitMatrix::set_block(size_t r0, size_t c0, const BitMatrix &b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
        throw std::out_of_range("set_block: out of range");
    }
    for (size_t i = 0; i < b.rows_; i++) {
        for (size_t j = 0; j < b.cols_; j++) {
            set(r0 + i, c0 + j, b.get(i, j));
        }
    }
}

BitMatrix BitMatrix::from_blocks(const BitMatrix &a, const BitMatrix &b, const BitMatrix &c, const BitMatrix &d) {
    size_t n = a.rows_;
    for (const BitMatrix *x : {&a, &b, &c, &d}) {
        if (x->rows_ != n || x->cols_ != n) {
            throw std::invalid_argument("from_blocks: blocks must be equal-size squares");
        }
    }
    BitMatrix r(2 * n, 2 * n);
    r.set_block(0, 0, a);
    r.set_block(0, n, b);
    r.set_block(n, 0, c);
    r.set_block(n, n, d);
    return r;
}

BitMatrix BitMatrix::vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols_ != bottom.cols_) {
        throw std::invalid_argument("vstack: column mismatch");
    }
    BitMatrix r(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), r.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), r.data_.begin() + top.data_.size());
    return r;
}

BitMatrix BitMatrix::hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows_ != right.rows_) {
        throw std::invalid_argument("hstack: row mismatch");
    }
    BitMatrix r(left.rows_, left.cols_ + right.cols_);
    r.set_block(0, 0, left);
    r.set_block(0, left.cols_, right);
    return r;
}

BitMatrix BitMatrix::operator+(const BitMatrix &o) const {
    BitMatrix r = *this;
    r += o;
    return r;
}

BitMatrix &BitMatrix::operator+=(const BitMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix add: dimension mismatch");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] ^= o.data_[k];
    }
    return *this;
}

BitMatrix BitMatrix::operator*(const BitMatrix &o) const {
    return mat_mul(*this, o);
}

size_t BitMatrix::rank() const {
    BitMatrix t = *this;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < rows_; c++) {
        size_t piv = rank;
        while (piv < rows_ && !t.get(piv, c)) {
            piv++;
        }
        if (piv == rows_) {
            continue;
        }
        t.swap_rows(rank, piv);
        for (size_t r = rank + 1; r < rows_; r++) {
            if (t.get(r, c)) {
                t.xor_row(r, rank);
            }
        }
        rank++;
    }
    return rank;
}

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                out[r][c] = '1';
            }
        }
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string s;
    auto rs = row_strings();
    for (size_t r = 0; r < rs.size(); r++) {
        if (r) {
            s += '\n';
        }
        s += rs[r];
    }
    return s;
}

bool BitMatrix::operator<(const BitMatrix &o) const {
    if (rows_ != o.rows_) {
        return rows_ < o.rows_;
    }
    if (cols_ != o.cols_) {
        return cols_ < o.cols_;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            bool a = get(r, c);
            bool b = o.get(r, c);
            if (a != b) {
                return b;
            }
        }
    }
    return false;
}

std::ostream &operator<<(std::ostream &out, const BitMatrix &m) {
    return out << m.str();
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    BitMatrix r(a.rows(), b.cols());
    size_t w = b.words_per_row();
    for (size_t i = 0; i < a.rows(); i++) {
        uint64_t *dst = r.row(i);
        const uint64_t *arow = a.row(i);
        for (size_t aw = 0; aw < a.words_per_row(); aw++) {
            uint64_t bits = arow[aw];
            while (bits) {
                size_t k = aw * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const uint64_t *src = b.row(k);
                for (size_t x = 0; x < w; x++) {
                    dst[x] ^= src[x];
                }
            }
        }
    }
    return r;
}

BitMatrix mat_pow(const BitMatrix &a, const BigUint &e) {
    if (!a.square()) {
        throw std::invalid_argument("mat_pow: matrix not square");
    }
    BitMatrix result = BitMatrix::identity(a.rows());
    size_t n = e.bit_length();
    for (size_t k = n; k-- > 0;) {
        result = mat_mul(result, result);
        if (e.bit(k)) {
            result = mat_mul(result, a);
        }
    }
    return result;
}

std::optional<BitMatrix> mat_inverse(const BitMatrix &a) {
    if (!a.square()) {
        throw std::invalid_argument("mat_inverse: matrix not square");
    }
    size_t n = a.rows();
    BitMatrix aug = BitMatrix::hstack(a, BitMatrix::identity(n));
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        while (piv < n && !aug.get(piv, c)) {
            piv++;
        }
        if (piv == n) {
            return std::nullopt;
        }
        aug.swap_rows(c, piv);
        for (size_t r = 0; r < n; r++) {
            if (r != c && aug.get(r, c)) {
                aug.xor_row(r, c);
            }
        }
    }
    return aug.block(0, n, n, n);
}

bool is_symmetric(const BitMatrix &a) {
    if (!a.square()) {
        throw std::invalid_argument("is_symmetric: matrix not square");
    }
    return a == a.transpose();
}

bool is_symplectic(const BitMatrix &c) {
    if (!c.square() || c.rows() % 2) {
        throw std::invalid_argument("is_symplectic: need a square matrix of even dimension");
    }
    size_t m = c.rows() / 2;
    BitMatrix j = BitMatrix::from_blocks(BitMatrix(m, m), BitMatrix::identity(m), BitMatrix::identity(m), BitMatrix(m, m));
    return mat_mul(mat_mul(c.transpose(), j), c) == j;
}

PauliVector PauliVector::from_zx(size_t m, uint64_t z, uint64_t x) {
    std::vector<uint8_t> b(2 * m);
    for (size_t k = 0; k < m; k++) {
        b[k] = (z >> k) & 1;
        b[m + k] = (x >> k) & 1;
    }
    return PauliVector(std::move(b));
}

bool PauliVector::is_zero() const {
    for (auto b : bits) {
        if (b) {
            return false;
        }
    }
    return true;
}

int symplectic_product(const PauliVector &a, const PauliVector &b) {
    if (a.bits.size() != b.bits.size() || a.bits.size() % 2) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    size_t m = a.num_qubits();
    int s = 0;
    for (size_t k = 0; k < m; k++) {
        s ^= (a.z(k) & b.x(k)) ^ (a.x(k) & b.z(k));
    }
    return s;
}

PauliVector column_vector(const BitMatrix &g, size_t c) {
    std::vector<uint8_t> b(g.rows());
    for (size_t r = 0; r < g.rows(); r++) {
        b[r] = g.get(r, c);
    }
    return PauliVector(std::move(b));
}

PauliVector combine_columns(const BitMatrix &g, uint64_t coeffs) {
    std::vector<uint8_t> b(g.rows(), 0);
    for (size_t c = 0; c < g.cols(); c++) {
        if ((coeffs >> c) & 1) {
            for (size_t r = 0; r < g.rows(); r++) {
                b[r] ^= g.get(r, c);
            }
        }
    }
    return PauliVector(std::move(b));
}

std::string write_matrix_text(const BitMatrix &m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (const auto &r : m.row_strings()) {
        s += r;
        s += '\n';
    }
    return s;
}

BitMatrix read_matrix_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string &msg) {
        throw std::runtime_error("matrix text line " + std::to_string(lineno) + ": " + msg);
    };
    size_t rows = 0;
    size_t cols = 0;
    bool have_header = false;
    std::vector<std::string> body;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            std::istringstream h(line);
            if (!(h >> rows >> cols) || rows == 0 || cols == 0) {
                fail("expected \"rows cols\" header");
            }
            std::string extra;
            if (h >> extra) {
                fail("trailing data after header");
            }
            have_header = true;
            continue;
        }
        if (line.size() != cols) {
            fail("expected " + std::to_string(cols) + " columns, got " + std::to_string(line.size()));
        }
        for (char c : line) {
            if (c != '0' && c != '1') {
                fail("expected 0/1 characters");
            }
        }
        body.push_back(line);
        if (body.size() > rows) {
            fail("more rows than declared");
        }
    }
    if (!have_header) {
        fail("missing header");
    }
    if (body.size() != rows) {
        fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(body.size()));
    }
    return BitMatrix::from_rows(body);
}

}  // namespace mubforge
