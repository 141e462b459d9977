// Copyright 2026 The cnotcalc Authors
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

#include "cnotcalc/gf2_matrix.h"

#include <stdexcept>
#include <utility>

namespace cnotcalc {

GF2Matrix::GF2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

GF2Matrix::GF2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    bool first = true;
    for (const auto &r : rows) {
        if (first) {
            cols_ = r.size();
            first = false;
        } else if (r.size() != cols_) {
            throw std::invalid_argument("GF2Matrix rows must have equal length");
        }
        rows_.emplace_back(r);
    }
}

GF2Matrix GF2Matrix::identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(std::vector<BitVec> rows, size_t cols) {
    GF2Matrix m(0, cols);
    for (auto &r : rows) {
        m.append_row(std::move(r));
    }
    return m;
}

BitVec GF2Matrix::column(size_t c) const {
    BitVec v(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        v.set(r, rows_[r][c]);
    }
    return v;
}

void GF2Matrix::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length " + std::to_string(row.size()) + " does not match " +
                                    std::to_string(cols_) + " columns");
    }
    rows_.push_back(std::move(row));
}

void GF2Matrix::swap_rows(size_t a, size_t b) { std::swap(rows_[a], rows_[b]); }

void GF2Matrix::xor_row_into(size_t src, size_t dst) { rows_[dst] ^= rows_[src]; }

void GF2Matrix::remove_row(size_t r) { rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r)); }

BitVec GF2Matrix::operator*(const BitVec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix &other) const {
    if (other.rows() != cols_) {
        throw std::invalid_argument("matrix-matrix dimension mismatch");
    }
    GF2Matrix out(rows_.size(), other.cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k = 0; k < cols_; k++) {
            if (rows_[r][k]) {
                out.rows_[r] ^= other.rows_[k];
            }
        }
    }
    return out;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (rows_[r][c]) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

GF2Matrix GF2Matrix::select_columns(const std::vector<size_t> &cols) const {
    GF2Matrix out(0, cols.size());
    for (const auto &r : rows_) {
        out.rows_.push_back(r.select(cols));
    }
    return out;
}

std::string GF2Matrix::str() const {
    std::string s;
    for (const auto &r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

}  // namespace cnotcalc
