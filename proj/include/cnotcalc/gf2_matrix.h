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

#ifndef CNOTCALC_GF2_MATRIX_H
#define CNOTCALC_GF2_MATRIX_H

#include <initializer_list>
#include <string>
#include <vector>

#include "cnotcalc/bitvec.h"

namespace cnotcalc {

/// Dense row-major matrix over GF(2). Each row is a BitVec of length cols().
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols);
    /// Builds from nested 0/1 literals; every row must have the same length.
    GF2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static GF2Matrix identity(size_t n);
    /// Stacks the given rows; `cols` is needed when `rows` is empty.
    static GF2Matrix from_rows(std::vector<BitVec> rows, size_t cols);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return rows_[r][c]; }
    void set(size_t r, size_t c, bool value) { rows_[r].set(c, value); }
    const BitVec &row(size_t r) const { return rows_[r]; }
    BitVec &row(size_t r) { return rows_[r]; }
    const std::vector<BitVec> &row_list() const { return rows_; }
    BitVec column(size_t c) const;

    void append_row(BitVec row);
    void swap_rows(size_t a, size_t b);
    /// row[dst] ^= row[src]
    void xor_row_into(size_t src, size_t dst);
    void remove_row(size_t r);

    /// Matrix-vector product over GF(2).
    BitVec operator*(const BitVec &v) const;
    GF2Matrix operator*(const GF2Matrix &other) const;
    GF2Matrix transposed() const;
    /// Keeps the listed columns, in the listed order.
    GF2Matrix select_columns(const std::vector<size_t> &cols) const;

    std::string str() const;

    bool operator==(const GF2Matrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

}  // namespace cnotcalc

#endif
