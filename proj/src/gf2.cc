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

#include "cnotcalc/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace cnotcalc {

RrefResult rref(const GF2Matrix &m) {
    RrefResult out{m, {}, 0};
    GF2Matrix &a = out.matrix;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t p = r;
        while (p < a.rows() && !a.get(p, c)) {
            p++;
        }
        if (p == a.rows()) {
            continue;
        }
        a.swap_rows(p, r);
        for (size_t k = 0; k < a.rows(); k++) {
            if (k != r && a.get(k, c)) {
                a.xor_row_into(r, k);
            }
        }
        out.pivots.push_back(c);
        r++;
    }
    out.rank = r;
    return out;
}

std::vector<BitVec> kernel_basis(const GF2Matrix &a) {
    RrefResult red = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < a.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(a.cols());
        v.set(f, true);
        for (size_t k = 0; k < red.rank; k++) {
            if (red.matrix.get(k, f)) {
                v.set(red.pivots[k], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<GF2Matrix> inverse(const GF2Matrix &m) {
    size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    GF2Matrix aug(0, 2 * n);
    for (size_t r = 0; r < n; r++) {
        aug.append_row(m.row(r).concat(BitVec::unit(n, r)));
    }
    RrefResult red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    GF2Matrix out(0, n);
    for (size_t r = 0; r < n; r++) {
        out.append_row(red.matrix.row(r).slice(n, 2 * n));
    }
    return out;
}

namespace {

GF2Matrix augment(const GF2Matrix &a, const BitVec &b) {
    GF2Matrix aug(0, a.cols() + 1);
    for (size_t r = 0; r < a.rows(); r++) {
        BitVec row = a.row(r).concat(BitVec(1));
        row.set(a.cols(), b[r]);
        aug.append_row(std::move(row));
    }
    return aug;
}

void require_augmented(const GF2Matrix &m) {
    if (m.cols() == 0) {
        throw std::invalid_argument("augmented system needs a right-hand-side column");
    }
}

}  // namespace

std::optional<AffineSolution> solve_affine(const GF2Matrix &a, const BitVec &b) {
    if (a.rows() != b.size()) {
        throw std::invalid_argument("solve_affine: row count does not match rhs length");
    }
    size_t n = a.cols();
    RrefResult red = rref(augment(a, b));
    if (!red.pivots.empty() && red.pivots.back() == n) {
        return std::nullopt;
    }
    AffineSolution sol{BitVec(n), kernel_basis(a)};
    for (size_t k = 0; k < red.rank; k++) {
        sol.particular.set(red.pivots[k], red.matrix.get(k, n));
    }
    return sol;
}

GF2Matrix canonical_system(const GF2Matrix &augmented) {
    require_augmented(augmented);
    size_t rhs = augmented.cols() - 1;
    RrefResult red = rref(augmented);
    if (!red.pivots.empty() && red.pivots.back() == rhs) {
        GF2Matrix bad(1, augmented.cols());
        bad.set(0, rhs, true);
        return bad;
    }
    GF2Matrix out(0, augmented.cols());
    for (size_t k = 0; k < red.rank; k++) {
        out.append_row(red.matrix.row(k));
    }
    return out;
}

bool is_inconsistent(const GF2Matrix &canonical) {
    return canonical.rows() == 1 && canonical.row(0).first_one() == canonical.cols() - 1;
}

GF2Matrix project_out(const GF2Matrix &augmented, const std::vector<size_t> &cols) {
    require_augmented(augmented);
    size_t rhs = augmented.cols() - 1;
    std::vector<bool> drop(augmented.cols(), false);
    for (size_t c : cols) {
        if (c >= rhs) {
            throw std::out_of_range("project_out: column " + std::to_string(c) + " is not a variable");
        }
        drop[c] = true;
    }
    GF2Matrix m = augmented;
    for (size_t c = 0; c < rhs; c++) {
        if (!drop[c]) {
            continue;
        }
        size_t p = 0;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        for (size_t k = 0; k < m.rows(); k++) {
            if (k != p && m.get(k, c)) {
                m.xor_row_into(p, k);
            }
        }
        m.remove_row(p);
    }
    std::vector<size_t> keep;
    for (size_t c = 0; c < augmented.cols(); c++) {
        if (!drop[c]) {
            keep.push_back(c);
        }
    }
    return canonical_system(m.select_columns(keep));
}

std::optional<BitVec> least_solution(const GF2Matrix &augmented) {
    require_augmented(augmented);
    size_t n = augmented.cols() - 1;
    GF2Matrix sys = canonical_system(augmented);
    if (is_inconsistent(sys)) {
        return std::nullopt;
    }
    // Fix coordinates in index order, preferring 0; a coordinate is forced to
    // 1 only when the system restricted so far would otherwise be empty.
    BitVec x(n);
    for (size_t i = 0; i < n; i++) {
        GF2Matrix trial = sys;
        BitVec fix = BitVec::unit(n + 1, i);
        trial.append_row(fix);
        GF2Matrix zero_case = canonical_system(trial);
        if (!is_inconsistent(zero_case)) {
            sys = zero_case;
        } else {
            fix.set(n, true);
            sys.append_row(fix);
            sys = canonical_system(sys);
            x.set(i, true);
        }
    }
    return x;
}

bool satisfies(const GF2Matrix &augmented, const BitVec &x) {
    require_augmented(augmented);
    size_t n = augmented.cols() - 1;
    if (x.size() != n) {
        throw std::invalid_argument("satisfies: assignment length mismatch");
    }
    for (const BitVec &row : augmented.row_list()) {
        if (row.slice(0, n).dot(x) != row[n]) {
            return false;
        }
    }
    return true;
}

}  // namespace cnotcalc
