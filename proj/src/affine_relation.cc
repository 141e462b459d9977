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

#include "cnotcalc/affine_relation.h"

#include <algorithm>
#include <stdexcept>

#include "cnotcalc/gf2.h"

namespace cnotcalc {

namespace {

// Copies the coefficient columns of `row` (all but its last) into the listed
// target columns of a fresh row of width `width`, keeping the rhs in the last
// column.
BitVec scatter(const BitVec &row, const std::vector<size_t> &targets, size_t width) {
    BitVec out(width);
    for (size_t i = 0; i < targets.size(); i++) {
        if (row[i]) {
            out.set(targets[i], true);
        }
    }
    out.set(width - 1, row[row.size() - 1]);
    return out;
}

std::vector<size_t> iota_range(size_t begin, size_t count) {
    std::vector<size_t> v(count);
    for (size_t i = 0; i < count; i++) {
        v[i] = begin + i;
    }
    return v;
}

std::vector<size_t> concat(std::vector<size_t> a, const std::vector<size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

AffineRelation::AffineRelation(size_t n_in, size_t n_out, const GF2Matrix &augmented)
    : n_in_(n_in), n_out_(n_out) {
    if (augmented.cols() != n_in + n_out + 1) {
        throw std::invalid_argument("AffineRelation: expected " + std::to_string(n_in + n_out + 1) +
                                    " columns, got " + std::to_string(augmented.cols()));
    }
    constraints_ = canonical_system(augmented);
}

AffineRelation AffineRelation::identity(size_t n) {
    GF2Matrix m(n, 2 * n + 1);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
        m.set(i, n + i, true);
    }
    return AffineRelation(n, n, m);
}

AffineRelation AffineRelation::empty(size_t n_in, size_t n_out) {
    GF2Matrix m(1, n_in + n_out + 1);
    m.set(0, n_in + n_out, true);
    return AffineRelation(n_in, n_out, m);
}

AffineRelation AffineRelation::from_affine_map(const GF2Matrix &linear, const BitVec &shift) {
    size_t n = linear.cols();
    size_t m = linear.rows();
    if (shift.size() != m) {
        throw std::invalid_argument("from_affine_map: shift length does not match row count");
    }
    GF2Matrix sys(m, n + m + 1);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            sys.set(i, j, linear.get(i, j));
        }
        sys.set(i, n + i, true);
        sys.set(i, n + m, shift[i]);
    }
    return AffineRelation(n, m, sys);
}

AffineRelation AffineRelation::permutation(const std::vector<size_t> &perm) {
    size_t n = perm.size();
    std::vector<bool> seen(n, false);
    GF2Matrix sys(n, 2 * n + 1);
    for (size_t j = 0; j < n; j++) {
        if (perm[j] >= n || seen[perm[j]]) {
            throw std::invalid_argument("permutation: not a permutation");
        }
        seen[perm[j]] = true;
        sys.set(j, perm[j], true);
        sys.set(j, n + j, true);
    }
    return AffineRelation(n, n, sys);
}

bool AffineRelation::is_empty() const { return is_inconsistent(constraints_); }

bool AffineRelation::is_total() const {
    GF2Matrix dom = domain();
    return dom.rows() == 0;
}

std::optional<BitVec> AffineRelation::partial_iso_violation() const {
    if (is_empty()) {
        return std::nullopt;
    }
    size_t w = n_in_ + n_out_;
    GF2Matrix coeffs = constraints_.select_columns(iota_range(0, w));
    // A homogeneous solution with zero x part is a kernel vector of the y
    // columns, and symmetrically.
    auto check = [&](size_t begin, size_t count) -> std::optional<BitVec> {
        std::vector<BitVec> ker = kernel_basis(coeffs.select_columns(iota_range(begin, count)));
        if (ker.empty()) {
            return std::nullopt;
        }
        BitVec v(w);
        for (size_t i = 0; i < count; i++) {
            v.set(begin + i, ker[0][i]);
        }
        return v;
    };
    if (auto v = check(n_in_, n_out_)) {
        return v;
    }
    return check(0, n_in_);
}

bool AffineRelation::is_partial_iso() const { return !partial_iso_violation().has_value(); }

bool AffineRelation::contains(const BitVec &x, const BitVec &y) const {
    if (x.size() != n_in_ || y.size() != n_out_) {
        throw std::invalid_argument("contains: length mismatch");
    }
    return satisfies(constraints_, x.concat(y));
}

GF2Matrix AffineRelation::domain() const { return project_out(constraints_, iota_range(n_in_, n_out_)); }

GF2Matrix AffineRelation::image() const { return project_out(constraints_, iota_range(0, n_in_)); }

std::optional<BitVec> AffineRelation::apply(const BitVec &x) const {
    if (x.size() != n_in_) {
        throw std::invalid_argument("apply: input has " + std::to_string(x.size()) + " bits, relation expects " +
                                    std::to_string(n_in_));
    }
    size_t rhs = n_in_ + n_out_;
    GF2Matrix a(0, n_out_);
    BitVec b(constraints_.rows());
    for (size_t r = 0; r < constraints_.rows(); r++) {
        const BitVec &row = constraints_.row(r);
        a.append_row(row.slice(n_in_, rhs));
        b.set(r, row[rhs] ^ row.slice(0, n_in_).dot(x));
    }
    auto sol = solve_affine(a, b);
    if (!sol) {
        return std::nullopt;
    }
    if (!sol->kernel_basis.empty()) {
        throw std::domain_error("apply: relation is not single-valued");
    }
    return sol->particular;
}

std::vector<std::pair<BitVec, BitVec>> AffineRelation::enumerate_graph() const {
    if (n_in_ + n_out_ > 20) {
        throw std::length_error("enumerate_graph: n_in + n_out exceeds 20");
    }
    std::vector<std::pair<BitVec, BitVec>> points;
    if (is_empty()) {
        return points;
    }
    size_t w = n_in_ + n_out_;
    GF2Matrix a = constraints_.select_columns(iota_range(0, w));
    BitVec b = constraints_.column(w);
    auto sol = solve_affine(a, b);
    size_t k = sol->kernel_basis.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); mask++) {
        BitVec v = sol->particular;
        for (size_t i = 0; i < k; i++) {
            if ((mask >> i) & 1) {
                v ^= sol->kernel_basis[i];
            }
        }
        points.emplace_back(v.slice(0, n_in_), v.slice(n_in_, w));
    }
    std::sort(points.begin(), points.end());
    return points;
}

std::string AffineRelation::str() const {
    return std::to_string(n_in_) + " -> " + std::to_string(n_out_) + "\n" + constraints_.str();
}

AffineRelation compose(const AffineRelation &r, const AffineRelation &s) {
    if (r.n_out() != s.n_in()) {
        throw std::invalid_argument("compose: arity mismatch " + std::to_string(r.n_out()) + " vs " +
                                    std::to_string(s.n_in()));
    }
    size_t n = r.n_in(), m = r.n_out(), p = s.n_out();
    size_t width = n + m + p + 1;
    GF2Matrix sys(0, width);
    std::vector<size_t> r_cols = iota_range(0, n + m);
    std::vector<size_t> s_cols = iota_range(n, m + p);
    for (const BitVec &row : r.constraints().row_list()) {
        sys.append_row(scatter(row, r_cols, width));
    }
    for (const BitVec &row : s.constraints().row_list()) {
        sys.append_row(scatter(row, s_cols, width));
    }
    return AffineRelation(n, p, project_out(sys, iota_range(n, m)));
}

AffineRelation tensor(const AffineRelation &r, const AffineRelation &s) {
    size_t n = r.n_in(), m = r.n_out(), n2 = s.n_in(), m2 = s.n_out();
    size_t width = n + n2 + m + m2 + 1;
    GF2Matrix sys(0, width);
    std::vector<size_t> r_cols = concat(iota_range(0, n), iota_range(n + n2, m));
    std::vector<size_t> s_cols = concat(iota_range(n, n2), iota_range(n + n2 + m, m2));
    for (const BitVec &row : r.constraints().row_list()) {
        sys.append_row(scatter(row, r_cols, width));
    }
    for (const BitVec &row : s.constraints().row_list()) {
        sys.append_row(scatter(row, s_cols, width));
    }
    return AffineRelation(n + n2, m + m2, sys);
}

AffineRelation dagger(const AffineRelation &r) {
    size_t n = r.n_in(), m = r.n_out();
    std::vector<size_t> order = concat(concat(iota_range(n, m), iota_range(0, n)), {n + m});
    return AffineRelation(m, n, r.constraints().select_columns(order));
}

AffineRelation restriction(const AffineRelation &r) {
    size_t n = r.n_in();
    size_t width = 2 * n + 1;
    GF2Matrix sys(0, width);
    std::vector<size_t> x_cols = iota_range(0, n);
    GF2Matrix dom = r.domain();
    for (const BitVec &row : dom.row_list()) {
        sys.append_row(scatter(row, x_cols, width));
    }
    for (size_t i = 0; i < n; i++) {
        BitVec row(width);
        row.set(i, true);
        row.set(n + i, true);
        sys.append_row(row);
    }
    return AffineRelation(n, n, sys);
}

AffineRelation meet(const AffineRelation &r, const AffineRelation &s) {
    if (r.n_in() != s.n_in() || r.n_out() != s.n_out()) {
        throw std::invalid_argument("meet: arity mismatch");
    }
    GF2Matrix sys = r.constraints();
    for (const BitVec &row : s.constraints().row_list()) {
        sys.append_row(row);
    }
    return AffineRelation(r.n_in(), r.n_out(), sys);
}

}  // namespace cnotcalc
