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

#ifndef CNOTCALC_TESTS_ORACLE_H
#define CNOTCALC_TESTS_ORACLE_H

// Brute-force reference implementations. These enumerate instead of
// eliminating, so they share no logic with the library beyond BitVec.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/bitvec.h"
#include "cnotcalc/circuit.h"
#include "cnotcalc/gf2_matrix.h"

namespace oracle {

using cnotcalc::AffineRelation;
using cnotcalc::BitVec;
using cnotcalc::Circuit;
using cnotcalc::GF2Matrix;

using PointSet = std::set<std::pair<BitVec, BitVec>>;

inline std::vector<BitVec> all_vectors(size_t n) {
    std::vector<BitVec> out;
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        out.push_back(BitVec::from_integer(v, n));
    }
    return out;
}

inline std::set<BitVec> row_space(const GF2Matrix &m) {
    std::set<BitVec> out;
    for (const BitVec &mask : all_vectors(m.rows())) {
        BitVec acc(m.cols());
        for (size_t r = 0; r < m.rows(); r++) {
            if (mask[r]) {
                acc ^= m.row(r);
            }
        }
        out.insert(acc);
    }
    return out;
}

inline bool satisfies_row(const BitVec &row, const BitVec &x) {
    bool lhs = false;
    for (size_t i = 0; i < x.size(); i++) {
        lhs ^= row[i] && x[i];
    }
    return lhs == row[x.size()];
}

/// All x satisfying every row of an augmented system.
inline std::set<BitVec> solutions(const GF2Matrix &augmented) {
    size_t n = augmented.cols() - 1;
    std::set<BitVec> out;
    for (const BitVec &x : all_vectors(n)) {
        bool ok = true;
        for (const BitVec &row : augmented.row_list()) {
            ok = ok && satisfies_row(row, x);
        }
        if (ok) {
            out.insert(x);
        }
    }
    return out;
}

/// Points of a relation found by testing every (x, y) against its rows.
inline PointSet points(const AffineRelation &r) {
    PointSet out;
    for (const BitVec &v : solutions(r.constraints())) {
        out.emplace(v.slice(0, r.n_in()), v.slice(r.n_in(), v.size()));
    }
    return out;
}

/// The affine hull of a point set, as a relation. Every affine hyperplane
/// containing all points contributes a constraint.
inline AffineRelation relation_from_points(size_t n, size_t m, const PointSet &pts) {
    if (pts.empty()) {
        return AffineRelation::empty(n, m);
    }
    std::vector<BitVec> vs;
    for (const auto &[x, y] : pts) {
        vs.push_back(x.concat(y));
    }
    GF2Matrix sys(0, n + m + 1);
    for (const BitVec &a : all_vectors(n + m)) {
        bool value = a.dot(vs[0]);
        bool constant = true;
        for (const BitVec &v : vs) {
            constant = constant && a.dot(v) == value;
        }
        if (constant && !a.is_zero()) {
            BitVec row = a.concat(BitVec(1));
            row.set(n + m, value);
            sys.append_row(row);
        }
    }
    return AffineRelation(n, m, sys);
}

/// Graph of the circuit's state map, found by running every input.
inline PointSet circuit_points(const Circuit &c) {
    PointSet out;
    for (const BitVec &x : all_vectors(c.n_in())) {
        if (auto y = cnotcalc::eval_state(c, x)) {
            out.emplace(x, *y);
        }
    }
    return out;
}

inline AffineRelation circuit_relation(const Circuit &c) {
    return relation_from_points(c.n_in(), c.n_out(), circuit_points(c));
}

/// Set composition of two graphs.
inline PointSet compose_points(const PointSet &r, const PointSet &s) {
    PointSet out;
    for (const auto &[x, y] : r) {
        for (const auto &[y2, z] : s) {
            if (y == y2) {
                out.emplace(x, z);
            }
        }
    }
    return out;
}

inline bool is_affine_set(const PointSet &pts) {
    if (pts.empty()) {
        return true;
    }
    std::set<BitVec> vs;
    for (const auto &[x, y] : pts) {
        vs.insert(x.concat(y));
    }
    const BitVec &p0 = *vs.begin();
    for (const BitVec &a : vs) {
        for (const BitVec &b : vs) {
            if (!vs.count(a ^ b ^ p0)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracle

#endif
