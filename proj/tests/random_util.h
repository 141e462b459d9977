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

#ifndef CNOTCALC_TESTS_RANDOM_UTIL_H
#define CNOTCALC_TESTS_RANDOM_UTIL_H

#include <algorithm>
#include <random>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/gf2.h"
#include "cnotcalc/gf2_matrix.h"

namespace testutil {

using cnotcalc::AffineRelation;
using cnotcalc::BitVec;
using cnotcalc::GF2Matrix;

inline GF2Matrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    GF2Matrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

inline BitVec random_bits(std::mt19937_64 &rng, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

inline GF2Matrix random_invertible(std::mt19937_64 &rng, size_t n) {
    while (true) {
        GF2Matrix m = random_matrix(rng, n, n);
        if (cnotcalc::rref(m).rank == n) {
            return m;
        }
    }
}

/// Any affine relation, usually not a partial iso.
inline AffineRelation random_relation(std::mt19937_64 &rng, size_t n, size_t m) {
    return AffineRelation(n, m, random_matrix(rng, rng() % (n + m + 1), n + m + 1));
}

/// A random affine bijection between a random affine subspace of n bits and
/// one of m bits. Empty about one time in eight.
inline AffineRelation random_partial_iso(std::mt19937_64 &rng, size_t n, size_t m) {
    if (rng() % 8 == 0) {
        return AffineRelation::empty(n, m);
    }
    size_t d = rng() % (std::min(n, m) + 1);
    AffineRelation a = AffineRelation::from_affine_map(random_invertible(rng, n), random_bits(rng, n));
    GF2Matrix keep(n, n + d + 1);
    for (size_t i = 0; i < n; i++) {
        keep.set(i, i, true);
        if (i < d) {
            keep.set(i, n + i, true);
        }
    }
    GF2Matrix embed(m, d + m + 1);
    for (size_t i = 0; i < m; i++) {
        embed.set(i, d + i, true);
        if (i < d) {
            embed.set(i, i, true);
        }
    }
    AffineRelation b = AffineRelation::from_affine_map(random_invertible(rng, m), random_bits(rng, m));
    return compose(compose(compose(a, AffineRelation(n, d, keep)), AffineRelation(d, m, embed)), b);
}

}  // namespace testutil

#endif
