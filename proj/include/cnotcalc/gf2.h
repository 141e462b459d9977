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

#ifndef CNOTCALC_GF2_H
#define CNOTCALC_GF2_H

#include <optional>
#include <vector>

#include "cnotcalc/bitvec.h"
#include "cnotcalc/gf2_matrix.h"

namespace cnotcalc {

struct RrefResult {
    GF2Matrix matrix;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/// Reduced row echelon form. Zero rows are kept at the bottom, so the shape
/// of the result equals the shape of the input.
RrefResult rref(const GF2Matrix &m);

struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel_basis;
};

/// Solves a*x = b. Returns nullopt when the system is inconsistent.
/// The particular solution has all free variables set to zero.
std::optional<AffineSolution> solve_affine(const GF2Matrix &a, const BitVec &b);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<GF2Matrix> inverse(const GF2Matrix &m);

/// Basis of {x : a*x = 0}, one vector per free column in increasing order.
std::vector<BitVec> kernel_basis(const GF2Matrix &a);

// Augmented systems: the last column is the right-hand side.

/// RREF with zero rows dropped. An inconsistent system collapses to the
/// single row [0 ... 0 | 1].
GF2Matrix canonical_system(const GF2Matrix &augmented);

bool is_inconsistent(const GF2Matrix &canonical);

/// Existentially eliminates the listed variables. The result is canonical
/// and has one fewer column per eliminated variable.
GF2Matrix project_out(const GF2Matrix &augmented, const std::vector<size_t> &cols);

/// The lexicographically least solution (coordinate 0 most significant),
/// or nullopt when there is none.
std::optional<BitVec> least_solution(const GF2Matrix &augmented);

/// Whether `x` satisfies every row of the augmented system.
bool satisfies(const GF2Matrix &augmented, const BitVec &x);

}  // namespace cnotcalc

#endif
