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

#ifndef CNOTCALC_AFFINE_RELATION_H
#define CNOTCALC_AFFINE_RELATION_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnotcalc/bitvec.h"
#include "cnotcalc/gf2_matrix.h"

namespace cnotcalc {

/// An affine subspace of GF(2)^(n_in + n_out), read as the graph of a
/// relation from n_in bits to n_out bits.
///
/// Constraints are held as a canonical augmented system over the variable
/// order (x_0 .. x_{n_in-1}, y_0 .. y_{n_out-1} | rhs). Two relations are
/// equal exactly when their arities and constraint matrices are equal. The
/// empty relation is the single row [0 ... 0 | 1].
///
/// Any affine relation can be represented; whether it is a partial
/// isomorphism is a property to check with is_partial_iso().
class AffineRelation {
   public:
    /// Canonicalizes `augmented`, which must have n_in + n_out + 1 columns.
    AffineRelation(size_t n_in, size_t n_out, const GF2Matrix &augmented);

    static AffineRelation identity(size_t n);
    static AffineRelation empty(size_t n_in, size_t n_out);
    /// Graph of the total map x -> linear * x + shift.
    static AffineRelation from_affine_map(const GF2Matrix &linear, const BitVec &shift);
    /// Graph of a wire permutation: output j carries input perm[j].
    static AffineRelation permutation(const std::vector<size_t> &perm);

    size_t n_in() const { return n_in_; }
    size_t n_out() const { return n_out_; }
    const GF2Matrix &constraints() const { return constraints_; }

    bool is_empty() const;
    /// Defined on every input.
    bool is_total() const;
    bool is_partial_iso() const;
    /// A nonzero homogeneous solution with zero x part or zero y part, as a
    /// vector over (x, y); nullopt when the relation is a partial iso.
    std::optional<BitVec> partial_iso_violation() const;
    bool contains(const BitVec &x, const BitVec &y) const;

    /// Augmented system over the x variables describing the domain.
    GF2Matrix domain() const;
    /// Augmented system over the y variables describing the image.
    GF2Matrix image() const;

    /// The y related to x, or nullopt when x is outside the domain. Throws
    /// std::domain_error if x has more than one image.
    std::optional<BitVec> apply(const BitVec &x) const;

    /// Every graph point, sorted. Requires n_in + n_out <= 20.
    std::vector<std::pair<BitVec, BitVec>> enumerate_graph() const;

    std::string str() const;

    bool operator==(const AffineRelation &other) const = default;

   private:
    size_t n_in_ = 0;
    size_t n_out_ = 0;
    GF2Matrix constraints_;
};

/// r then s.
AffineRelation compose(const AffineRelation &r, const AffineRelation &s);
AffineRelation tensor(const AffineRelation &r, const AffineRelation &s);
AffineRelation dagger(const AffineRelation &r);
/// Identity on the domain of r.
AffineRelation restriction(const AffineRelation &r);
/// Intersection of graphs.
AffineRelation meet(const AffineRelation &r, const AffineRelation &s);

}  // namespace cnotcalc

#endif
