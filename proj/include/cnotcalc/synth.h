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

#ifndef CNOTCALC_SYNTH_H
#define CNOTCALC_SYNTH_H

#include <optional>
#include <stdexcept>
#include <string>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/circuit.h"
#include "cnotcalc/gf2_matrix.h"

namespace cnotcalc {

/// The total map x -> linear * x + shift, linear being m x n.
struct AffineMapSpec {
    GF2Matrix linear;
    BitVec shift;

    size_t n_in() const { return linear.cols(); }
    size_t n_out() const { return linear.rows(); }
    BitVec apply(const BitVec &x) const;
    AffineRelation graph() const;
};

class SynthError : public std::invalid_argument {
   public:
    SynthError(std::string message, std::optional<BitVec> direction = std::nullopt);
    /// A nonzero homogeneous solution with zero x part or zero y part.
    const std::optional<BitVec> &direction() const { return direction_; }

   private:
    std::optional<BitVec> direction_;
};

/// n -> n + m circuit x -> (x, f(x)): ancillae prepared to the shift, then a
/// cnot from input j onto output i for every 1 entry, input-major.
Circuit synth_total_graph(const AffineMapSpec &f);

/// A total affine map agreeing with the partial function r on its domain.
/// Directions outside the domain are sent to zero. r must be single-valued
/// and non-empty.
AffineMapSpec extend_to_total(const AffineRelation &r);

/// A circuit whose semantics is r. Throws SynthError unless r is a partial
/// isomorphism.
Circuit synth(const AffineRelation &r);

}  // namespace cnotcalc

#endif
