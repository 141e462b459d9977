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

#ifndef CNOTCALC_NORMALIZE_H
#define CNOTCALC_NORMALIZE_H

#include <stdexcept>
#include <string>
#include <vector>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/circuit.h"
#include "cnotcalc/gf2_matrix.h"

namespace cnotcalc {

/// The parity constraint sum(x_i for i in support) == rhs.
struct Clause {
    std::vector<size_t> support;
    bool rhs = false;

    bool operator==(const Clause &other) const = default;
};

struct ClausalForm {
    size_t n = 0;
    std::vector<Clause> clauses;

    /// Augmented system with one row per clause.
    GF2Matrix to_system() const;
    static ClausalForm from_system(const GF2Matrix &augmented);
    bool operator==(const ClausalForm &other) const = default;
};

class NormalizeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// One row operation of the elimination, on clause indices of the list as it
/// stands when the step is taken.
struct EliminationStep {
    enum Kind {
        /// clauses[dst] += clauses[src]
        Add,
        Swap,
        /// Removes the trivial clause at `src`.
        Drop,
        /// The list holds 0 = 1; everything is replaced by that one clause.
        Collapse,
    };
    Kind kind;
    size_t src = 0;
    size_t dst = 0;
};

/// Applies one step in place.
void apply_step(ClausalForm &cf, const EliminationStep &step);

/// Canonical clauses for the domain of a restriction idempotent. Throws
/// NormalizeError when r is not one.
ClausalForm idempotent_to_clausal(const AffineRelation &r);

/// Sequential composition of one clause circuit per clause.
Circuit clausal_to_circuit(const ClausalForm &cf);

/// Row-reduces the clauses: pivots ascending, no trivial clauses, and an
/// unsatisfiable list becomes the single clause (empty, 1). When `steps` is
/// given, every row operation is appended to it.
ClausalForm gaussian_eliminate(const ClausalForm &cf, std::vector<EliminationStep> *steps = nullptr);

bool is_canonical(const ClausalForm &cf);

/// The canonical clausal circuit of an idempotent circuit.
Circuit normalize_idempotent(const Circuit &c);

}  // namespace cnotcalc

#endif
