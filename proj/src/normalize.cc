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

#include "cnotcalc/normalize.h"

#include <algorithm>
#include <iterator>

#include "cnotcalc/constructions.h"
#include "cnotcalc/gf2.h"

namespace cnotcalc {

namespace {

// Symmetric difference of two sorted supports.
std::vector<size_t> xor_support(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    std::vector<size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool has(const Clause &c, size_t col) { return std::binary_search(c.support.begin(), c.support.end(), col); }

}  // namespace

GF2Matrix ClausalForm::to_system() const {
    GF2Matrix m(0, n + 1);
    for (const Clause &c : clauses) {
        BitVec row(n + 1);
        for (size_t i : c.support) {
            if (i >= n) {
                throw std::out_of_range("clause wire " + std::to_string(i) + " out of range for " + std::to_string(n));
            }
            row.set(i, true);
        }
        row.set(n, c.rhs);
        m.append_row(std::move(row));
    }
    return m;
}

ClausalForm ClausalForm::from_system(const GF2Matrix &augmented) {
    if (augmented.cols() == 0) {
        throw std::invalid_argument("from_system: missing rhs column");
    }
    ClausalForm cf;
    cf.n = augmented.cols() - 1;
    for (const BitVec &row : augmented.row_list()) {
        Clause c;
        for (size_t i = 0; i < cf.n; i++) {
            if (row[i]) {
                c.support.push_back(i);
            }
        }
        c.rhs = row[cf.n];
        cf.clauses.push_back(std::move(c));
    }
    return cf;
}

void apply_step(ClausalForm &cf, const EliminationStep &step) {
    auto &cl = cf.clauses;
    switch (step.kind) {
        case EliminationStep::Add:
            cl[step.dst].support = xor_support(cl[step.dst].support, cl[step.src].support);
            cl[step.dst].rhs = cl[step.dst].rhs != cl[step.src].rhs;
            break;
        case EliminationStep::Swap:
            std::swap(cl[step.src], cl[step.dst]);
            break;
        case EliminationStep::Drop:
            cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(step.src));
            break;
        case EliminationStep::Collapse:
            cl = {Clause{{}, true}};
            break;
    }
}

ClausalForm gaussian_eliminate(const ClausalForm &input, std::vector<EliminationStep> *steps) {
    ClausalForm cf = input;
    for (Clause &c : cf.clauses) {
        std::sort(c.support.begin(), c.support.end());
        if (std::adjacent_find(c.support.begin(), c.support.end()) != c.support.end()) {
            throw NormalizeError("clause lists a wire twice");
        }
    }
    std::vector<EliminationStep> local;
    auto step = [&](EliminationStep s) {
        apply_step(cf, s);
        local.push_back(s);
    };
    size_t r = 0;
    for (size_t col = 0; col < cf.n && r < cf.clauses.size(); col++) {
        size_t p = r;
        while (p < cf.clauses.size() && !has(cf.clauses[p], col)) {
            p++;
        }
        if (p == cf.clauses.size()) {
            continue;
        }
        if (p != r) {
            step({EliminationStep::Swap, p, r});
        }
        for (size_t k = 0; k < cf.clauses.size(); k++) {
            if (k != r && has(cf.clauses[k], col)) {
                step({EliminationStep::Add, r, k});
            }
        }
        r++;
    }
    // Everything from r on has empty support.
    bool contradiction = false;
    for (size_t k = r; k < cf.clauses.size(); k++) {
        contradiction = contradiction || cf.clauses[k].rhs;
    }
    if (contradiction) {
        step({EliminationStep::Collapse, 0, 0});
    } else {
        while (cf.clauses.size() > r) {
            step({EliminationStep::Drop, cf.clauses.size() - 1, 0});
        }
    }
    // Same answer by the matrix route.
    if (cf.to_system() != canonical_system(input.to_system())) {
        throw std::logic_error("clause elimination disagrees with rref");
    }
    if (steps) {
        steps->insert(steps->end(), local.begin(), local.end());
    }
    return cf;
}

bool is_canonical(const ClausalForm &cf) {
    GF2Matrix m = cf.to_system();
    return canonical_system(m) == m;
}

ClausalForm idempotent_to_clausal(const AffineRelation &r) {
    if (r.n_in() != r.n_out()) {
        throw NormalizeError("not an idempotent: arity " + std::to_string(r.n_in()) + " -> " +
                             std::to_string(r.n_out()));
    }
    if (restriction(r) != r) {
        throw NormalizeError("not a restriction idempotent: the relation differs from its restriction");
    }
    return ClausalForm::from_system(r.domain());
}

Circuit clausal_to_circuit(const ClausalForm &cf) {
    Circuit c(cf.n);
    for (const Clause &cl : cf.clauses) {
        c.then(clause_circuit(cl.support, cl.rhs, cf.n));
    }
    return c;
}

Circuit normalize_idempotent(const Circuit &c) {
    return clausal_to_circuit(gaussian_eliminate(idempotent_to_clausal(semantics(c))));
}

}  // namespace cnotcalc
