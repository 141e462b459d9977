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

#ifndef CNOTCALC_LAWS_H
#define CNOTCALC_LAWS_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnotcalc/circuit.h"

namespace cnotcalc {

/// Outcome of one family of checks. `failure` describes the first
/// counterexample.
struct LawResult {
    explicit LawResult(std::string name = "") : name(std::move(name)) {}

    std::string name;
    size_t cases = 0;
    std::optional<std::string> failure;

    bool passed() const { return !failure; }
};

/// Copying laws of fanout/fanin for n = 1 .. max_n: naturality against
/// random circuits, cocommutativity, coassociativity, separability,
/// semi-Frobenius and uniform copying.
std::vector<LawResult> copy_laws(size_t max_n, uint64_t seed);

/// Laws of p(a, b, c), the last block of plus_map(n) on (a, b, c), checked
/// on every tuple for n = 1 .. max_n.
std::vector<LawResult> torsor_laws(size_t max_n);

/// (f x f x f) then plus_map(m) against plus_map(n) then (f x f x f).
LawResult plus_naturality(uint64_t seed, size_t trials);

/// f f' f == f, and f f' commutes with g g', on random circuits.
std::vector<LawResult> inverse_laws(uint64_t seed, size_t trials);

/// eval_state against the relation on every input.
LawResult oracle_agreement(uint64_t seed, size_t trials, size_t max_inputs = 6, size_t max_depth = 40);

/// Circuits without inputs are total or empty.
LawResult total_or_degenerate(uint64_t seed, size_t trials);

/// semantics(synth(semantics(c))) == semantics(c), and synthesizing again
/// gives the same gates.
LawResult synth_round_trip(uint64_t seed, size_t trials, size_t max_inputs = 6, size_t max_depth = 40);

/// Random systems mixed by clause additions and shuffles normalize to the
/// same circuit.
LawResult clause_mixing(uint64_t seed, size_t trials, size_t max_vars = 5);

/// The fixed elimination example [[1,0,1],[1,1,0]] | (1,0).
LawResult worked_elimination();

/// The fixed graph synthesis example T = [[1,0,1],[1,0,0]], S = (0,1).
LawResult worked_synthesis();

/// Oracle agreement and synthesis round trip for one circuit. Returns a
/// description of the first problem.
std::optional<std::string> fuzz_check(const Circuit &c);

/// Random circuit for trial `trial` of a run seeded with `seed`; the same
/// pair always gives the same circuit.
Circuit fuzz_circuit(uint64_t seed, size_t trial, size_t wires, size_t depth);

}  // namespace cnotcalc

#endif
