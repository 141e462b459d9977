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

#ifndef CNOTCALC_REWRITE_H
#define CNOTCALC_REWRITE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotcalc/circuit.h"

namespace cnotcalc {

struct RewriteRule {
    std::string name;
    Circuit lhs;
    Circuit rhs;
};

enum class Direction { LeftToRight, RightToLeft };

class RewriteError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The eleven axiom rules CNT1 .. CNT9, with CNT4 and CNT7 split into a/b.
const std::vector<RewriteRule> &axioms();
/// Derived identities: absorption, helper lemmas, copying, latching, clauses.
const std::vector<RewriteRule> &lemma_fixtures();
/// Symmetric monoidal bookkeeping: interchange of independent gates and
/// swap naturality. Used to line gates up for the other rules.
const std::vector<RewriteRule> &structural_rules();

/// Throws RewriteError for unknown names.
const RewriteRule &axiom(const std::string &name);
const RewriteRule &lemma_fixture(const std::string &name);
/// Searches axioms, then lemma fixtures, then structural rules.
const RewriteRule &find_rule(const std::string &name);

/// Matches the rule's source side against the gates of c starting at
/// `offset` and replaces them with the target side.
///
/// Wires are matched by identity, not position: each source wire is bound
/// to one host wire and every source gate must equal the host gate on the
/// bound wires. Source inputs that no gate touches are bound to
/// `wires[i]` when given (host positions at `offset`), otherwise to the
/// lowest unbound host wires. Returns nullopt when the segment does not
/// match. Swaps are appended after the target when needed to put its
/// outputs where the source outputs were.
std::optional<Circuit> apply_at(const Circuit &c, const RewriteRule &rule, size_t offset, Direction dir,
                                const std::vector<size_t> &wires = {});

struct DerivationStep {
    std::string rule;
    size_t offset = 0;
    Direction dir = Direction::LeftToRight;
    std::vector<size_t> wires;
};

/// Replays steps from `start`. The result holds start followed by every
/// intermediate circuit. Throws RewriteError naming the first step that
/// fails to match.
std::vector<Circuit> replay(const Circuit &start, const std::vector<DerivationStep> &steps);

struct RuleCheck {
    std::string name;
    bool semantic_equal = false;
    bool state_map_equal = false;
    bool passed() const { return semantic_equal && state_map_equal; }
};

/// Semantic equality and exhaustive state-map equality of both sides.
RuleCheck check_rule(const RewriteRule &rule);
/// check_rule over every axiom and lemma fixture.
std::vector<RuleCheck> verify_all();

/// The step list transcribing the proof that omega (x) omega = omega,
/// starting from tensor_circ(omega(), omega()).
std::vector<DerivationStep> omega_absorb_derivation();

}  // namespace cnotcalc

#endif
