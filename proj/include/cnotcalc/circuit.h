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

#ifndef CNOTCALC_CIRCUIT_H
#define CNOTCALC_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/bitvec.h"

namespace cnotcalc {

enum class GateKind : uint8_t { Cnot, Swap, Init1, Post1 };

/// A primitive generator with absolute wire indices.
///
/// Cnot uses (a, b) = (control, target). Swap exchanges a and b. Init1
/// inserts a new wire holding 1 at index a, shifting wires >= a up. Post1
/// requires wire a to hold 1 and removes it.
struct Gate {
    GateKind kind;
    uint32_t a = 0;
    uint32_t b = 0;

    static Gate cnot(size_t control, size_t target);
    static Gate swap(size_t a, size_t b);
    static Gate init1(size_t pos);
    static Gate post1(size_t pos);

    /// Change in width caused by the gate.
    int width_delta() const;
    /// The same gate with every index offset by `k`.
    Gate shifted(size_t k) const;
    std::string str() const;

    bool operator==(const Gate &other) const = default;
};

// Derived generators, expanded to primitives.
std::vector<Gate> init0_gates(size_t pos);
std::vector<Gate> post0_gates(size_t pos);
std::vector<Gate> not_gates(size_t pos);

class CircuitError : public std::invalid_argument {
   public:
    CircuitError(std::string message, std::optional<size_t> gate_index = std::nullopt);
    std::optional<size_t> gate_index() const { return gate_index_; }

   private:
    std::optional<size_t> gate_index_;
};

struct Diagnostic {
    size_t gate_index;
    std::string message;
};

/// A gate list typed n_in -> n_out.
///
/// Circuits built with the appending methods are always valid. from_gates()
/// accepts anything so that validate() can report the first bad gate;
/// operations that need a valid circuit throw CircuitError otherwise.
class Circuit {
   public:
    /// The identity on n wires.
    explicit Circuit(size_t n = 0) : n_in_(n), n_out_(n) {}
    static Circuit from_gates(size_t n_in, std::vector<Gate> gates);

    size_t n_in() const { return n_in_; }
    size_t n_out() const { return n_out_; }
    size_t width() const { return n_out_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }

    /// Number of cnots plus ancillae.
    size_t size() const;

    std::optional<Diagnostic> validate() const;
    void require_valid() const;
    /// Width before each gate, followed by the final width.
    std::vector<size_t> width_trace() const;

    Circuit &append(const Gate &g);
    Circuit &append(const std::vector<Gate> &gs);
    Circuit &cnot(size_t control, size_t target) { return append(Gate::cnot(control, target)); }
    Circuit &swap(size_t a, size_t b) { return append(Gate::swap(a, b)); }
    Circuit &init1(size_t pos) { return append(Gate::init1(pos)); }
    Circuit &post1(size_t pos) { return append(Gate::post1(pos)); }
    Circuit &init0(size_t pos) { return append(init0_gates(pos)); }
    Circuit &post0(size_t pos) { return append(post0_gates(pos)); }
    Circuit &not_gate(size_t pos) { return append(not_gates(pos)); }
    /// Appends `c` acting on wires [offset, offset + c.n_in()).
    Circuit &then(const Circuit &c, size_t offset = 0);

    bool operator==(const Circuit &other) const = default;

   private:
    size_t n_in_ = 0;
    size_t n_out_ = 0;
    std::vector<Gate> gates_;
};

/// c then d.
Circuit compose_circ(const Circuit &c, const Circuit &d);
/// c on the low wires, d above it.
Circuit tensor_circ(const Circuit &c, const Circuit &d);
Circuit dagger_circ(const Circuit &c);

/// Runs the circuit on a basis state; nullopt once a post-selection fails.
std::optional<BitVec> eval_state(const Circuit &c, const BitVec &x);

/// The relation computed by the circuit.
AffineRelation semantics(const Circuit &c);
/// Relation of a single gate acting on `width` wires.
AffineRelation gate_relation(const Gate &g, size_t width);
/// Left fold of gate_relation under compose; agrees with semantics().
AffineRelation semantics_by_composition(const Circuit &c);

/// Semantic equality. Throws CircuitError on an arity mismatch.
bool equal_circ(const Circuit &c, const Circuit &d);

}  // namespace cnotcalc

#endif
