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

#ifndef CNOTCALC_CONSTRUCTIONS_H
#define CNOTCALC_CONSTRUCTIONS_H

#include <cstdint>
#include <random>
#include <vector>

#include "cnotcalc/bitvec.h"
#include "cnotcalc/circuit.h"

namespace cnotcalc {

/// Copies n wires: x -> (x, x), first copy on wires 0..n-1.
Circuit fanout(size_t n);
/// dagger of fanout(n).
Circuit fanin(size_t n);

/// The nowhere-defined scalar 0 -> 0.
Circuit omega();
/// n post-selections, omega, then m preparations.
Circuit omega_nm(size_t n, size_t m);

/// 3n -> 3n, blocks (a, b, c) -> (a, b, a + b + c).
Circuit plus_map(size_t n);

/// Prepares the given basis state from no wires.
Circuit hat(const BitVec &bits);

/// On n wires, moves wire i-1 to the top (index 0). Identity for i <= 1.
Circuit swap_block(size_t i, size_t n);
/// On n+1 wires: wire 0 ^= wire i. Requires 1 <= i <= n.
Circuit literal(size_t i, size_t n);
/// Restriction of n wires to sum(x_i for i in support) == rhs.
Circuit clause_circuit(const std::vector<size_t> &support, bool rhs, size_t n);

/// Output j carries input perm[j]; realized with swaps.
Circuit permutation_circuit(const std::vector<size_t> &perm);

/// c == fanout(n) (c (x) 1) fanin(n), semantically.
bool is_latchable(const Circuit &c);

struct RandomCircuitOptions {
    size_t n_in = 3;
    /// Number of primitive gates.
    size_t depth = 20;
    size_t max_width = 10;
};

/// A random valid circuit; derived gates are expanded and count toward depth.
Circuit random_circuit(std::mt19937_64 &rng, const RandomCircuitOptions &opts);

}  // namespace cnotcalc

#endif
