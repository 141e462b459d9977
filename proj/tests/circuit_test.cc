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

#include "cnotcalc/circuit.h"

#include <random>

#include "cnotcalc/constructions.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace cnotcalc;

namespace {

Circuit cnot2() {
    Circuit c(2);
    c.cnot(0, 1);
    return c;
}

BitVec bits(const char *s) { return BitVec::from_string(s); }

AffineRelation graph_from(size_t n, size_t m, std::initializer_list<std::pair<const char *, const char *>> list) {
    oracle::PointSet pts;
    for (auto [x, y] : list) {
        pts.emplace(bits(x), bits(y));
    }
    return oracle::relation_from_points(n, m, pts);
}

}  // namespace

TEST(circuit, validate) {
    ASSERT_FALSE(cnot2().validate().has_value());
    auto bad = Circuit::from_gates(1, {Gate::cnot(0, 1)}).validate();
    ASSERT_TRUE(bad.has_value());
    ASSERT_EQ(bad->gate_index, 0u);
    Circuit cut = Circuit::from_gates(0, {Gate::init1(0), Gate::post1(0)});
    ASSERT_FALSE(cut.validate().has_value());
    ASSERT_EQ(cut.n_out(), 0u);
    auto late = Circuit::from_gates(2, {Gate::cnot(0, 1), Gate::post1(1), Gate::swap(0, 1)}).validate();
    ASSERT_EQ(late->gate_index, 2u);
    ASSERT_TRUE(Circuit::from_gates(2, {Gate::cnot(1, 1)}).validate().has_value());
    ASSERT_TRUE(Circuit::from_gates(1, {Gate::init1(2)}).validate().has_value());
    ASSERT_THROW(Circuit(1).cnot(0, 1), CircuitError);
    try {
        Circuit::from_gates(1, {Gate::swap(0, 0)}).require_valid();
        FAIL();
    } catch (const CircuitError &e) {
        ASSERT_EQ(e.gate_index(), 0u);
    }
}

TEST(circuit, macros_expand) {
    Circuit c(1);
    c.init0(0).post0(1).not_gate(0);
    std::vector<Gate> expected = {Gate::init1(0), Gate::init1(0), Gate::cnot(0, 1), Gate::post1(0),
                                  Gate::init1(1), Gate::cnot(1, 2), Gate::post1(1), Gate::post1(1),
                                  Gate::init1(0), Gate::cnot(0, 1), Gate::post1(0)};
    ASSERT_EQ(c.gates(), expected);
    ASSERT_EQ(eval_state(c, bits("1")), std::nullopt);
    ASSERT_EQ(eval_state(c, bits("0")), bits("1"));
}

TEST(circuit, compose_and_tensor) {
    Circuit c = cnot2();
    ASSERT_EQ(compose_circ(Circuit(2), c), c);
    ASSERT_THROW(compose_circ(Circuit(1), c), CircuitError);
    ASSERT_EQ(semantics(tensor_circ(omega(), omega())), semantics(omega()));
    Circuit one(0);
    one.init1(0);
    Circuit t = tensor_circ(Circuit(1), one);
    ASSERT_EQ(t.n_in(), 1u);
    ASSERT_EQ(t.n_out(), 2u);
    ASSERT_EQ(eval_state(t, bits("0")), bits("01"));
    ASSERT_EQ(eval_state(t, bits("1")), bits("11"));
    // d's wires sit above c's whatever c does to its width.
    Circuit post(1);
    post.post1(0);
    Circuit u = tensor_circ(post, cnot2());
    ASSERT_EQ(u.gates(), (std::vector<Gate>{Gate::post1(0), Gate::cnot(0, 1)}));
    ASSERT_EQ(eval_state(u, bits("110")), bits("11"));
}

TEST(circuit, dagger) {
    ASSERT_EQ(dagger_circ(cnot2()), cnot2());
    Circuit one(0);
    one.init1(0);
    Circuit eff(1);
    eff.post1(0);
    ASSERT_EQ(dagger_circ(one), eff);
    ASSERT_EQ(dagger_circ(fanout(1)), fanin(1));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; i++) {
        Circuit c = random_circuit(rng, {rng() % 5, 25, 8});
        ASSERT_EQ(dagger_circ(dagger_circ(c)), c);
        ASSERT_EQ(semantics(dagger_circ(c)), dagger(semantics(c)));
        ASSERT_FALSE(dagger_circ(c).validate().has_value());
    }
}

TEST(circuit, eval_state_examples) {
    ASSERT_EQ(eval_state(cnot2(), bits("10")), bits("11"));
    ASSERT_EQ(eval_state(omega(), BitVec(0)), std::nullopt);
    ASSERT_EQ(eval_state(hat(bits("10")), BitVec(0)), bits("10"));
    ASSERT_THROW(eval_state(cnot2(), bits("1")), std::invalid_argument);
}

TEST(circuit, semantics_examples) {
    Circuit twice(2);
    twice.cnot(0, 1).cnot(0, 1);
    ASSERT_EQ(semantics(twice), AffineRelation::identity(2));
    ASSERT_EQ(semantics(omega()), AffineRelation::empty(0, 0));
    ASSERT_EQ(semantics(fanout(1)), graph_from(1, 2, {{"0", "00"}, {"1", "11"}}));
}

TEST(circuit, equal_examples) {
    Circuit lhs(2);
    lhs.cnot(0, 1).cnot(1, 0).cnot(0, 1);
    Circuit rhs(2);
    rhs.swap(0, 1);
    ASSERT_TRUE(equal_circ(lhs, rhs));
    Circuit n(1);
    n.not_gate(0);
    ASSERT_FALSE(equal_circ(Circuit(1), n));
    ASSERT_THROW(equal_circ(Circuit(1), Circuit(2)), CircuitError);
}

TEST(circuit, fanout_and_fanin) {
    ASSERT_TRUE(fanout(0).empty());
    ASSERT_EQ(fanout(0).n_in(), 0u);
    for (size_t n = 0; n <= 4; n++) {
        Circuit d = fanout(n);
        ASSERT_EQ(d.n_in(), n);
        ASSERT_EQ(d.n_out(), 2 * n);
        oracle::PointSet expected;
        for (const BitVec &x : oracle::all_vectors(n)) {
            expected.emplace(x, x.concat(x));
        }
        ASSERT_EQ(oracle::circuit_points(d), expected);
        ASSERT_EQ(semantics(compose_circ(d, fanin(n))), AffineRelation::identity(n));
    }
}

TEST(circuit, omega_family) {
    ASSERT_EQ(omega().gates(),
              (std::vector<Gate>{Gate::init1(0), Gate::init1(1), Gate::cnot(0, 1), Gate::post1(0), Gate::post1(0)}));
    for (size_t n = 0; n < 3; n++) {
        for (size_t m = 0; m < 3; m++) {
            ASSERT_EQ(semantics(omega_nm(n, m)), AffineRelation::empty(n, m));
        }
    }
    ASSERT_TRUE(equal_circ(tensor_circ(omega_nm(1, 1), Circuit(1)), omega_nm(2, 2)));
    std::mt19937_64 rng(32);
    for (int i = 0; i < 50; i++) {
        Circuit h = random_circuit(rng, {rng() % 4, 20, 6});
        ASSERT_TRUE(equal_circ(compose_circ(h, omega_nm(h.n_out(), 2)), omega_nm(h.n_in(), 2)));
    }
}

TEST(circuit, plus_map) {
    ASSERT_EQ(eval_state(plus_map(1), bits("110")), bits("110"));
    ASSERT_EQ(eval_state(plus_map(1), bits("100")), bits("101"));
    for (size_t n = 0; n <= 3; n++) {
        ASSERT_TRUE(semantics(plus_map(n)).is_total());
        for (const BitVec &v : oracle::all_vectors(3 * n)) {
            BitVec a = v.slice(0, n), b = v.slice(n, 2 * n), c = v.slice(2 * n, 3 * n);
            ASSERT_EQ(eval_state(plus_map(n), v), a.concat(b).concat(a ^ b ^ c));
        }
    }
}

TEST(circuit, hat) {
    ASSERT_EQ(hat(BitVec(0)), Circuit(0));
    Circuit one(0);
    one.init1(0);
    ASSERT_EQ(hat(bits("1")), one);
    ASSERT_EQ(eval_state(hat(bits("011")), BitVec(0)), bits("011"));
    for (size_t n = 0; n <= 4; n++) {
        for (const BitVec &v : oracle::all_vectors(n)) {
            ASSERT_EQ(eval_state(hat(v), BitVec(0)), v);
            ASSERT_TRUE(semantics(hat(v)).is_total());
        }
    }
}

TEST(circuit, swap_block_and_literal) {
    for (size_t n = 1; n <= 4; n++) {
        ASSERT_EQ(semantics(swap_block(0, n)), AffineRelation::identity(n));
        for (size_t i = 1; i <= n; i++) {
            Circuit sb = swap_block(i, n);
            for (const BitVec &x : oracle::all_vectors(n)) {
                BitVec y = *eval_state(sb, x);
                ASSERT_EQ(y[0], x[i - 1]);
            }
            Circuit l = literal(i, n);
            ASSERT_EQ(semantics(compose_circ(l, l)), AffineRelation::identity(n + 1));
            for (const BitVec &x : oracle::all_vectors(n + 1)) {
                BitVec expected = x;
                expected.set(0, x[0] ^ x[i]);
                ASSERT_EQ(eval_state(l, x), expected);
            }
        }
    }
    ASSERT_EQ(eval_state(literal(1, 2), bits("010")), bits("110"));
    ASSERT_THROW(literal(0, 2), std::out_of_range);
    ASSERT_THROW(literal(3, 2), std::out_of_range);
    ASSERT_THROW(swap_block(3, 2), std::out_of_range);
}

TEST(circuit, clauses) {
    for (size_t n = 0; n <= 3; n++) {
        ASSERT_TRUE(equal_circ(clause_circuit({}, false, n), Circuit(n)));
        ASSERT_TRUE(equal_circ(clause_circuit({}, true, n), omega_nm(n, n)));
    }
    Circuit c = clause_circuit({0, 2}, true, 3);
    oracle::PointSet expected;
    for (const BitVec &x : oracle::all_vectors(3)) {
        if (x[0] ^ x[2]) {
            expected.emplace(x, x);
        }
    }
    ASSERT_EQ(oracle::circuit_points(c), expected);
    ASSERT_EQ(semantics(c), oracle::relation_from_points(3, 3, expected));
    ASSERT_THROW(clause_circuit({3}, false, 3), std::out_of_range);
}

TEST(circuit, latchable) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; i++) {
        Circuit c = random_circuit(rng, {rng() % 4, 20, 6});
        ASSERT_TRUE(is_latchable(compose_circ(c, dagger_circ(c))));
    }
    for (size_t n = 0; n <= 3; n++) {
        ASSERT_TRUE(is_latchable(Circuit(n)));
    }
    Circuit n(1);
    n.not_gate(0);
    ASSERT_FALSE(is_latchable(n));
    ASSERT_THROW(is_latchable(fanout(1)), CircuitError);
}

TEST(circuit, permutation_circuit) {
    std::vector<size_t> perm = {2, 0, 3, 1};
    Circuit p = permutation_circuit(perm);
    ASSERT_EQ(semantics(p), AffineRelation::permutation(perm));
    for (const BitVec &x : oracle::all_vectors(4)) {
        BitVec y = *eval_state(p, x);
        for (size_t j = 0; j < 4; j++) {
            ASSERT_EQ(y[j], x[perm[j]]);
        }
    }
}

TEST(circuit, random_circuits_are_valid) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; i++) {
        RandomCircuitOptions opts{rng() % 7, rng() % 41, 10};
        Circuit c = random_circuit(rng, opts);
        ASSERT_FALSE(c.validate().has_value());
        ASSERT_EQ(c.gates().size(), opts.depth);
        ASSERT_LE(c.width(), 10u);
    }
    std::mt19937_64 a(5), b(5);
    ASSERT_EQ(random_circuit(a, {}), random_circuit(b, {}));
}

TEST(circuit, oracle_agreement) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 300; i++) {
        Circuit c = random_circuit(rng, {rng() % 7, rng() % 41, 10});
        AffineRelation r = semantics(c);
        ASSERT_TRUE(r.is_partial_iso());
        ASSERT_EQ(r, semantics_by_composition(c));
        ASSERT_EQ(r, oracle::circuit_relation(c));
        for (const BitVec &x : oracle::all_vectors(c.n_in())) {
            ASSERT_EQ(eval_state(c, x), r.apply(x));
        }
    }
}

TEST(circuit, functoriality) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 200; i++) {
        Circuit c = random_circuit(rng, {rng() % 5, 20, 7});
        Circuit d = random_circuit(rng, {c.n_out(), 20, 7});
        Circuit e = random_circuit(rng, {rng() % 4, 15, 6});
        ASSERT_EQ(semantics(compose_circ(c, d)), compose(semantics(c), semantics(d)));
        ASSERT_EQ(semantics(tensor_circ(c, e)), tensor(semantics(c), semantics(e)));
    }
}

TEST(circuit, inverse_laws) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; i++) {
        Circuit f = random_circuit(rng, {rng() % 6, 30, 8});
        Circuit g = random_circuit(rng, {f.n_in(), 30, 8});
        Circuit ff = compose_circ(f, dagger_circ(f));
        Circuit gg = compose_circ(g, dagger_circ(g));
        ASSERT_TRUE(equal_circ(compose_circ(ff, f), f));
        ASSERT_TRUE(equal_circ(compose_circ(ff, gg), compose_circ(gg, ff)));
    }
}

TEST(circuit, total_or_degenerate) {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 300; i++) {
        Circuit c = random_circuit(rng, {0, rng() % 41, 10});
        AffineRelation r = semantics(c);
        ASSERT_TRUE(r.is_total() || r.is_empty());
    }
}

TEST(circuit, post_free_circuits_map_basis_states_to_basis_states) {
    std::mt19937_64 rng(39);
    for (int i = 0; i < 200; i++) {
        Circuit c = random_circuit(rng, {rng() % 5, 25, 9});
        std::vector<Gate> kept;
        for (const Gate &g : c.gates()) {
            if (g.kind != GateKind::Post1) {
                kept.push_back(g);
            }
        }
        Circuit np = Circuit::from_gates(c.n_in(), kept);
        if (np.validate()) {
            continue;
        }
        for (const BitVec &x : oracle::all_vectors(np.n_in())) {
            auto y = eval_state(compose_circ(hat(x), np), BitVec(0));
            ASSERT_TRUE(y.has_value());
            ASSERT_TRUE(semantics(compose_circ(hat(x), np)).is_total());
        }
    }
}

TEST(circuit, absorption) {
    std::mt19937_64 rng(40);
    int empties = 0;
    for (int i = 0; i < 300; i++) {
        Circuit c = random_circuit(rng, {rng() % 4, 20, 7});
        if (!semantics(c).is_empty()) {
            continue;
        }
        empties++;
        Circuit d = random_circuit(rng, {c.n_out(), 15, 7});
        Circuit e = random_circuit(rng, {rng() % 3, 10, 5});
        ASSERT_TRUE(semantics(compose_circ(c, d)).is_empty());
        ASSERT_TRUE(semantics(tensor_circ(c, e)).is_empty());
        ASSERT_TRUE(semantics(tensor_circ(e, c)).is_empty());
    }
    ASSERT_GT(empties, 10);
}
