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

#include "cnotcalc/rewrite.h"

#include <chrono>
#include <random>

#include "cnotcalc/constructions.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace cnotcalc;

TEST(rewrite, axiom_shapes) {
    ASSERT_EQ(axioms().size(), 11u);
    const RewriteRule &cnt2 = axiom("CNT2");
    ASSERT_EQ(cnt2.lhs.gates(), (std::vector<Gate>{Gate::cnot(0, 1), Gate::cnot(0, 1)}));
    ASSERT_EQ(cnt2.rhs, Circuit(2));
    const RewriteRule &cnt6 = axiom("CNT6");
    ASSERT_EQ(cnt6.lhs.gates(), (std::vector<Gate>{Gate::init1(0), Gate::post1(0)}));
    ASSERT_EQ(cnt6.rhs, Circuit(0));
    const RewriteRule &cnt3 = axiom("CNT3");
    ASSERT_EQ(cnt3.lhs.n_in(), 3u);
    ASSERT_EQ(cnt3.lhs.gates(), (std::vector<Gate>{Gate::cnot(1, 0), Gate::cnot(1, 2)}));
    ASSERT_EQ(cnt3.rhs.gates(), (std::vector<Gate>{Gate::cnot(1, 2), Gate::cnot(1, 0)}));
    ASSERT_THROW(axiom("CNT10"), RewriteError);
    ASSERT_THROW(lemma_fixture("nope"), RewriteError);
    for (const RewriteRule &r : axioms()) {
        ASSERT_EQ(r.lhs.n_in(), r.rhs.n_in()) << r.name;
        ASSERT_EQ(r.lhs.n_out(), r.rhs.n_out()) << r.name;
        ASSERT_LE(r.lhs.width_trace().back(), 3u);
    }
}

TEST(rewrite, cnt1_and_cnt9_examples) {
    ASSERT_TRUE(equal_circ(axiom("CNT1").lhs, axiom("CNT1").rhs));
    ASSERT_TRUE(equal_circ(axiom("CNT9").lhs, axiom("CNT9").rhs));
    for (const RewriteRule &r : axioms()) {
        ASSERT_EQ(oracle::circuit_points(r.lhs), oracle::circuit_points(r.rhs)) << r.name;
    }
}

TEST(rewrite, lemma_examples) {
    const RewriteRule &absorb = lemma_fixture("omega-absorb");
    ASSERT_EQ(absorb.lhs, tensor_circ(omega(), omega()));
    ASSERT_EQ(absorb.rhs, omega());
    const RewriteRule &zero = lemma_fixture("zero-cancel");
    Circuit expected(0);
    expected.init0(0).post0(0);
    ASSERT_EQ(zero.lhs, expected);
    ASSERT_EQ(zero.rhs, Circuit(0));
    const RewriteRule &idem = lemma_fixture("clause-idem");
    ASSERT_EQ(idem.lhs, compose_circ(idem.rhs, idem.rhs));
    ASSERT_TRUE(equal_circ(idem.lhs, idem.rhs));
}

TEST(rewrite, verify_all_passes_quickly) {
    auto start = std::chrono::steady_clock::now();
    auto report = verify_all();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ASSERT_EQ(report.size(), axioms().size() + lemma_fixtures().size());
    for (const RuleCheck &r : report) {
        EXPECT_TRUE(r.passed()) << r.name;
    }
    ASSERT_LT(secs, 1.0);
    for (const RewriteRule &r : structural_rules()) {
        EXPECT_TRUE(check_rule(r).passed()) << r.name;
    }
}

TEST(rewrite, corrupted_rule_fails) {
    RewriteRule bad = axiom("CNT8");
    bad.rhs = Circuit::from_gates(3, {Gate::cnot(1, 2), Gate::cnot(0, 1)});
    RuleCheck r = check_rule(bad);
    ASSERT_FALSE(r.passed());
    ASSERT_FALSE(r.semantic_equal);
    ASSERT_FALSE(r.state_map_equal);
}

TEST(rewrite, apply_direct_match) {
    Circuit c(3);
    c.cnot(2, 0).cnot(0, 1).cnot(0, 1).cnot(1, 2);
    auto out = apply_at(c, axiom("CNT2"), 1, Direction::LeftToRight);
    ASSERT_TRUE(out.has_value());
    ASSERT_EQ(out->gates(), (std::vector<Gate>{Gate::cnot(2, 0), Gate::cnot(1, 2)}));
    ASSERT_FALSE(apply_at(c, axiom("CNT2"), 0, Direction::LeftToRight).has_value());
    ASSERT_FALSE(apply_at(c, axiom("CNT2"), 3, Direction::LeftToRight).has_value());
    ASSERT_FALSE(apply_at(c, axiom("CNT2"), 9, Direction::LeftToRight).has_value());
}

TEST(rewrite, apply_relabels_wires) {
    Circuit c(4);
    c.cnot(2, 0).cnot(2, 3);
    auto out = apply_at(c, axiom("CNT3"), 0, Direction::LeftToRight);
    ASSERT_TRUE(out.has_value());
    ASSERT_EQ(out->gates(), (std::vector<Gate>{Gate::cnot(2, 3), Gate::cnot(2, 0)}));
    Circuit three(2);
    three.cnot(1, 0).cnot(0, 1).cnot(1, 0);
    auto sw = apply_at(three, axiom("CNT1"), 0, Direction::LeftToRight);
    ASSERT_EQ(sw->gates(), (std::vector<Gate>{Gate::swap(0, 1)}));
}

TEST(rewrite, apply_with_explicit_wires) {
    Circuit c(3);
    auto out = apply_at(c, axiom("CNT2"), 0, Direction::RightToLeft, {2, 0});
    ASSERT_EQ(out->gates(), (std::vector<Gate>{Gate::cnot(2, 0), Gate::cnot(2, 0)}));
    auto lowest = apply_at(c, axiom("CNT2"), 0, Direction::RightToLeft);
    ASSERT_EQ(lowest->gates(), (std::vector<Gate>{Gate::cnot(0, 1), Gate::cnot(0, 1)}));
    ASSERT_THROW(apply_at(c, axiom("CNT2"), 0, Direction::RightToLeft, {1}), RewriteError);
    ASSERT_THROW(apply_at(c, axiom("CNT2"), 0, Direction::RightToLeft, {1, 1}), RewriteError);
    auto cut = apply_at(Circuit(0), axiom("CNT6"), 0, Direction::RightToLeft);
    ASSERT_EQ(cut->gates(), (std::vector<Gate>{Gate::init1(0), Gate::post1(0)}));
}

TEST(rewrite, omega_derivation_replays) {
    auto chain = replay(tensor_circ(omega(), omega()), omega_absorb_derivation());
    ASSERT_EQ(chain.back(), omega());
    for (const Circuit &c : chain) {
        ASSERT_FALSE(c.validate().has_value());
        ASSERT_TRUE(equal_circ(c, chain.front()));
    }
    auto broken = omega_absorb_derivation();
    broken[3].offset = 7;
    ASSERT_THROW(replay(tensor_circ(omega(), omega()), broken), RewriteError);
}

TEST(rewrite, apply_is_sound_on_random_circuits) {
    std::mt19937_64 rng(41);
    std::vector<const RewriteRule *> rules;
    for (const auto *list : {&axioms(), &lemma_fixtures(), &structural_rules()}) {
        for (const RewriteRule &r : *list) {
            rules.push_back(&r);
        }
    }
    int applied = 0;
    for (int trial = 0; trial < 3000; trial++) {
        Circuit c = random_circuit(rng, {rng() % 5, 12, 7});
        const RewriteRule &r = *rules[rng() % rules.size()];
        Direction d = rng() % 2 ? Direction::LeftToRight : Direction::RightToLeft;
        size_t offset = rng() % (c.gates().size() + 1);
        if (auto out = apply_at(c, r, offset, d)) {
            applied++;
            ASSERT_TRUE(equal_circ(*out, c)) << r.name;
        }
    }
    ASSERT_GT(applied, 50);
}

TEST(rewrite, rules_are_horizontally_symmetric) {
    for (const auto *list : {&axioms(), &lemma_fixtures(), &structural_rules()}) {
        for (const RewriteRule &r : *list) {
            RewriteRule flipped{r.name, dagger_circ(r.lhs), dagger_circ(r.rhs)};
            ASSERT_TRUE(check_rule(flipped).passed()) << r.name;
        }
    }
}

TEST(rewrite, find_rule_searches_all_lists) {
    ASSERT_EQ(find_rule("CNT5").name, "CNT5");
    ASSERT_EQ(find_rule("latch-witness").name, "latch-witness");
    ASSERT_EQ(find_rule("ICH.post-init").name, "ICH.post-init");
    ASSERT_THROW(find_rule("zzz"), RewriteError);
}
