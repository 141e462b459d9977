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

#include "cnotcalc/laws.h"

#include <algorithm>
#include <random>

#include "cnotcalc/constructions.h"
#include "cnotcalc/normalize.h"
#include "cnotcalc/synth.h"
#include "cnotcalc/text_format.h"

namespace cnotcalc {

namespace {

std::mt19937_64 stream(uint64_t seed, uint64_t tag) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(tag),
                      static_cast<uint32_t>(tag >> 32)};
    return std::mt19937_64(seq);
}

void check(LawResult &r, bool ok, const std::string &what) {
    r.cases++;
    if (!ok && !r.failure) {
        r.failure = what;
    }
}

std::string show(const std::optional<BitVec> &v) { return v ? "'" + v->str() + "'" : "undefined"; }

AffineRelation sem(const Circuit &c) { return semantics(c); }

Circuit id(size_t n) { return Circuit(n); }

uint64_t to_integer(const BitVec &v) {
    uint64_t out = 0;
    for (size_t i = 0; i < v.size(); i++) {
        out |= static_cast<uint64_t>(v[i]) << i;
    }
    return out;
}

}  // namespace

std::vector<LawResult> copy_laws(size_t max_n, uint64_t seed) {
    LawResult natural{"fanout naturality"}, cocommutative{"fanout cocommutativity"},
        coassociative{"fanout coassociativity"}, separable{"separability"}, frobenius{"semi-Frobenius"},
        uniform{"uniform copying"};
    std::mt19937_64 rng = stream(seed, 1);
    for (size_t n = 1; n <= max_n; n++) {
        std::string at = " at n=" + std::to_string(n);
        Circuit d = fanout(n), e = fanin(n);

        for (int t = 0; t < 20; t++) {
            Circuit f = random_circuit(rng, {n, static_cast<size_t>(rng() % 13), 6});
            size_t m = f.n_out();
            check(natural,
                  compose(sem(f), sem(fanout(m))) == compose(sem(d), sem(tensor_circ(f, f))),
                  "naturality fails for\n" + print_circuit(f, "f"));
        }

        std::vector<size_t> flip(2 * n);
        for (size_t j = 0; j < 2 * n; j++) {
            flip[j] = (j + n) % (2 * n);
        }
        check(cocommutative, compose(sem(d), AffineRelation::permutation(flip)) == sem(d), "cocommutativity" + at);

        check(coassociative,
              compose(sem(d), sem(tensor_circ(d, id(n)))) == compose(sem(d), sem(tensor_circ(id(n), d))),
              "coassociativity" + at);

        check(separable, compose(sem(d), sem(e)) == AffineRelation::identity(n), "separability" + at);

        AffineRelation left = compose(sem(tensor_circ(d, id(n))), sem(tensor_circ(id(n), e)));
        AffineRelation middle = compose(sem(e), sem(d));
        AffineRelation right = compose(sem(tensor_circ(id(n), d)), sem(tensor_circ(e, id(n))));
        check(frobenius, left == middle && middle == right, "semi-Frobenius" + at);

        for (size_t a = 0; a <= n; a++) {
            size_t b = n - a;
            // (A, A, B, B) -> (A, B, A, B)
            std::vector<size_t> ex(2 * n);
            for (size_t j = 0; j < a; j++) {
                ex[j] = j;
                ex[a + b + j] = a + j;
            }
            for (size_t j = 0; j < b; j++) {
                ex[a + j] = 2 * a + j;
                ex[2 * a + b + j] = 2 * a + b + j;
            }
            check(uniform,
                  compose(sem(tensor_circ(fanout(a), fanout(b))), AffineRelation::permutation(ex)) == sem(d),
                  "uniform copying at a=" + std::to_string(a) + ", b=" + std::to_string(b));
        }
    }
    return {natural, cocommutative, coassociative, separable, frobenius, uniform};
}

std::vector<LawResult> torsor_laws(size_t max_n) {
    LawResult assoc{"para-associativity"}, ident{"para-identity"}, comm{"commutativity"}, char2{"characteristic 2"};
    for (size_t n = 1; n <= max_n; n++) {
        size_t size = size_t{1} << n;
        Circuit plus = plus_map(n);
        std::vector<uint64_t> p(size * size * size);
        for (uint64_t a = 0; a < size; a++) {
            for (uint64_t b = 0; b < size; b++) {
                for (uint64_t c = 0; c < size; c++) {
                    BitVec in = BitVec::from_integer(a, n).concat(BitVec::from_integer(b, n)).concat(
                        BitVec::from_integer(c, n));
                    std::optional<BitVec> out = eval_state(plus, in);
                    p[(a * size + b) * size + c] = out ? to_integer(out->slice(2 * n, 3 * n)) : size;
                }
            }
        }
        auto op = [&](uint64_t a, uint64_t b, uint64_t c) { return p[(a * size + b) * size + c]; };
        std::string at = " at n=" + std::to_string(n);
        for (uint64_t a = 0; a < size; a++) {
            for (uint64_t b = 0; b < size; b++) {
                check(ident, op(a, b, b) == a && op(b, b, a) == a, "para-identity" + at);
                check(char2, op(a, b, a) == b, "characteristic 2" + at);
                for (uint64_t c = 0; c < size; c++) {
                    check(comm, op(a, b, c) == op(c, b, a), "commutativity" + at);
                    for (uint64_t d = 0; d < size; d++) {
                        for (uint64_t e = 0; e < size; e++) {
                            uint64_t lhs = op(op(a, b, c), d, e);
                            check(assoc, lhs == op(a, b, op(c, d, e)) && lhs == op(a, op(d, c, b), e),
                                  "para-associativity" + at);
                        }
                    }
                }
            }
        }
    }
    return {assoc, ident, comm, char2};
}

LawResult plus_naturality(uint64_t seed, size_t trials) {
    LawResult r{"plus naturality"};
    std::mt19937_64 rng = stream(seed, 2);
    for (size_t t = 0; t < trials; t++) {
        size_t n = 1 + rng() % 3;
        Circuit f = random_circuit(rng, {n, static_cast<size_t>(rng() % 13), 5});
        Circuit fff = tensor_circ(tensor_circ(f, f), f);
        check(r, compose(sem(fff), sem(plus_map(f.n_out()))) == compose(sem(plus_map(n)), sem(fff)),
              "plus naturality fails at trial " + std::to_string(t));
    }
    return r;
}

std::vector<LawResult> inverse_laws(uint64_t seed, size_t trials) {
    LawResult regular{"f f' f = f"}, commute{"restrictions commute"};
    std::mt19937_64 rng = stream(seed, 3);
    for (size_t t = 0; t < trials; t++) {
        size_t n = rng() % 6;
        Circuit f = random_circuit(rng, {n, static_cast<size_t>(rng() % 31), 9});
        Circuit g = random_circuit(rng, {n, static_cast<size_t>(rng() % 31), 9});
        Circuit ff = compose_circ(f, dagger_circ(f)), gg = compose_circ(g, dagger_circ(g));
        std::string at = " at trial " + std::to_string(t);
        check(regular, equal_circ(compose_circ(ff, f), f), "f f' f != f" + at);
        check(commute, equal_circ(compose_circ(ff, gg), compose_circ(gg, ff)), "f f' g g' != g g' f f'" + at);
    }
    return {regular, commute};
}

LawResult oracle_agreement(uint64_t seed, size_t trials, size_t max_inputs, size_t max_depth) {
    LawResult r{"oracle agreement"};
    std::mt19937_64 rng = stream(seed, 4);
    for (size_t t = 0; t < trials; t++) {
        size_t n = rng() % (max_inputs + 1);
        Circuit c = random_circuit(rng, {n, static_cast<size_t>(rng() % (max_depth + 1)), max_inputs + 4});
        AffineRelation rel = semantics(c);
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            BitVec in = BitVec::from_integer(x, n);
            std::optional<BitVec> direct = eval_state(c, in), via = rel.apply(in);
            check(r, direct == via,
                  "trial " + std::to_string(t) + " input '" + in.str() + "': " + show(direct) + " vs " + show(via));
        }
    }
    return r;
}

LawResult total_or_degenerate(uint64_t seed, size_t trials) {
    LawResult r{"total or degenerate"};
    std::mt19937_64 rng = stream(seed, 5);
    for (size_t t = 0; t < trials; t++) {
        Circuit c = random_circuit(rng, {0, static_cast<size_t>(rng() % 41), 8});
        AffineRelation rel = semantics(c);
        check(r, rel.is_total() || rel.is_empty(), "partial state at trial " + std::to_string(t));
    }
    return r;
}

LawResult synth_round_trip(uint64_t seed, size_t trials, size_t max_inputs, size_t max_depth) {
    LawResult r{"synthesis round trip"};
    std::mt19937_64 rng = stream(seed, 6);
    for (size_t t = 0; t < trials; t++) {
        size_t n = rng() % (max_inputs + 1);
        Circuit c = random_circuit(rng, {n, static_cast<size_t>(rng() % (max_depth + 1)), max_inputs + 4});
        AffineRelation rel = semantics(c);
        Circuit s = synth(rel);
        std::string at = " at trial " + std::to_string(t);
        check(r, semantics(s) == rel, "synthesized semantics differ" + at);
        check(r, synth(semantics(s)) == s, "synthesis is not stable" + at);
    }
    return r;
}

LawResult clause_mixing(uint64_t seed, size_t trials, size_t max_vars) {
    LawResult r{"clause mixing"};
    std::mt19937_64 rng = stream(seed, 7);
    for (size_t t = 0; t < trials; t++) {
        size_t n = 1 + rng() % max_vars;
        GF2Matrix sys(0, n + 1);
        size_t rows = rng() % (n + 2);
        for (size_t i = 0; i < rows; i++) {
            BitVec row(n + 1);
            for (size_t j = 0; j <= n; j++) {
                row.set(j, rng() & 1);
            }
            sys.append_row(row);
        }
        ClausalForm a = ClausalForm::from_system(sys), b = a;
        for (int k = 0; k < 12 && b.clauses.size() >= 2; k++) {
            size_t s = rng() % b.clauses.size(), d = rng() % b.clauses.size();
            if (s != d) {
                apply_step(b, {EliminationStep::Add, s, d});
            }
        }
        std::shuffle(b.clauses.begin(), b.clauses.end(), rng);
        check(r, normalize_idempotent(clausal_to_circuit(a)) == normalize_idempotent(clausal_to_circuit(b)),
              "different normal forms at trial " + std::to_string(t));
    }
    return r;
}

LawResult worked_elimination() {
    LawResult r{"worked elimination"};
    ClausalForm in{3, {{{0, 2}, true}, {{0, 1}, false}}};
    GF2Matrix got = gaussian_eliminate(in).to_system();
    check(r, got == GF2Matrix{{1, 0, 1, 1}, {0, 1, 1, 1}}, "eliminated system is\n" + got.str());
    return r;
}

LawResult worked_synthesis() {
    LawResult r{"worked synthesis"};
    AffineMapSpec f{GF2Matrix{{1, 0, 1}, {1, 0, 0}}, BitVec{0, 1}};
    Circuit expected(3);
    expected.init0(3).init1(4).cnot(0, 3).cnot(0, 4).cnot(2, 3);
    check(r, synth_total_graph(f) == expected, "graph circuit differs from the reference");
    check(r, equal_circ(synth(semantics(expected)), expected), "synthesized circuit differs semantically");
    for (uint64_t x = 0; x < 8; x++) {
        BitVec in = BitVec::from_integer(x, 3);
        std::optional<BitVec> out = eval_state(expected, in);
        check(r, out && out->slice(3, 5) == f.apply(in), "wrong output on '" + in.str() + "'");
    }
    return r;
}

std::optional<std::string> fuzz_check(const Circuit &c) {
    try {
        AffineRelation rel = semantics(c);
        for (uint64_t x = 0; x < (uint64_t{1} << c.n_in()); x++) {
            BitVec in = BitVec::from_integer(x, c.n_in());
            std::optional<BitVec> direct = eval_state(c, in), via = rel.apply(in);
            if (direct != via) {
                return "oracle mismatch on input '" + in.str() + "': evaluation gives " + show(direct) +
                       ", semantics gives " + show(via);
            }
        }
        if (semantics(synth(rel)) != rel) {
            return std::string("synthesis round trip changes the semantics");
        }
    } catch (const std::exception &e) {
        return std::string("exception: ") + e.what();
    }
    return std::nullopt;
}

Circuit fuzz_circuit(uint64_t seed, size_t trial, size_t wires, size_t depth) {
    std::mt19937_64 rng = stream(seed, trial + 1000);
    return random_circuit(rng, {static_cast<size_t>(rng() % (wires + 1)), depth, wires + 4});
}

}  // namespace cnotcalc
