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

#include <algorithm>
#include <functional>
#include <map>

#include "cnotcalc/constructions.h"

namespace cnotcalc {

namespace {

Gate cx(size_t c, size_t t) { return Gate::cnot(c, t); }
Gate sw(size_t a, size_t b) { return Gate::swap(a, b); }
Gate i1(size_t p) { return Gate::init1(p); }
Gate p1(size_t p) { return Gate::post1(p); }

Circuit circ(size_t n_in, std::vector<Gate> gates) {
    Circuit c = Circuit::from_gates(n_in, std::move(gates));
    c.require_valid();
    return c;
}

Circuit seq(std::initializer_list<Circuit> parts) {
    auto it = parts.begin();
    Circuit out = *it;
    for (++it; it != parts.end(); ++it) {
        out = compose_circ(out, *it);
    }
    return out;
}

std::vector<RewriteRule> make_axioms() {
    std::vector<RewriteRule> r;
    r.push_back({"CNT1", circ(2, {cx(0, 1), cx(1, 0), cx(0, 1)}), circ(2, {sw(0, 1)})});
    r.push_back({"CNT2", circ(2, {cx(0, 1), cx(0, 1)}), circ(2, {})});
    r.push_back({"CNT3", circ(3, {cx(1, 0), cx(1, 2)}), circ(3, {cx(1, 2), cx(1, 0)})});
    r.push_back({"CNT4a", circ(1, {i1(0), cx(0, 1)}), circ(1, {i1(0), cx(0, 1), p1(0), i1(0)})});
    r.push_back({"CNT4b", circ(2, {cx(0, 1), p1(0)}), circ(2, {p1(0), i1(0), cx(0, 1), p1(0)})});
    r.push_back({"CNT5", circ(3, {cx(0, 1), cx(2, 1)}), circ(3, {cx(2, 1), cx(0, 1)})});
    r.push_back({"CNT6", circ(0, {i1(0), p1(0)}), circ(0, {})});
    r.push_back({"CNT7a", circ(1, {i1(0), i1(0), cx(0, 1), cx(1, 2), p1(0)}),
                 circ(1, {i1(0), i1(0), cx(0, 1), p1(0)})});
    r.push_back({"CNT7b", circ(2, {i1(0), cx(1, 2), cx(0, 1), p1(0), p1(0)}),
                 circ(2, {i1(0), cx(0, 1), p1(0), p1(0)})});
    r.push_back({"CNT8", circ(3, {cx(0, 1), cx(1, 2), cx(0, 1)}), circ(3, {cx(1, 2), cx(0, 2)})});
    r.push_back({"CNT9", circ(1, {i1(0), i1(0), cx(0, 1), p1(0), p1(0)}),
                 circ(1, {i1(0), i1(0), p1(2), cx(0, 1), i1(2), p1(0), p1(0)})});
    return r;
}

// f = P (1 (x) Q) perm (1 (x) fanin) Q°, with P = fanout (f f° (x) f) and
// Q = fanout (f° f (x) f°).
RewriteRule full_copy_rule() {
    Circuit f = circ(2, {cx(1, 0), p1(1)});
    Circuit fd = dagger_circ(f);
    size_t n = f.n_in(), m = f.n_out();
    Circuit P = compose_circ(fanout(n), tensor_circ(compose_circ(f, fd), f));
    Circuit Q = compose_circ(fanout(m), tensor_circ(compose_circ(fd, f), fd));
    // (x, fx, x) -> (fx, x, x)
    std::vector<size_t> perm;
    for (size_t j = 0; j < m; j++) {
        perm.push_back(n + j);
    }
    for (size_t j = 0; j < n; j++) {
        perm.push_back(j);
    }
    for (size_t j = 0; j < n; j++) {
        perm.push_back(n + m + j);
    }
    Circuit lhs = seq({P, tensor_circ(Circuit(n), Q), permutation_circuit(perm), tensor_circ(Circuit(m), fanin(n)),
                       dagger_circ(Q)});
    return {"full-copy", lhs, f};
}

std::vector<RewriteRule> make_lemmas() {
    std::vector<RewriteRule> r;
    Circuit cut = circ(1, {p1(0), i1(0)});
    r.push_back({"omega-absorb", tensor_circ(omega(), omega()), omega()});
    r.push_back({"omega-tensor-degen", tensor_circ(circ(2, {cx(0, 1)}), omega()), omega_nm(2, 2)});
    r.push_back({"omega-post-absorb", compose_circ(omega_nm(1, 1), fanout(1)), omega_nm(1, 2)});
    r.push_back({"omega-pre-absorb", compose_circ(fanin(1), omega_nm(1, 1)), omega_nm(2, 1)});
    r.push_back({"cnot-triple", circ(3, {cx(0, 1), cx(1, 2), cx(0, 1)}), circ(3, {cx(1, 0), cx(0, 2), cx(1, 0)})});
    {
        Circuit lhs(0);
        lhs.init0(0).post0(0);
        r.push_back({"zero-cancel", lhs, Circuit(0)});
    }
    r.push_back({"cnot-helper", circ(3, {cx(0, 1), cx(1, 2)}), circ(3, {cx(0, 2), cx(1, 2), cx(0, 1)})});
    {
        Circuit lhs(3), rhs(3);
        lhs.cnot(1, 2).not_gate(1).cnot(1, 0).not_gate(1);
        rhs.not_gate(1).cnot(1, 0).not_gate(1).cnot(1, 2);
        r.push_back({"not-commute", lhs, rhs});
    }
    {
        Circuit lhs = fanout(1), rhs(1);
        lhs.post0(1);
        rhs.post0(0).init0(0);
        r.push_back({"zero-copy", lhs, rhs});
    }
    {
        Circuit lhs = fanout(1);
        lhs.post1(1);
        r.push_back({"one-copy", lhs, cut});
    }
    {
        Circuit lhs = tensor_circ(fanin(1), Circuit(1));
        lhs.cnot(1, 0);
        Circuit rhs(3);
        rhs.cnot(2, 0).cnot(2, 1).then(tensor_circ(fanin(1), Circuit(1)));
        r.push_back({"literal-through-fanin", lhs, rhs});
    }
    r.push_back({"cut-is-clause", cut, clause_circuit({0}, true, 1)});
    {
        Circuit lhs(0);
        lhs.init0(0);
        r.push_back({"zero-init-def", lhs, circ(0, {i1(0), i1(1), cx(1, 0), p1(1)})});
    }
    {
        Circuit lhs(1), rhs(1);
        lhs.post0(0);
        rhs.not_gate(0).post1(0);
        r.push_back({"zero-post-def", lhs, rhs});
    }
    {
        Circuit lhs(0);
        lhs.init0(0).not_gate(0);
        r.push_back({"zero-not", lhs, circ(0, {i1(0)})});
    }
    r.push_back({"latch-witness", seq({fanout(1), tensor_circ(cut, Circuit(1)), fanin(1)}), cut});
    {
        Circuit c = clause_circuit({0, 2}, true, 3);
        r.push_back({"clause-idem", compose_circ(c, c), c});
    }
    r.push_back(full_copy_rule());
    return r;
}

std::vector<RewriteRule> make_structural() {
    std::vector<RewriteRule> r;
    r.push_back({"ICH.init-init", circ(0, {i1(0), i1(1)}), circ(0, {i1(0), i1(0)})});
    r.push_back({"ICH.post-post", circ(2, {p1(0), p1(0)}), circ(2, {p1(1), p1(0)})});
    r.push_back({"ICH.post-init", circ(1, {p1(0), i1(0)}), circ(1, {i1(0), p1(1)})});
    r.push_back({"ICH.cnot-post", circ(3, {cx(0, 1), p1(2)}), circ(3, {p1(2), cx(0, 1)})});
    r.push_back({"ICH.init-cnot", circ(2, {i1(0), cx(1, 2)}), circ(2, {cx(0, 1), i1(0)})});
    r.push_back({"SYM.swap-cnot", circ(2, {sw(0, 1), cx(0, 1)}), circ(2, {cx(1, 0), sw(0, 1)})});
    r.push_back({"SYM.swap-post", circ(2, {sw(0, 1), p1(0), p1(0)}), circ(2, {p1(0), p1(0)})});
    r.push_back({"SYM.init-swap", circ(0, {i1(0), i1(1), sw(0, 1)}), circ(0, {i1(0), i1(1)})});
    return r;
}

const RewriteRule &lookup(const std::vector<RewriteRule> &rules, const std::string &name, const char *what) {
    for (const RewriteRule &r : rules) {
        if (r.name == name) {
            return r;
        }
    }
    std::string known;
    for (const RewriteRule &r : rules) {
        known += known.empty() ? "" : ", ";
        known += r.name;
    }
    throw RewriteError(std::string("unknown ") + what + " '" + name + "' (known: " + known + ")");
}

// Bijective partial map between source-side and host-side wire tokens.
struct Binding {
    std::map<int, int> fwd;
    std::map<int, int> back;

    bool bind(int p, int h) {
        auto f = fwd.find(p);
        if (f != fwd.end()) {
            return f->second == h;
        }
        if (back.count(h)) {
            return false;
        }
        fwd[p] = h;
        back[h] = p;
        return true;
    }
};

struct MatchState {
    std::vector<int> pat;
    std::vector<int> host;
    int next_pat;
    int next_host;
    Binding binding;
};

// Depth-first over the orientation of each matched swap.
std::optional<MatchState> match_from(const std::vector<Gate> &src, const std::vector<Gate> &hostg, size_t offset,
                                     size_t i, MatchState s) {
    for (; i < src.size(); i++) {
        const Gate &pg = src[i];
        const Gate &hg = hostg[offset + i];
        if (pg.kind != hg.kind) {
            return std::nullopt;
        }
        switch (pg.kind) {
            case GateKind::Cnot:
                if (!s.binding.bind(s.pat[pg.a], s.host[hg.a]) || !s.binding.bind(s.pat[pg.b], s.host[hg.b])) {
                    return std::nullopt;
                }
                break;
            case GateKind::Swap: {
                MatchState crossed = s;
                std::swap(s.pat[pg.a], s.pat[pg.b]);
                std::swap(s.host[hg.a], s.host[hg.b]);
                if (s.binding.bind(s.pat[pg.b], s.host[hg.b]) && s.binding.bind(s.pat[pg.a], s.host[hg.a])) {
                    if (auto done = match_from(src, hostg, offset, i + 1, s)) {
                        return done;
                    }
                }
                std::swap(crossed.pat[pg.a], crossed.pat[pg.b]);
                std::swap(crossed.host[hg.a], crossed.host[hg.b]);
                if (crossed.binding.bind(crossed.pat[pg.b], crossed.host[hg.a]) &&
                    crossed.binding.bind(crossed.pat[pg.a], crossed.host[hg.b])) {
                    return match_from(src, hostg, offset, i + 1, std::move(crossed));
                }
                return std::nullopt;
            }
            case GateKind::Init1: {
                int pt = s.next_pat++;
                int ht = s.next_host++;
                s.binding.bind(pt, ht);
                s.pat.insert(s.pat.begin() + pg.a, pt);
                s.host.insert(s.host.begin() + hg.a, ht);
                break;
            }
            case GateKind::Post1:
                if (!s.binding.bind(s.pat[pg.a], s.host[hg.a])) {
                    return std::nullopt;
                }
                s.pat.erase(s.pat.begin() + pg.a);
                s.host.erase(s.host.begin() + hg.a);
                break;
        }
    }
    return s;
}

size_t position_of(const std::vector<int> &v, int token) {
    return static_cast<size_t>(std::find(v.begin(), v.end(), token) - v.begin());
}

}  // namespace

const std::vector<RewriteRule> &axioms() {
    static const std::vector<RewriteRule> rules = make_axioms();
    return rules;
}

const std::vector<RewriteRule> &lemma_fixtures() {
    static const std::vector<RewriteRule> rules = make_lemmas();
    return rules;
}

const std::vector<RewriteRule> &structural_rules() {
    static const std::vector<RewriteRule> rules = make_structural();
    return rules;
}

const RewriteRule &axiom(const std::string &name) { return lookup(axioms(), name, "axiom"); }

const RewriteRule &lemma_fixture(const std::string &name) { return lookup(lemma_fixtures(), name, "lemma"); }

const RewriteRule &find_rule(const std::string &name) {
    for (const auto *list : {&axioms(), &lemma_fixtures(), &structural_rules()}) {
        for (const RewriteRule &r : *list) {
            if (r.name == name) {
                return r;
            }
        }
    }
    throw RewriteError("unknown rule '" + name + "'");
}

std::optional<Circuit> apply_at(const Circuit &c, const RewriteRule &rule, size_t offset, Direction dir,
                                const std::vector<size_t> &wires) {
    c.require_valid();
    const Circuit &src = dir == Direction::LeftToRight ? rule.lhs : rule.rhs;
    const Circuit &tgt = dir == Direction::LeftToRight ? rule.rhs : rule.lhs;
    const std::vector<Gate> &hg = c.gates();
    if (offset > hg.size() || src.gates().size() > hg.size() - offset) {
        return std::nullopt;
    }
    size_t w = c.width_trace()[offset];
    size_t k = src.n_in();
    if (k > w) {
        return std::nullopt;
    }
    MatchState s;
    for (size_t i = 0; i < k; i++) {
        s.pat.push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < w; i++) {
        s.host.push_back(static_cast<int>(i));
    }
    s.next_pat = static_cast<int>(k);
    s.next_host = static_cast<int>(w);
    if (!wires.empty()) {
        if (wires.size() != k) {
            throw RewriteError("rule " + rule.name + " takes " + std::to_string(k) + " wires, got " +
                               std::to_string(wires.size()));
        }
        for (size_t i = 0; i < k; i++) {
            if (wires[i] >= w || !s.binding.bind(static_cast<int>(i), static_cast<int>(wires[i]))) {
                throw RewriteError("invalid wire list for rule " + rule.name);
            }
        }
    }
    auto matched = match_from(src.gates(), hg, offset, 0, std::move(s));
    if (!matched) {
        return std::nullopt;
    }
    MatchState &m = *matched;
    // Untouched source inputs take the lowest free host wires.
    int free_host = 0;
    for (size_t i = 0; i < k; i++) {
        int p = static_cast<int>(i);
        if (m.binding.fwd.count(p)) {
            continue;
        }
        while (m.binding.back.count(free_host)) {
            free_host++;
        }
        m.binding.bind(p, free_host);
    }

    std::vector<int> cur;
    for (size_t i = 0; i < w; i++) {
        cur.push_back(static_cast<int>(i));
    }
    std::vector<int> qw;
    for (size_t i = 0; i < k; i++) {
        qw.push_back(m.binding.fwd[static_cast<int>(i)]);
    }
    int next = m.next_host;
    std::vector<Gate> emitted;
    for (const Gate &g : tgt.gates()) {
        switch (g.kind) {
            case GateKind::Cnot:
                emitted.push_back(Gate::cnot(position_of(cur, qw[g.a]), position_of(cur, qw[g.b])));
                break;
            case GateKind::Swap: {
                size_t a = position_of(cur, qw[g.a]), b = position_of(cur, qw[g.b]);
                emitted.push_back(Gate::swap(std::min(a, b), std::max(a, b)));
                std::swap(cur[a], cur[b]);
                std::swap(qw[g.a], qw[g.b]);
                break;
            }
            case GateKind::Init1: {
                size_t pos = 0;
                if (g.a < qw.size()) {
                    pos = position_of(cur, qw[g.a]);
                } else if (!qw.empty()) {
                    pos = position_of(cur, qw.back()) + 1;
                }
                int t = next++;
                emitted.push_back(Gate::init1(pos));
                cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos), t);
                qw.insert(qw.begin() + g.a, t);
                break;
            }
            case GateKind::Post1: {
                size_t pos = position_of(cur, qw[g.a]);
                emitted.push_back(Gate::post1(pos));
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pos));
                qw.erase(qw.begin() + g.a);
                break;
            }
        }
    }
    // Put target output i where source output i sits in the host.
    std::vector<int> desired = m.host;
    for (size_t i = 0; i < m.pat.size(); i++) {
        desired[position_of(m.host, m.binding.fwd[m.pat[i]])] = qw[i];
    }
    for (size_t j = 0; j < desired.size(); j++) {
        if (cur[j] != desired[j]) {
            size_t from = position_of(cur, desired[j]);
            emitted.push_back(Gate::swap(j, from));
            std::swap(cur[j], cur[from]);
        }
    }

    std::vector<Gate> out(hg.begin(), hg.begin() + static_cast<std::ptrdiff_t>(offset));
    out.insert(out.end(), emitted.begin(), emitted.end());
    out.insert(out.end(), hg.begin() + static_cast<std::ptrdiff_t>(offset + src.gates().size()), hg.end());
    Circuit result = Circuit::from_gates(c.n_in(), std::move(out));
    result.require_valid();
    if (!equal_circ(result, c)) {
        throw std::logic_error("rewrite with " + rule.name + " changed the circuit's meaning");
    }
    return result;
}

std::vector<Circuit> replay(const Circuit &start, const std::vector<DerivationStep> &steps) {
    std::vector<Circuit> chain{start};
    for (size_t i = 0; i < steps.size(); i++) {
        const DerivationStep &st = steps[i];
        const RewriteRule &rule = find_rule(st.rule);
        auto next = apply_at(chain.back(), rule, st.offset, st.dir, st.wires);
        if (!next) {
            throw RewriteError("step " + std::to_string(i + 1) + ": " + st.rule + " does not match at offset " +
                               std::to_string(st.offset));
        }
        chain.push_back(std::move(*next));
    }
    return chain;
}

RuleCheck check_rule(const RewriteRule &rule) {
    RuleCheck out{rule.name, false, false};
    if (rule.lhs.n_in() != rule.rhs.n_in() || rule.lhs.n_out() != rule.rhs.n_out()) {
        return out;
    }
    out.semantic_equal = semantics(rule.lhs) == semantics(rule.rhs);
    out.state_map_equal = true;
    size_t n = rule.lhs.n_in();
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        BitVec x = BitVec::from_integer(v, n);
        if (eval_state(rule.lhs, x) != eval_state(rule.rhs, x)) {
            out.state_map_equal = false;
        }
    }
    return out;
}

std::vector<RuleCheck> verify_all() {
    std::vector<RuleCheck> out;
    for (const RewriteRule &r : axioms()) {
        out.push_back(check_rule(r));
    }
    for (const RewriteRule &r : lemma_fixtures()) {
        out.push_back(check_rule(r));
    }
    return out;
}

std::vector<DerivationStep> omega_absorb_derivation() {
    using D = Direction;
    return {
        // Reverse the cnot of the second copy.
        {"SYM.init-swap", 5, D::RightToLeft, {}},
        {"SYM.swap-cnot", 7, D::LeftToRight, {}},
        {"SYM.swap-post", 8, D::LeftToRight, {}},
        // Line up each cut next to the cnot it slides through.
        {"ICH.init-init", 0, D::LeftToRight, {}},
        {"ICH.post-init", 4, D::LeftToRight, {}},
        {"ICH.post-post", 8, D::LeftToRight, {}},
        // Remove both cuts.
        {"CNT4a", 1, D::RightToLeft, {}},
        {"CNT4b", 3, D::RightToLeft, {}},
        // Insert a cancelling pair, then fold three cnots into a swap.
        {"CNT2", 2, D::RightToLeft, {1, 0}},
        {"CNT1", 3, D::LeftToRight, {}},
        // The swap and the reversed cnot are absorbed by the ancillae.
        {"SYM.swap-post", 3, D::LeftToRight, {}},
        {"SYM.init-swap", 0, D::RightToLeft, {}},
        {"SYM.swap-cnot", 3, D::LeftToRight, {}},
        {"SYM.swap-post", 4, D::LeftToRight, {}},
        {"SYM.init-swap", 0, D::LeftToRight, {}},
        {"ICH.post-post", 3, D::RightToLeft, {}},
    };
}

}  // namespace cnotcalc
