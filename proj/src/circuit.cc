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

#include <algorithm>
#include <utility>

#include "cnotcalc/gf2.h"

namespace cnotcalc {

Gate Gate::cnot(size_t control, size_t target) {
    return {GateKind::Cnot, static_cast<uint32_t>(control), static_cast<uint32_t>(target)};
}
Gate Gate::swap(size_t a, size_t b) { return {GateKind::Swap, static_cast<uint32_t>(a), static_cast<uint32_t>(b)}; }
Gate Gate::init1(size_t pos) { return {GateKind::Init1, static_cast<uint32_t>(pos), 0}; }
Gate Gate::post1(size_t pos) { return {GateKind::Post1, static_cast<uint32_t>(pos), 0}; }

int Gate::width_delta() const {
    switch (kind) {
        case GateKind::Init1:
            return 1;
        case GateKind::Post1:
            return -1;
        default:
            return 0;
    }
}

Gate Gate::shifted(size_t k) const {
    Gate g = *this;
    g.a += static_cast<uint32_t>(k);
    if (kind == GateKind::Cnot || kind == GateKind::Swap) {
        g.b += static_cast<uint32_t>(k);
    }
    return g;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::Cnot:
            return "cnot " + std::to_string(a) + " " + std::to_string(b);
        case GateKind::Swap:
            return "swap " + std::to_string(a) + " " + std::to_string(b);
        case GateKind::Init1:
            return "init1 " + std::to_string(a);
        case GateKind::Post1:
            return "post1 " + std::to_string(a);
    }
    return "?";
}

std::vector<Gate> init0_gates(size_t p) {
    return {Gate::init1(p), Gate::init1(p), Gate::cnot(p, p + 1), Gate::post1(p)};
}

std::vector<Gate> post0_gates(size_t p) {
    return {Gate::init1(p), Gate::cnot(p, p + 1), Gate::post1(p), Gate::post1(p)};
}

std::vector<Gate> not_gates(size_t p) { return {Gate::init1(p), Gate::cnot(p, p + 1), Gate::post1(p)}; }

CircuitError::CircuitError(std::string message, std::optional<size_t> gate_index)
    : std::invalid_argument(std::move(message)), gate_index_(gate_index) {}

namespace {

// Empty string when g is applicable at width w.
std::string gate_problem(const Gate &g, size_t w) {
    auto idx = [](uint32_t i) { return std::to_string(i); };
    switch (g.kind) {
        case GateKind::Cnot:
        case GateKind::Swap: {
            const char *what = g.kind == GateKind::Cnot ? "cnot" : "swap";
            if (g.a == g.b) {
                return std::string(what) + " uses wire " + idx(g.a) + " twice";
            }
            if (g.a >= w || g.b >= w) {
                return std::string(what) + " " + idx(g.a) + " " + idx(g.b) + " out of range for width " +
                       std::to_string(w);
            }
            return "";
        }
        case GateKind::Init1:
            if (g.a > w) {
                return "init1 " + idx(g.a) + " out of range for width " + std::to_string(w);
            }
            return "";
        case GateKind::Post1:
            if (g.a >= w) {
                return "post1 " + idx(g.a) + " out of range for width " + std::to_string(w);
            }
            return "";
    }
    return "unknown gate";
}

}  // namespace

Circuit Circuit::from_gates(size_t n_in, std::vector<Gate> gates) {
    Circuit c(n_in);
    long w = static_cast<long>(n_in);
    for (const Gate &g : gates) {
        w = std::max(0L, w + g.width_delta());
    }
    c.n_out_ = static_cast<size_t>(w);
    c.gates_ = std::move(gates);
    return c;
}

size_t Circuit::size() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind != GateKind::Swap; }));
}

std::optional<Diagnostic> Circuit::validate() const {
    size_t w = n_in_;
    for (size_t i = 0; i < gates_.size(); i++) {
        std::string problem = gate_problem(gates_[i], w);
        if (!problem.empty()) {
            return Diagnostic{i, problem};
        }
        w = static_cast<size_t>(static_cast<long>(w) + gates_[i].width_delta());
    }
    return std::nullopt;
}

void Circuit::require_valid() const {
    if (auto d = validate()) {
        throw CircuitError("gate " + std::to_string(d->gate_index) + ": " + d->message, d->gate_index);
    }
}

std::vector<size_t> Circuit::width_trace() const {
    std::vector<size_t> t;
    t.reserve(gates_.size() + 1);
    long w = static_cast<long>(n_in_);
    t.push_back(n_in_);
    for (const Gate &g : gates_) {
        w = std::max(0L, w + g.width_delta());
        t.push_back(static_cast<size_t>(w));
    }
    return t;
}

Circuit &Circuit::append(const Gate &g) {
    std::string problem = gate_problem(g, n_out_);
    if (!problem.empty()) {
        throw CircuitError("gate " + std::to_string(gates_.size()) + ": " + problem, gates_.size());
    }
    gates_.push_back(g);
    n_out_ = static_cast<size_t>(static_cast<long>(n_out_) + g.width_delta());
    return *this;
}

Circuit &Circuit::append(const std::vector<Gate> &gs) {
    for (const Gate &g : gs) {
        append(g);
    }
    return *this;
}

Circuit &Circuit::then(const Circuit &c, size_t offset) {
    c.require_valid();
    if (offset + c.n_in() > n_out_) {
        throw CircuitError("cannot place a " + std::to_string(c.n_in()) + "-wire circuit at offset " +
                           std::to_string(offset) + " on width " + std::to_string(n_out_));
    }
    for (const Gate &g : c.gates()) {
        append(g.shifted(offset));
    }
    return *this;
}

Circuit compose_circ(const Circuit &c, const Circuit &d) {
    c.require_valid();
    if (c.n_out() != d.n_in()) {
        throw CircuitError("compose: output arity " + std::to_string(c.n_out()) + " does not match input arity " +
                           std::to_string(d.n_in()));
    }
    Circuit out = c;
    out.then(d);
    return out;
}

Circuit tensor_circ(const Circuit &c, const Circuit &d) {
    c.require_valid();
    d.require_valid();
    std::vector<Gate> gates = c.gates();
    for (const Gate &g : d.gates()) {
        gates.push_back(g.shifted(c.n_out()));
    }
    return Circuit::from_gates(c.n_in() + d.n_in(), std::move(gates));
}

Circuit dagger_circ(const Circuit &c) {
    c.require_valid();
    std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
    for (Gate &g : gates) {
        if (g.kind == GateKind::Init1) {
            g.kind = GateKind::Post1;
        } else if (g.kind == GateKind::Post1) {
            g.kind = GateKind::Init1;
        }
    }
    return Circuit::from_gates(c.n_out(), std::move(gates));
}

std::optional<BitVec> eval_state(const Circuit &c, const BitVec &x) {
    c.require_valid();
    if (x.size() != c.n_in()) {
        throw std::invalid_argument("eval_state: input has " + std::to_string(x.size()) + " bits, circuit expects " +
                                    std::to_string(c.n_in()));
    }
    std::vector<bool> s(x.size());
    for (size_t i = 0; i < x.size(); i++) {
        s[i] = x[i];
    }
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
            case GateKind::Cnot:
                if (s[g.a]) {
                    s[g.b] = !s[g.b];
                }
                break;
            case GateKind::Swap: {
                bool t = s[g.a];
                s[g.a] = s[g.b];
                s[g.b] = t;
                break;
            }
            case GateKind::Init1:
                s.insert(s.begin() + g.a, true);
                break;
            case GateKind::Post1:
                if (!s[g.a]) {
                    return std::nullopt;
                }
                s.erase(s.begin() + g.a);
                break;
        }
    }
    BitVec out(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        out.set(i, s[i]);
    }
    return out;
}

AffineRelation semantics(const Circuit &c) {
    c.require_valid();
    size_t n = c.n_in();
    // Each wire holds an affine function of the inputs: coefficients on
    // x_0..x_{n-1} followed by a constant term.
    std::vector<BitVec> wires;
    for (size_t i = 0; i < n; i++) {
        wires.push_back(BitVec::unit(n + 1, i));
    }
    GF2Matrix domain(0, n + 1);
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
            case GateKind::Cnot:
                wires[g.b] ^= wires[g.a];
                break;
            case GateKind::Swap:
                std::swap(wires[g.a], wires[g.b]);
                break;
            case GateKind::Init1:
                wires.insert(wires.begin() + g.a, BitVec::unit(n + 1, n));
                break;
            case GateKind::Post1: {
                BitVec row = wires[g.a];
                row.flip(n);
                domain.append_row(std::move(row));
                wires.erase(wires.begin() + g.a);
                break;
            }
        }
    }
    size_t m = wires.size();
    size_t width = n + m + 1;
    GF2Matrix sys(0, width);
    for (const BitVec &row : domain.row_list()) {
        BitVec r = row.slice(0, n).concat(BitVec(m + 1));
        r.set(width - 1, row[n]);
        sys.append_row(std::move(r));
    }
    for (size_t j = 0; j < m; j++) {
        // y_j + sum(coeffs * x) = const
        BitVec r = wires[j].slice(0, n).concat(BitVec(m + 1));
        r.set(n + j, true);
        r.set(width - 1, wires[j][n]);
        sys.append_row(std::move(r));
    }
    return AffineRelation(n, m, sys);
}

AffineRelation gate_relation(const Gate &g, size_t width) {
    Circuit c(width);
    c.append(g);
    size_t n = width;
    size_t m = c.n_out();
    GF2Matrix sys(0, n + m + 1);
    auto link = [&](size_t x, size_t y, bool rhs) {
        BitVec row(n + m + 1);
        row.set(x, true);
        row.set(n + y, true);
        row.set(n + m, rhs);
        sys.append_row(std::move(row));
    };
    switch (g.kind) {
        case GateKind::Cnot:
            for (size_t i = 0; i < n; i++) {
                link(i, i, false);
            }
            sys.row(g.b).set(g.a, true);
            break;
        case GateKind::Swap:
            for (size_t i = 0; i < n; i++) {
                size_t src = i == g.a ? g.b : i == g.b ? g.a : i;
                link(src, i, false);
            }
            break;
        case GateKind::Init1: {
            for (size_t i = 0; i < n; i++) {
                link(i, i < g.a ? i : i + 1, false);
            }
            BitVec row(n + m + 1);
            row.set(n + g.a, true);
            row.set(n + m, true);
            sys.append_row(std::move(row));
            break;
        }
        case GateKind::Post1: {
            for (size_t i = 0; i < n; i++) {
                if (i != g.a) {
                    link(i, i < g.a ? i : i - 1, false);
                }
            }
            BitVec row(n + m + 1);
            row.set(g.a, true);
            row.set(n + m, true);
            sys.append_row(std::move(row));
            break;
        }
    }
    return AffineRelation(n, m, sys);
}

AffineRelation semantics_by_composition(const Circuit &c) {
    c.require_valid();
    AffineRelation r = AffineRelation::identity(c.n_in());
    std::vector<size_t> trace = c.width_trace();
    for (size_t i = 0; i < c.gates().size(); i++) {
        r = compose(r, gate_relation(c.gates()[i], trace[i]));
    }
    return r;
}

bool equal_circ(const Circuit &c, const Circuit &d) {
    if (c.n_in() != d.n_in() || c.n_out() != d.n_out()) {
        throw CircuitError("equal: arity mismatch " + std::to_string(c.n_in()) + "->" + std::to_string(c.n_out()) +
                           " vs " + std::to_string(d.n_in()) + "->" + std::to_string(d.n_out()));
    }
    return semantics(c) == semantics(d);
}

}  // namespace cnotcalc
