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

#include "cnotcalc/constructions.h"

#include <algorithm>
#include <stdexcept>

namespace cnotcalc {

Circuit fanout(size_t n) {
    if (n == 0) {
        return Circuit(0);
    }
    Circuit delta1(1);
    delta1.init0(0).cnot(1, 0);
    if (n == 1) {
        return delta1;
    }
    Circuit c = tensor_circ(fanout(n - 1), delta1);
    // Wires are now (copy1[0..n-2], copy2[0..n-2], x, x). Bring the first
    // copy of x down next to copy1.
    for (size_t k = 2 * (n - 1); k > n - 1; k--) {
        c.swap(k - 1, k);
    }
    return c;
}

Circuit fanin(size_t n) { return dagger_circ(fanout(n)); }

Circuit omega() {
    Circuit c(0);
    c.init1(0).init1(1).cnot(0, 1).post1(0).post1(0);
    return c;
}

Circuit omega_nm(size_t n, size_t m) {
    Circuit c(n);
    for (size_t i = 0; i < n; i++) {
        c.post1(0);
    }
    c.then(omega());
    for (size_t i = 0; i < m; i++) {
        c.init1(0);
    }
    return c;
}

Circuit plus_map(size_t n) {
    Circuit c(3 * n);
    for (size_t i = 0; i < n; i++) {
        c.cnot(n + i, 2 * n + i);
        c.cnot(i, 2 * n + i);
    }
    return c;
}

Circuit hat(const BitVec &bits) {
    Circuit c(0);
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i]) {
            c.init1(i);
        } else {
            c.init0(i);
        }
    }
    return c;
}

Circuit swap_block(size_t i, size_t n) {
    if (i > n) {
        throw std::out_of_range("swap_block: index " + std::to_string(i) + " exceeds " + std::to_string(n));
    }
    Circuit c(n);
    for (size_t k = i; k >= 2; k--) {
        c.swap(k - 2, k - 1);
    }
    return c;
}

Circuit literal(size_t i, size_t n) {
    if (i < 1 || i > n) {
        throw std::out_of_range("literal: index " + std::to_string(i) + " not in 1.." + std::to_string(n));
    }
    Circuit sb = swap_block(i, n);
    Circuit c(n + 1);
    c.then(sb, 1);
    c.cnot(1, 0);
    c.then(dagger_circ(sb), 1);
    return c;
}

Circuit clause_circuit(const std::vector<size_t> &support, bool rhs, size_t n) {
    std::vector<size_t> s = support;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw std::invalid_argument("clause: repeated wire in support");
    }
    Circuit c(n);
    c.init0(0);
    for (size_t i : s) {
        if (i >= n) {
            throw std::out_of_range("clause: wire " + std::to_string(i) + " out of range for " + std::to_string(n));
        }
        c.then(literal(i + 1, n));
    }
    if (rhs) {
        c.post1(0);
    } else {
        c.post0(0);
    }
    return c;
}

Circuit permutation_circuit(const std::vector<size_t> &perm) {
    size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (size_t p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("permutation_circuit: not a permutation");
        }
        seen[p] = true;
    }
    // Selection sort on the current arrangement of original wires.
    std::vector<size_t> at(n);
    for (size_t i = 0; i < n; i++) {
        at[i] = i;
    }
    Circuit c(n);
    for (size_t j = 0; j < n; j++) {
        size_t k = static_cast<size_t>(std::find(at.begin(), at.end(), perm[j]) - at.begin());
        if (k != j) {
            c.swap(j, k);
            std::swap(at[j], at[k]);
        }
    }
    return c;
}

bool is_latchable(const Circuit &c) {
    if (c.n_in() != c.n_out()) {
        throw CircuitError("is_latchable: circuit is not an endomap");
    }
    size_t n = c.n_in();
    Circuit latched = compose_circ(compose_circ(fanout(n), tensor_circ(c, Circuit(n))), fanin(n));
    return equal_circ(c, latched);
}

Circuit random_circuit(std::mt19937_64 &rng, const RandomCircuitOptions &opts) {
    enum Kind { kCnot, kSwap, kInit1, kInit0, kPost1, kPost0, kNot };
    static constexpr int kWeights[] = {45, 10, 10, 10, 10, 10, 5};
    static constexpr size_t kCost[] = {1, 1, 1, 4, 1, 4, 3};
    Circuit c(opts.n_in);
    while (c.gates().size() < opts.depth) {
        size_t w = c.width();
        size_t budget = opts.depth - c.gates().size();
        auto allowed = [&](int k) {
            if (kCost[k] > budget) {
                return false;
            }
            switch (k) {
                case kCnot:
                case kSwap:
                    return w >= 2;
                case kInit1:
                case kInit0:
                    return w < opts.max_width;
                default:
                    return w >= 1;
            }
        };
        std::vector<double> weights;
        for (int k = 0; k <= kNot; k++) {
            weights.push_back(allowed(k) ? kWeights[k] : 0);
        }
        if (std::all_of(weights.begin(), weights.end(), [](double x) { return x == 0; })) {
            break;
        }
        int k = std::discrete_distribution<int>(weights.begin(), weights.end())(rng);
        auto pick = [&](size_t bound) { return std::uniform_int_distribution<size_t>(0, bound - 1)(rng); };
        switch (k) {
            case kCnot:
            case kSwap: {
                size_t a = pick(w);
                size_t b = pick(w - 1);
                if (b >= a) {
                    b++;
                }
                if (k == kCnot) {
                    c.cnot(a, b);
                } else {
                    c.swap(a, b);
                }
                break;
            }
            case kInit1:
                c.init1(pick(w + 1));
                break;
            case kInit0:
                c.init0(pick(w + 1));
                break;
            case kPost1:
                c.post1(pick(w));
                break;
            case kPost0:
                c.post0(pick(w));
                break;
            case kNot:
                c.not_gate(pick(w));
                break;
        }
    }
    return c;
}

}  // namespace cnotcalc
