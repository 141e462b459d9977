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

#include "cnotcalc/synth.h"

#include "cnotcalc/constructions.h"
#include "cnotcalc/gf2.h"
#include "cnotcalc/normalize.h"

namespace cnotcalc {

BitVec AffineMapSpec::apply(const BitVec &x) const { return linear * x ^ shift; }

AffineRelation AffineMapSpec::graph() const { return AffineRelation::from_affine_map(linear, shift); }

SynthError::SynthError(std::string message, std::optional<BitVec> direction)
    : std::invalid_argument(std::move(message)), direction_(std::move(direction)) {}

Circuit synth_total_graph(const AffineMapSpec &f) {
    size_t n = f.n_in(), m = f.n_out();
    if (f.shift.size() != m) {
        throw std::invalid_argument("synth_total_graph: shift length does not match output count");
    }
    Circuit c(n);
    for (size_t i = 0; i < m; i++) {
        if (f.shift[i]) {
            c.init1(n + i);
        } else {
            c.init0(n + i);
        }
    }
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < m; i++) {
            if (f.linear.get(i, j)) {
                c.cnot(j, n + i);
            }
        }
    }
    return c;
}

AffineMapSpec extend_to_total(const AffineRelation &r) {
    size_t n = r.n_in(), m = r.n_out();
    const GF2Matrix &sys = r.constraints();
    auto point = least_solution(sys);
    if (!point) {
        throw SynthError("cannot extend the empty relation");
    }
    BitVec x0 = point->slice(0, n), y0 = point->slice(n, n + m);

    std::vector<size_t> x_cols, y_cols;
    for (size_t i = 0; i < n; i++) {
        x_cols.push_back(i);
    }
    for (size_t i = 0; i < m; i++) {
        y_cols.push_back(n + i);
    }
    GF2Matrix ax = sys.select_columns(x_cols), ay = sys.select_columns(y_cols);
    GF2Matrix dom = r.domain();
    std::vector<BitVec> dirs = kernel_basis(dom.select_columns(x_cols));

    // Basis of GF(2)^n: domain directions, then standard vectors in index
    // order whenever they are independent of what is already chosen.
    std::vector<BitVec> basis = dirs, images;
    for (const BitVec &v : dirs) {
        auto w = solve_affine(ay, ax * v);
        if (!w || !w->kernel_basis.empty()) {
            throw SynthError("relation is not single-valued");
        }
        images.push_back(w->particular);
    }
    for (size_t i = 0; i < n && basis.size() < n; i++) {
        GF2Matrix trial = GF2Matrix::from_rows(basis, n);
        trial.append_row(BitVec::unit(n, i));
        if (rref(trial).rank == basis.size() + 1) {
            basis.push_back(BitVec::unit(n, i));
            images.push_back(BitVec(m));
        }
    }
    // T * B = M with B, M holding basis vectors and images as columns.
    GF2Matrix b = GF2Matrix::from_rows(basis, n).transposed();
    GF2Matrix mm = GF2Matrix::from_rows(images, m).transposed();
    GF2Matrix t = n == 0 ? GF2Matrix(m, 0) : mm * *inverse(b);
    return AffineMapSpec{t, y0 ^ (t * x0)};
}

Circuit synth(const AffineRelation &r) {
    if (auto v = r.partial_iso_violation()) {
        const size_t n = r.n_in();
        throw SynthError("not a partial isomorphism: direction x=" + v->slice(0, n).str() +
                             " y=" + v->slice(n, v->size()).str() + " solves the homogeneous system",
                         v);
    }
    size_t n = r.n_in(), m = r.n_out();
    if (r.is_empty()) {
        return omega_nm(n, m);
    }
    AffineMapSpec f = extend_to_total(r);
    AffineMapSpec g = extend_to_total(dagger(r));

    Circuit c = clausal_to_circuit(ClausalForm::from_system(r.domain()));
    c.then(synth_total_graph(f));
    // Wires are (x, f(x)). Clear each x_j with the inverse map.
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < m; i++) {
            if (g.linear.get(j, i)) {
                c.cnot(n + i, j);
            }
        }
        if (g.shift[j]) {
            c.not_gate(j);
        }
    }
    for (size_t j = 0; j < n; j++) {
        c.post0(0);
    }
    return c;
}

}  // namespace cnotcalc
