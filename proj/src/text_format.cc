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

#include "cnotcalc/text_format.h"

#include <charconv>
#include <sstream>

#include "cnotcalc/gf2.h"

namespace cnotcalc {

ParseError::ParseError(const std::string &message, size_t line, size_t column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    size_t column;
};

struct Line {
    size_t number;
    std::vector<Token> tokens;
};

// Whitespace separated tokens; '=' and ':' always stand alone.
std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    size_t number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        number++;
        if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        size_t i = 0;
        while (i < raw.size()) {
            char ch = raw[i];
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                i++;
                continue;
            }
            if (ch == '=' || ch == ':') {
                line.tokens.push_back({raw.substr(i, 1), i + 1});
                i++;
                continue;
            }
            size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' && raw[j] != '=' &&
                   raw[j] != ':') {
                j++;
            }
            line.tokens.push_back({raw.substr(i, j - i), i + 1});
            i = j;
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
        start = end + 1;
    }
    return out;
}

size_t line_count(std::string_view text) {
    size_t lines = 1;
    for (char ch : text) {
        lines += ch == '\n';
    }
    return lines;
}

[[noreturn]] void fail(const Line &line, const Token &tok, const std::string &message) {
    throw ParseError(message, line.number, tok.column);
}

[[noreturn]] void fail_after(const Line &line, const std::string &message) {
    const Token &last = line.tokens.back();
    throw ParseError(message, line.number, last.column + last.text.size());
}

size_t number(const Line &line, const Token &tok, size_t limit = kMaxParsedWidth) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        fail(line, tok, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
    }
    if (v > limit) {
        fail(line, tok, "value " + std::string(tok.text) + " exceeds the limit " + std::to_string(limit));
    }
    return v;
}

const Token &arg(const Line &line, size_t i, const std::string &what) {
    if (i >= line.tokens.size()) {
        fail_after(line, "expected " + what);
    }
    return line.tokens[i];
}

void expect_end(const Line &line, size_t i) {
    if (i < line.tokens.size()) {
        fail(line, line.tokens[i], "unexpected '" + std::string(line.tokens[i].text) + "'");
    }
}

void expect(const Line &line, size_t i, std::string_view word) {
    const Token &t = arg(line, i, "'" + std::string(word) + "'");
    if (t.text != word) {
        fail(line, t, "expected '" + std::string(word) + "', got '" + std::string(t.text) + "'");
    }
}

bool parse_bit(const Line &line, const Token &tok) {
    if (tok.text == "0") {
        return false;
    }
    if (tok.text == "1") {
        return true;
    }
    fail(line, tok, "expected 0 or 1, got '" + std::string(tok.text) + "'");
}

// Lines after the header up to an optional `end`; nothing may follow it.
std::vector<Line> body(const std::vector<Line> &lines, bool end_required, std::string_view text) {
    std::vector<Line> out;
    for (size_t i = 1; i < lines.size(); i++) {
        if (lines[i].tokens[0].text == "end") {
            expect_end(lines[i], 1);
            if (i + 1 < lines.size()) {
                fail(lines[i + 1], lines[i + 1].tokens[0], "unexpected text after 'end'");
            }
            return out;
        }
        out.push_back(lines[i]);
    }
    if (end_required) {
        throw ParseError("missing 'end'", line_count(text), 1);
    }
    return out;
}

const Line &header(const std::vector<Line> &lines, std::string_view text, const std::string &what) {
    if (lines.empty()) {
        throw ParseError("expected " + what + " header", line_count(text), 1);
    }
    return lines[0];
}

struct Variable {
    bool output;
    size_t index;
};

Variable variable(const Line &line, const Token &tok, size_t n, size_t m) {
    if (tok.text.size() < 2 || (tok.text[0] != 'x' && tok.text[0] != 'y')) {
        fail(line, tok, "expected a variable x<i> or y<j>, got '" + std::string(tok.text) + "'");
    }
    bool output = tok.text[0] == 'y';
    Token digits{tok.text.substr(1), tok.column + 1};
    size_t index = number(line, digits);
    if (index >= (output ? m : n)) {
        fail(line, tok, "variable " + std::string(tok.text) + " out of range");
    }
    return {output, index};
}

// parity v ... = b, returned as a row of width n + m + 1.
BitVec parity_row(const Line &line, size_t n, size_t m, bool inputs_only) {
    BitVec row(n + m + 1);
    size_t i = 1;
    for (;; i++) {
        const Token &t = arg(line, i, "'='");
        if (t.text == "=") {
            break;
        }
        Variable v = variable(line, t, n, m);
        if (v.output && inputs_only) {
            fail(line, t, "domain constraints may only mention inputs");
        }
        row.flip(v.output ? n + v.index : v.index);
    }
    row.set(n + m, parse_bit(line, arg(line, i + 1, "0 or 1")));
    expect_end(line, i + 2);
    return row;
}

AffineRelation parse_graph(const std::vector<Line> &rows, size_t n, size_t m) {
    GF2Matrix aug(0, n + m + 1);
    for (const Line &line : rows) {
        if (line.tokens[0].text != "parity") {
            fail(line, line.tokens[0], "expected 'parity', got '" + std::string(line.tokens[0].text) + "'");
        }
        aug.append_row(parity_row(line, n, m, false));
    }
    return AffineRelation(n, m, aug);
}

AffineRelation parse_affine(const std::vector<Line> &rows, size_t n, size_t m) {
    GF2Matrix aug(0, n + m + 1);
    std::vector<bool> seen(m, false);
    for (const Line &line : rows) {
        const Token &first = line.tokens[0];
        if (first.text == "parity") {
            aug.append_row(parity_row(line, n, m, true));
            continue;
        }
        if (first.text.empty() || first.text[0] != 'y') {
            fail(line, first, "expected 'parity' or an output y<j>, got '" + std::string(first.text) + "'");
        }
        Variable out = variable(line, first, n, m);
        if (seen[out.index]) {
            fail(line, first, "output " + std::string(first.text) + " defined twice");
        }
        seen[out.index] = true;
        expect(line, 1, "=");
        BitVec row(n + m + 1);
        row.set(n + out.index, true);
        if (line.tokens.size() == 2) {
            fail_after(line, "expected a term");
        }
        for (size_t i = 2; i < line.tokens.size(); i++) {
            const Token &t = line.tokens[i];
            if (t.text == "+") {
                continue;
            }
            if (t.text == "0" || t.text == "1") {
                row.set(n + m, row[n + m] ^ (t.text == "1"));
                continue;
            }
            Variable v = variable(line, t, n, m);
            if (v.output) {
                fail(line, t, "map terms may only mention inputs");
            }
            row.flip(v.index);
        }
        aug.append_row(row);
    }
    for (size_t j = 0; j < m; j++) {
        if (!seen[j]) {
            BitVec row(n + m + 1);
            row.set(n + j, true);
            aug.append_row(row);
        }
    }
    return AffineRelation(n, m, aug);
}

}  // namespace

NamedCircuit parse_circuit(std::string_view text) {
    std::vector<Line> lines = lex(text);
    const Line &head = header(lines, text, "'circuit <name> : <n_in> -> <n_out>'");
    expect(head, 0, "circuit");
    const Token &name = arg(head, 1, "a circuit name");
    if (name.text == ":") {
        fail(head, name, "expected a circuit name");
    }
    expect(head, 2, ":");
    size_t n_in = number(head, arg(head, 3, "an input count"));
    expect(head, 4, "->");
    const Token &out_tok = arg(head, 5, "an output count");
    size_t n_out = number(head, out_tok);
    expect_end(head, 6);

    Circuit c(n_in);
    for (const Line &line : body(lines, true, text)) {
        const Token &op = line.tokens[0];
        std::string_view kind = op.text;
        bool binary = kind == "cnot" || kind == "swap";
        bool unary = kind == "init1" || kind == "post1" || kind == "init0" || kind == "post0" || kind == "not";
        if (!binary && !unary) {
            fail(line, op, "unknown gate '" + std::string(kind) + "'");
        }
        size_t a = number(line, arg(line, 1, "a wire index"));
        size_t b = binary ? number(line, arg(line, 2, "a second wire index")) : 0;
        expect_end(line, binary ? 3 : 2);
        std::vector<Gate> gates;
        if (kind == "cnot") {
            gates = {Gate::cnot(a, b)};
        } else if (kind == "swap") {
            gates = {Gate::swap(a, b)};
        } else if (kind == "init1") {
            gates = {Gate::init1(a)};
        } else if (kind == "post1") {
            gates = {Gate::post1(a)};
        } else if (kind == "init0") {
            gates = init0_gates(a);
        } else if (kind == "post0") {
            gates = post0_gates(a);
        } else {
            gates = not_gates(a);
        }
        try {
            c.append(gates);
        } catch (const CircuitError &e) {
            std::string shown(kind);
            for (size_t i = 1; i < line.tokens.size(); i++) {
                shown += " " + std::string(line.tokens[i].text);
            }
            fail(line, op, "gate '" + shown + "' on width " + std::to_string(c.width()) + ": " + e.what());
        }
        if (c.width() > kMaxParsedWidth) {
            fail(line, op, "circuit wider than " + std::to_string(kMaxParsedWidth) + " wires");
        }
    }
    if (c.n_out() != n_out) {
        fail(head, out_tok,
             "declared " + std::to_string(n_out) + " outputs but the gates leave " + std::to_string(c.n_out()));
    }
    return {std::string(name.text), std::move(c)};
}

std::string print_circuit(const Circuit &c, const std::string &name) {
    std::ostringstream out;
    out << "circuit " << name << " : " << c.n_in() << " -> " << c.n_out() << "\n";
    for (const Gate &g : c.gates()) {
        out << g.str() << "\n";
    }
    out << "end\n";
    return out.str();
}

AffineRelation parse_relation(std::string_view text) {
    std::vector<Line> lines = lex(text);
    const Line &head = header(lines, text, "'graph <n> <m>' or 'affine <n> <m>'");
    const Token &kind = head.tokens[0];
    if (kind.text != "graph" && kind.text != "affine") {
        fail(head, kind, "expected 'graph' or 'affine', got '" + std::string(kind.text) + "'");
    }
    size_t n = number(head, arg(head, 1, "an input count"));
    size_t m = number(head, arg(head, 2, "an output count"));
    expect_end(head, 3);
    std::vector<Line> rows = body(lines, false, text);
    return kind.text == "graph" ? parse_graph(rows, n, m) : parse_affine(rows, n, m);
}

GF2Matrix outputs_first_system(const AffineRelation &r) {
    size_t n = r.n_in(), m = r.n_out();
    std::vector<size_t> order;
    for (size_t j = 0; j < m; j++) {
        order.push_back(n + j);
    }
    for (size_t i = 0; i <= n; i++) {
        order.push_back(i == n ? n + m : i);
    }
    return canonical_system(r.constraints().select_columns(order));
}

std::string print_relation(const AffineRelation &r) {
    size_t n = r.n_in(), m = r.n_out();
    GF2Matrix sys = outputs_first_system(r);
    std::ostringstream out;
    out << "graph " << n << " " << m << "\n";
    for (size_t row = 0; row < sys.rows(); row++) {
        out << "parity";
        for (size_t i = 0; i < n; i++) {
            if (sys.get(row, m + i)) {
                out << " x" << i;
            }
        }
        for (size_t j = 0; j < m; j++) {
            if (sys.get(row, j)) {
                out << " y" << j;
            }
        }
        out << " = " << sys.get(row, n + m) << "\n";
    }
    return out.str();
}

ClausalForm parse_system(std::string_view text) {
    std::vector<Line> lines = lex(text);
    const Line &head = header(lines, text, "'system <n>'");
    expect(head, 0, "system");
    size_t n = number(head, arg(head, 1, "a variable count"));
    expect_end(head, 2);
    ClausalForm cf{n, {}};
    for (const Line &line : body(lines, false, text)) {
        expect(line, 0, "parity");
        Clause clause;
        std::vector<bool> used(n, false);
        size_t i = 1;
        for (;; i++) {
            const Token &t = arg(line, i, "'='");
            if (t.text == "=") {
                break;
            }
            size_t v = number(line, t);
            if (v >= n) {
                fail(line, t, "variable " + std::string(t.text) + " out of range");
            }
            used[v] = !used[v];
        }
        clause.rhs = parse_bit(line, arg(line, i + 1, "0 or 1"));
        expect_end(line, i + 2);
        for (size_t v = 0; v < n; v++) {
            if (used[v]) {
                clause.support.push_back(v);
            }
        }
        cf.clauses.push_back(std::move(clause));
    }
    return cf;
}

std::string print_system(const ClausalForm &cf) {
    std::ostringstream out;
    out << "system " << cf.n << "\n";
    for (const Clause &c : cf.clauses) {
        out << "parity";
        for (size_t v : c.support) {
            out << " " << v;
        }
        out << " = " << c.rhs << "\n";
    }
    return out.str();
}

std::vector<DerivationStep> parse_derivation(std::string_view text) {
    std::vector<DerivationStep> steps;
    for (const Line &line : lex(text)) {
        DerivationStep step;
        step.rule = std::string(line.tokens[0].text);
        step.offset = number(line, arg(line, 1, "an offset"), SIZE_MAX);
        const Token &dir = arg(line, 2, "'lr' or 'rl'");
        if (dir.text == "lr") {
            step.dir = Direction::LeftToRight;
        } else if (dir.text == "rl") {
            step.dir = Direction::RightToLeft;
        } else {
            fail(line, dir, "expected 'lr' or 'rl', got '" + std::string(dir.text) + "'");
        }
        for (size_t i = 3; i < line.tokens.size(); i++) {
            step.wires.push_back(number(line, line.tokens[i]));
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

std::string print_derivation(const std::vector<DerivationStep> &steps) {
    std::ostringstream out;
    for (const DerivationStep &s : steps) {
        out << s.rule << " " << s.offset << " " << (s.dir == Direction::LeftToRight ? "lr" : "rl");
        for (size_t w : s.wires) {
            out << " " << w;
        }
        out << "\n";
    }
    return out.str();
}

BitVec parse_bits(std::string_view text) {
    BitVec out(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] != '0' && text[i] != '1') {
            throw ParseError("expected 0 or 1, got '" + std::string(1, text[i]) + "'", 1, i + 1);
        }
        out.set(i, text[i] == '1');
    }
    return out;
}

}  // namespace cnotcalc
