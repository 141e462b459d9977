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

#include "cnotcalc/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cnotcalc/constructions.h"
#include "cnotcalc/laws.h"
#include "cnotcalc/normalize.h"
#include "cnotcalc/rewrite.h"
#include "cnotcalc/synth.h"
#include "cnotcalc/text_format.h"
#include "json.hpp"

namespace cnotcalc {

namespace {

using nlohmann::json;

constexpr size_t kMaxFuzzWires = 16;
constexpr size_t kMaxFuzzDepth = 100000;

// Anything that should exit with status 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Report {
    int code = 0;
    std::string text;
    json data = json::object();
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename F>
auto parsed(const std::string &path, F parse) {
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

NamedCircuit load_circuit(const std::string &path) {
    return parsed(path, [](const std::string &t) { return parse_circuit(t); });
}

// First word of the first non-comment line.
std::string first_word(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::string w;
        if (words >> w) {
            return w;
        }
    }
    return "";
}

json circuit_json(const Circuit &c, const std::string &name) {
    json gates = json::array();
    for (const Gate &g : c.gates()) {
        gates.push_back(g.str());
    }
    return {{"name", name}, {"n_in", c.n_in()}, {"n_out", c.n_out()}, {"gates", gates}};
}

json relation_json(const AffineRelation &r) {
    GF2Matrix sys = outputs_first_system(r);
    size_t n = r.n_in(), m = r.n_out();
    json rows = json::array();
    for (size_t row = 0; row < sys.rows(); row++) {
        json xs = json::array(), ys = json::array();
        for (size_t i = 0; i < n; i++) {
            if (sys.get(row, m + i)) {
                xs.push_back(i);
            }
        }
        for (size_t j = 0; j < m; j++) {
            if (sys.get(row, j)) {
                ys.push_back(j);
            }
        }
        rows.push_back({{"inputs", xs}, {"outputs", ys}, {"rhs", static_cast<int>(sys.get(row, n + m))}});
    }
    return {{"n_in", n}, {"n_out", m}, {"parities", rows}, {"partial_iso", r.is_partial_iso()}};
}

json clauses_json(const ClausalForm &cf) {
    json out = json::array();
    for (const Clause &c : cf.clauses) {
        out.push_back({{"support", c.support}, {"rhs", static_cast<int>(c.rhs)}});
    }
    return out;
}

json law_json(const LawResult &r) {
    json j = {{"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}};
    if (r.failure) {
        j["failure"] = *r.failure;
    }
    return j;
}

Report cmd_eval(const std::string &file, const std::string &input) {
    NamedCircuit nc = load_circuit(file);
    BitVec x;
    try {
        x = parse_bits(input);
    } catch (const ParseError &e) {
        throw InputError(std::string("--input: ") + e.what());
    }
    if (x.size() != nc.circuit.n_in()) {
        throw InputError("--input has " + std::to_string(x.size()) + " bits but " + nc.name + " takes " +
                         std::to_string(nc.circuit.n_in()));
    }
    std::optional<BitVec> y = eval_state(nc.circuit, x);
    Report r;
    r.text = (y ? y->str() : "undefined") + "\n";
    r.data = {{"circuit", nc.name}, {"input", x.str()}, {"output", y ? json(y->str()) : json(nullptr)}};
    return r;
}

Report cmd_semantics(const std::string &file) {
    NamedCircuit nc = load_circuit(file);
    AffineRelation rel = semantics(nc.circuit);
    Report r;
    r.text = print_relation(rel);
    r.data = relation_json(rel);
    r.data["circuit"] = nc.name;
    return r;
}

Report cmd_equal(const std::string &f1, const std::string &f2) {
    NamedCircuit a = load_circuit(f1), b = load_circuit(f2);
    if (a.circuit.n_in() != b.circuit.n_in() || a.circuit.n_out() != b.circuit.n_out()) {
        throw InputError("arity mismatch: " + a.name + " is " + std::to_string(a.circuit.n_in()) + " -> " +
                         std::to_string(a.circuit.n_out()) + " but " + b.name + " is " +
                         std::to_string(b.circuit.n_in()) + " -> " + std::to_string(b.circuit.n_out()));
    }
    bool eq = equal_circ(a.circuit, b.circuit);
    Report r;
    r.code = eq ? 0 : 1;
    r.text = eq ? "equal\n" : "unequal\n";
    r.data = {{"equal", eq}, {"left", a.name}, {"right", b.name}};
    return r;
}

Report cmd_normalize(const std::string &file) {
    std::string text = read_file(file);
    ClausalForm cf;
    std::string name = "normal";
    try {
        if (first_word(text) == "system") {
            cf = gaussian_eliminate(parse_system(text));
        } else {
            NamedCircuit nc = parse_circuit(text);
            name = nc.name;
            cf = idempotent_to_clausal(semantics(nc.circuit));
        }
    } catch (const ParseError &e) {
        throw InputError(file + ": " + e.what());
    } catch (const NormalizeError &e) {
        throw InputError(file + ": " + e.what());
    }
    Circuit c = clausal_to_circuit(cf);
    Report r;
    r.text = print_circuit(c, name);
    r.data = circuit_json(c, name);
    r.data["clauses"] = clauses_json(cf);
    return r;
}

Report cmd_synth(const std::string &file) {
    AffineRelation rel = parsed(file, [](const std::string &t) { return parse_relation(t); });
    Circuit c;
    try {
        c = synth(rel);
    } catch (const SynthError &e) {
        throw InputError(file + ": " + e.what());
    }
    Report r;
    r.text = print_circuit(c, "synth");
    r.data = circuit_json(c, "synth");
    return r;
}

Report cmd_verify(uint64_t seed) {
    std::vector<LawResult> results;
    for (const RuleCheck &rc : verify_all()) {
        LawResult lr(rc.name);
        lr.cases = 2;
        if (!rc.semantic_equal) {
            lr.failure = "sides differ semantically";
        } else if (!rc.state_map_equal) {
            lr.failure = "sides differ on some input state";
        }
        results.push_back(lr);
    }
    auto add = [&](std::vector<LawResult> more) { results.insert(results.end(), more.begin(), more.end()); };
    add(copy_laws(3, seed));
    add(torsor_laws(3));
    add({plus_naturality(seed, 100)});
    add(inverse_laws(seed, 500));
    add({oracle_agreement(seed, 1000)});
    add({total_or_degenerate(seed, 500)});
    add({synth_round_trip(seed, 500)});
    add({clause_mixing(seed, 200)});
    add({worked_elimination(), worked_synthesis()});

    Report r;
    std::ostringstream out;
    json checks = json::array();
    size_t failed = 0;
    for (const LawResult &lr : results) {
        out << (lr.passed() ? "ok   " : "FAIL ") << lr.name << " (" << lr.cases << " cases)";
        if (lr.failure) {
            out << ": " << *lr.failure;
            failed++;
        }
        out << "\n";
        checks.push_back(law_json(lr));
    }
    out << "seed " << seed << ": " << results.size() - failed << "/" << results.size() << " checks passed\n";
    r.code = failed ? 1 : 0;
    r.text = out.str();
    r.data = {{"seed", seed}, {"checks", checks}, {"passed", failed == 0}};
    return r;
}

Report cmd_replay(const std::string &file, const std::string &deriv) {
    NamedCircuit start = load_circuit(file);
    std::vector<DerivationStep> steps =
        parsed(deriv, [](const std::string &t) { return parse_derivation(t); });
    Report r;
    std::ostringstream out;
    json chain = json::array();
    out << "# start\n" << print_circuit(start.circuit, start.name);
    chain.push_back({{"step", 0}, {"circuit", circuit_json(start.circuit, start.name)}});
    Circuit cur = start.circuit;
    for (size_t i = 0; i < steps.size(); i++) {
        const DerivationStep &st = steps[i];
        std::string label = print_derivation({st});
        label.pop_back();
        std::optional<Circuit> next;
        try {
            next = apply_at(cur, find_rule(st.rule), st.offset, st.dir, st.wires);
        } catch (const RewriteError &e) {
            throw InputError(deriv + ": step " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!next) {
            std::string msg = "step " + std::to_string(i + 1) + ": " + label + " does not match";
            out << "# " << msg << "\n";
            r.code = 1;
            r.text = out.str();
            r.data = {{"steps", chain}, {"ok", false}, {"error", msg}};
            return r;
        }
        cur = *next;
        out << "# step " << i + 1 << ": " << label << "\n" << print_circuit(cur, start.name);
        chain.push_back({{"step", i + 1}, {"rule", label}, {"circuit", circuit_json(cur, start.name)}});
    }
    out << "# replayed " << steps.size() << " steps\n";
    r.text = out.str();
    r.data = {{"steps", chain}, {"ok", true}};
    return r;
}

Report cmd_fuzz(size_t wires, size_t depth, uint64_t seed, size_t trials) {
    if (wires > kMaxFuzzWires) {
        throw InputError("--wires is at most " + std::to_string(kMaxFuzzWires));
    }
    if (depth > kMaxFuzzDepth) {
        throw InputError("--depth is at most " + std::to_string(kMaxFuzzDepth));
    }
    Report r;
    std::ostringstream out;
    out << "fuzz seed=" << seed << " wires=" << wires << " depth=" << depth << " trials=" << trials << "\n";
    r.data = {{"seed", seed}, {"wires", wires}, {"depth", depth}, {"trials", trials}};
    for (size_t t = 0; t < trials; t++) {
        Circuit c = fuzz_circuit(seed, t, wires, depth);
        if (std::optional<std::string> problem = fuzz_check(c)) {
            out << "counterexample at trial " << t << ": " << *problem << "\n" << print_circuit(c, "counterexample");
            r.code = 1;
            r.text = out.str();
            r.data["passed"] = false;
            r.data["trial"] = t;
            r.data["problem"] = *problem;
            r.data["counterexample"] = circuit_json(c, "counterexample");
            return r;
        }
    }
    out << "all " << trials << " trials passed\n";
    r.text = out.str();
    r.data["passed"] = true;
    return r;
}

size_t int_arg(const std::vector<std::string> &args, size_t i, const std::string &what) {
    if (i >= args.size()) {
        throw InputError("construct: missing " + what);
    }
    const std::string &s = args[i];
    if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw InputError("construct: " + what + " must be an integer below 10000, got '" + s + "'");
    }
    return std::stoul(s);
}

Report cmd_construct(const std::string &kind, const std::vector<std::string> &args) {
    auto arity = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw InputError("construct " + kind + ": wrong number of arguments");
        }
    };
    Circuit c;
    try {
        if (kind == "fanout" || kind == "fanin" || kind == "plus") {
            arity(1, 1);
            size_t n = int_arg(args, 0, "n");
            c = kind == "fanout" ? fanout(n) : kind == "fanin" ? fanin(n) : plus_map(n);
        } else if (kind == "omega") {
            arity(0, 2);
            if (args.size() == 1) {
                throw InputError("construct omega takes no arguments or both n and m");
            }
            c = args.empty() ? omega() : omega_nm(int_arg(args, 0, "n"), int_arg(args, 1, "m"));
        } else if (kind == "hat") {
            arity(1, 1);
            c = hat(parse_bits(args[0]));
        } else if (kind == "clause") {
            if (args.size() < 2) {
                throw InputError("construct clause takes n, rhs and wires");
            }
            size_t n = int_arg(args, 0, "n");
            size_t rhs = int_arg(args, 1, "rhs");
            if (rhs > 1) {
                throw InputError("construct clause: rhs must be 0 or 1");
            }
            std::vector<size_t> support;
            for (size_t i = 2; i < args.size(); i++) {
                support.push_back(int_arg(args, i, "wire"));
            }
            c = clause_circuit(support, rhs == 1, n);
        } else {
            throw InputError("construct: unknown construction '" + kind + "'");
        }
    } catch (const ParseError &e) {
        throw InputError(std::string("construct hat: ") + e.what());
    } catch (const InputError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InputError("construct " + kind + ": " + e.what());
    } catch (const std::out_of_range &e) {
        throw InputError("construct " + kind + ": " + e.what());
    }
    std::string name = kind;
    for (const std::string &a : args) {
        name += "_" + a;
    }
    if (name == "hat_") {
        name = "hat";
    }
    Report r;
    r.text = print_circuit(c, name);
    r.data = circuit_json(c, name);
    return r;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Tools for CNOT circuits and their affine relation semantics.", "cnotcalc"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON report");

    std::string file, file2, input, kind;
    std::vector<std::string> construct_args;
    uint64_t seed = 0;
    size_t wires = 5, depth = 30, trials = 1000;

    CLI::App *eval = app.add_subcommand("eval", "Evaluate a circuit on one input state");
    eval->add_option("FILE", file, "Circuit file")->required();
    eval->add_option("--input", input, "Input bits, wire 0 first")->required();

    CLI::App *sem = app.add_subcommand("semantics", "Print the canonical relation of a circuit");
    sem->add_option("FILE", file, "Circuit file")->required();

    CLI::App *equal = app.add_subcommand("equal", "Decide whether two circuits are equal");
    equal->add_option("FILE1", file, "Circuit file")->required();
    equal->add_option("FILE2", file2, "Circuit file")->required();

    CLI::App *norm = app.add_subcommand("normalize", "Canonical clause circuit of an idempotent or a system");
    norm->add_option("FILE", file, "Circuit or system file")->required();

    CLI::App *syn = app.add_subcommand("synth", "Synthesize a circuit from a relation");
    syn->add_option("FILE", file, "Relation file")->required();

    CLI::App *verify = app.add_subcommand("verify", "Check rules, fixtures and laws");
    verify->add_option("--seed", seed, "Seed for the randomized suites");

    CLI::App *rep = app.add_subcommand("replay", "Replay a derivation");
    rep->add_option("FILE", file, "Start circuit")->required();
    rep->add_option("DERIVATION", file2, "Derivation file")->required();

    CLI::App *fuzz = app.add_subcommand("fuzz", "Random circuits against the brute-force evaluator");
    fuzz->add_option("--wires", wires, "Maximum input wires")->capture_default_str();
    fuzz->add_option("--depth", depth, "Gates per circuit")->capture_default_str();
    fuzz->add_option("--seed", seed, "Seed")->capture_default_str();
    fuzz->add_option("--trials", trials, "Number of circuits")->capture_default_str();

    CLI::App *cons = app.add_subcommand("construct", "Print a built-in circuit");
    cons->add_option("KIND", kind, "fanout, fanin, omega, plus, hat or clause")->required();
    cons->add_option("ARGS", construct_args, "Arguments of the construction");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Report report;
    try {
        if (*eval) {
            report = cmd_eval(file, input);
        } else if (*sem) {
            report = cmd_semantics(file);
        } else if (*equal) {
            report = cmd_equal(file, file2);
        } else if (*norm) {
            report = cmd_normalize(file);
        } else if (*syn) {
            report = cmd_synth(file);
        } else if (*verify) {
            report = cmd_verify(seed);
        } else if (*rep) {
            report = cmd_replay(file, file2);
        } else if (*fuzz) {
            report = cmd_fuzz(wires, depth, seed, trials);
        } else {
            report = cmd_construct(kind, construct_args);
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        if (as_json) {
            out << json{{"error", e.what()}}.dump(2) << "\n";
        }
        return 2;
    }
    if (as_json) {
        out << report.data.dump(2) << "\n";
    } else {
        out << report.text;
    }
    return report.code;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; i++) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace cnotcalc
