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

#include <fstream>
#include <sstream>

#include "cnotcalc/constructions.h"
#include "cnotcalc/synth.h"
#include "cnotcalc/text_format.h"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace cnotcalc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) { return std::string(CNOTCALC_FIXTURES) + "/" + name; }

std::string temp_file(const std::string &name, const std::string &content) {
    std::string path = testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli, equal_swap_rule) {
    Result r = cli({"equal", fixture("cnt1_lhs.cnot"), fixture("cnt1_rhs.cnot")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "equal\n");
    r = cli({"equal", fixture("cnt1_lhs.cnot"), temp_file("id2.cnot", "circuit id : 2 -> 2\nend\n")});
    ASSERT_EQ(r.code, 1);
    ASSERT_EQ(r.out, "unequal\n");
}

TEST(cli, eval) {
    Result r = cli({"eval", fixture("omega.cnot"), "--input", ""});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "undefined\n");
    r = cli({"eval", fixture("fanout1.cnot"), "--input", "1"});
    ASSERT_EQ(r.out, "11\n");
    r = cli({"eval", fixture("fanout1.cnot"), "--input", "10"});
    ASSERT_EQ(r.code, 2);
    r = cli({"eval", fixture("fanout1.cnot"), "--input", "2"});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find("column 1"), std::string::npos);
}

TEST(cli, semantics_is_canonical) {
    Result r = cli({"semantics", fixture("fanout1.cnot")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "graph 1 2\nparity x0 y0 = 0\nparity x0 y1 = 0\n");
    r = cli({"--json", "semantics", fixture("fanout1.cnot")});
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["n_out"], 2);
    ASSERT_EQ(j["parities"].size(), 2u);
    ASSERT_EQ(j["parities"][1]["outputs"][0], 1);
}

TEST(cli, parse_errors_exit_2) {
    std::string bad = temp_file("bad.cnot", "circuit b : 2 -> 2\ncnot 0 2\nend\n");
    Result r = cli({"semantics", bad});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find("line 2, column 1"), std::string::npos);
    ASSERT_NE(r.err.find("cnot 0 2"), std::string::npos);
    ASSERT_EQ(cli({"semantics", "/nonexistent/file"}).code, 2);
    ASSERT_EQ(cli({}).code, 2);
    ASSERT_EQ(cli({"eval"}).code, 2);
    ASSERT_EQ(cli({"--help"}).code, 0);
}

TEST(cli, normalize) {
    Result a = cli({"normalize", fixture("two_clauses.sys")});
    ASSERT_EQ(a.code, 0);
    NamedCircuit c = parse_circuit(a.out);
    ClausalForm expected{3, {{{0, 2}, true}, {{1, 2}, true}}};
    ASSERT_EQ(c.circuit, clausal_to_circuit(expected));

    Circuit idem = compose_circ(clausal_to_circuit(expected), clause_circuit({0, 1}, false, 3));
    Result b = cli({"normalize", temp_file("idem.cnot", print_circuit(idem, "idem"))});
    ASSERT_EQ(parse_circuit(b.out).circuit, c.circuit);

    ASSERT_EQ(cli({"normalize", fixture("cnt1_lhs.cnot")}).code, 2);
}

TEST(cli, synth) {
    Result r = cli({"synth", fixture("partial_map.rel")});
    ASSERT_EQ(r.code, 0);
    Circuit c = parse_circuit(r.out).circuit;
    std::ifstream in(fixture("partial_map.rel"));
    std::stringstream text;
    text << in.rdbuf();
    ASSERT_EQ(semantics(c), parse_relation(text.str()));
    Result bad = cli({"synth", temp_file("proj.rel", "graph 2 1\nparity x0 x1 y0 = 0\n")});
    ASSERT_EQ(bad.code, 2);
    ASSERT_NE(bad.err.find("direction"), std::string::npos);
}

TEST(cli, replay) {
    Result r = cli({"replay", fixture("omega_omega.cnot"), fixture("omega_absorb.deriv")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string last = r.out.substr(r.out.rfind("circuit "));
    last = last.substr(0, last.find("end\n") + 4);
    ASSERT_EQ(parse_circuit(last).circuit, omega());

    Result bad = cli({"replay", fixture("omega_omega.cnot"), temp_file("bad.deriv", "CNT1 0 lr\n")});
    ASSERT_EQ(bad.code, 1);
    ASSERT_NE(bad.out.find("step 1: CNT1 0 lr does not match"), std::string::npos);
    ASSERT_EQ(cli({"replay", fixture("omega_omega.cnot"), temp_file("unk.deriv", "XYZ 0 lr\n")}).code, 2);
}

TEST(cli, fuzz_is_deterministic) {
    Result a = cli({"fuzz", "--trials", "40", "--seed", "5"});
    Result b = cli({"fuzz", "--trials", "40", "--seed", "5"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(a.out, "fuzz seed=5 wires=5 depth=30 trials=40\nall 40 trials passed\n");
    Result j = cli({"fuzz", "--trials", "3", "--json"});
    ASSERT_EQ(nlohmann::json::parse(j.out)["passed"], true);
    ASSERT_EQ(cli({"fuzz", "--wires", "99"}).code, 2);
}

TEST(cli, verify) {
    Result a = cli({"verify"});
    ASSERT_EQ(a.code, 0) << a.out;
    ASSERT_NE(a.out.find("ok   CNT9"), std::string::npos);
    ASSERT_EQ(a.out, cli({"verify"}).out);
    nlohmann::json j = nlohmann::json::parse(cli({"verify", "--json"}).out);
    ASSERT_EQ(j["passed"], true);
}

TEST(cli, construct) {
    Result r = cli({"construct", "fanout", "2"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(parse_circuit(r.out).circuit, fanout(2));
    ASSERT_EQ(parse_circuit(cli({"construct", "fanin", "1"}).out).circuit, fanin(1));
    ASSERT_EQ(parse_circuit(cli({"construct", "omega"}).out).circuit, omega());
    ASSERT_EQ(parse_circuit(cli({"construct", "omega", "2", "1"}).out).circuit, omega_nm(2, 1));
    ASSERT_EQ(parse_circuit(cli({"construct", "plus", "2"}).out).circuit, plus_map(2));
    ASSERT_EQ(parse_circuit(cli({"construct", "hat", "101"}).out).circuit, hat(BitVec{1, 0, 1}));
    ASSERT_EQ(parse_circuit(cli({"construct", "clause", "3", "1", "0", "2"}).out).circuit,
              clause_circuit({0, 2}, true, 3));
    ASSERT_EQ(cli({"construct", "clause", "3", "1", "0", "7"}).code, 2);
    ASSERT_EQ(cli({"construct", "omega", "1"}).code, 2);
    ASSERT_EQ(cli({"construct", "toffoli"}).code, 2);
    ASSERT_EQ(cli({"construct", "fanout", "x"}).code, 2);
}
