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

#ifndef CNOTCALC_TEXT_FORMAT_H
#define CNOTCALC_TEXT_FORMAT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnotcalc/affine_relation.h"
#include "cnotcalc/circuit.h"
#include "cnotcalc/normalize.h"
#include "cnotcalc/rewrite.h"

namespace cnotcalc {

/// Positions are 1-based. what() reads "line L, column C: message".
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line, size_t column);
    size_t line() const { return line_; }
    size_t column() const { return column_; }

   private:
    size_t line_;
    size_t column_;
};

/// Largest wire count accepted by the parsers.
inline constexpr size_t kMaxParsedWidth = 4096;

struct NamedCircuit {
    std::string name;
    Circuit circuit;
};

/// circuit <name> : <n_in> -> <n_out>
///   cnot c t | swap a b | init1 p | post1 p | init0 p | post0 p | not p
/// end
///
/// '#' starts a comment. Macro gates are expanded on parsing.
NamedCircuit parse_circuit(std::string_view text);
/// Prints primitive gates only.
std::string print_circuit(const Circuit &c, const std::string &name = "c");

/// Either
///   graph <n> <m>
///   parity x0 y1 ... = <0|1>
/// or
///   affine <n> <m>
///   y0 = x0 x2 1
///   parity x1 = 0
/// where y lines give the map (missing outputs are 0) and parity lines over
/// x restrict its domain. An optional `end` closes either block.
AffineRelation parse_relation(std::string_view text);
/// `graph n m` then one parity line per row of the system reduced with the
/// output columns first. Each line lists x variables before y variables.
/// The empty relation prints `parity = 1`.
std::string print_relation(const AffineRelation &r);
/// The reduced system behind print_relation, columns y0.., x0.., rhs.
GF2Matrix outputs_first_system(const AffineRelation &r);

/// system <n>
/// parity 0 2 = 1
/// Clauses are kept as written.
ClausalForm parse_system(std::string_view text);
std::string print_system(const ClausalForm &cf);

/// One step per line: <rule> <offset> <lr|rl> [wire ...]
std::vector<DerivationStep> parse_derivation(std::string_view text);
std::string print_derivation(const std::vector<DerivationStep> &steps);

/// Wire 0 leftmost. Only '0' and '1' are accepted.
BitVec parse_bits(std::string_view text);

}  // namespace cnotcalc

#endif
