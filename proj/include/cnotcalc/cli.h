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

#ifndef CNOTCALC_CLI_H
#define CNOTCALC_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace cnotcalc {

/// Runs one command line; args excludes the program name. Returns 0 on
/// success or a true answer, 1 on a false answer or failed check, and 2 on
/// bad input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cnotcalc

#endif
