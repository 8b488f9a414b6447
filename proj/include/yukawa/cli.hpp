// Copyright 2026 The yukawa-circuits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "yukawa/statevector.hpp"

namespace yukawa::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kResource = 3, kInvariant = 4 };

/// Initial state from the command-line mini-language: fermion one of
/// 0, 1, +, -; boson a Fock index, "+" for the uniform superposition, or
/// "amps:" followed by real amplitudes indexed by Fock number.
Statevector parse_initial_state(const std::string& fermion, const std::string& boson, int n_boson_qubits);

/// Full-register state from JSON: {"amplitudes": [re | [re, im], ...]}.
Statevector parse_state_json(const std::string& text, int n_qubits);

/// Runs the `yukawa` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yukawa::cli
