// Copyright 2026 The Parity Compiler Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "parity/circuit.hpp"
#include "parity/code.hpp"

namespace parity {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"version": 1, "space": ..., "register": [[...]...], "gates": [...]}.
// Angles are written with 17 significant digits. A nonzero global phase is
// carried in an optional "global_phase" member.
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(std::string_view text);

// {"n": ..., "qubits": [...], "positions": [[x,y]...], "constraints": [[refs]...],
//  "lines": [[refs]...]} with refs being positions in "qubits".
std::string layout_to_json(const ParityLayout& layout);
ParityLayout layout_from_json(std::string_view text);

// ASCII grid, one cell per site, rows printed top (largest y) first.
std::string render_layout(const ParityLayout& layout);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace parity
