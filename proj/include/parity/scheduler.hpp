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

#include <string>
#include <vector>

#include "json.hpp"
#include "parity/circuit.hpp"

namespace parity {

struct ResourceStats {
  int depth = 0;
  int cnot_count = 0;
  int cp_count = 0;
  int single_qubit_count = 0;
  int total_gates = 0;  // cnot + cp + single-qubit
  int qubit_count = 0;  // register size
  bool operator==(const ResourceStats&) const = default;
};

struct ScheduledCircuit {
  Circuit circuit;
  // Gate indices into circuit.gates(), one vector per time step.
  std::vector<std::vector<size_t>> layers;
  ResourceStats stats;
};

// Removes CNOT pairs with equal control and target when everything between
// them acts on other qubits or is an RZ on the control. Repeats to a fixpoint.
Circuit cancel_adjacent_cnots(const Circuit& circuit);

// Folds each RZ into the previous RZ on the same qubit when only gates on
// other qubits, or CNOTs controlled by that qubit, lie between them. RZ
// angles equal to 0 are dropped; angles equal to 2pi are dropped into the
// global phase.
Circuit merge_rz(const Circuit& circuit);

// cancel_adjacent_cnots then merge_rz until neither changes the circuit.
Circuit apply_passes(const Circuit& circuit);

// ASAP placement with unit-time gates: each gate goes one step after the
// latest step already used by any of its qubits.
ScheduledCircuit schedule(const Circuit& circuit);

ResourceStats resource_stats(const Circuit& circuit);

enum class IndexConvention { kZeroBased, kOneBased };
// Convention under which cnot_depth_formula reads its arguments by default:
// c and t are shifted to 1-based before evaluation.
inline constexpr IndexConvention kPinnedConvention = IndexConvention::kOneBased;

// 2(ceil(n/2) + floor(max(|n/2-c|, |n/2-t|)) + k) + 3 with k = 1 iff the two
// distances are equal. c and t are 0-based inputs; `convention` decides how
// they enter the formula. Throws std::invalid_argument for c == t or
// out-of-range indices.
int cnot_depth_formula(int n, int c, int t, IndexConvention convention = kPinnedConvention);

nlohmann::json stats_json(const ResourceStats& s);
// Two-column aligned table with the row labels of the resource tables.
std::string stats_table(const ResourceStats& s);

}  // namespace parity
