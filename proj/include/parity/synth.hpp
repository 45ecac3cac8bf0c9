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

#include <optional>
#include <set>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/code.hpp"

namespace parity {

// Split of logical line i at the root of a CNOT chain.
struct SynthesisPlan {
  int logical_index;
  QubitLabel root;
  std::vector<QubitLabel> before;  // line members preceding the root, in line order
  std::vector<QubitLabel> after;   // line members following the root, in line order
};

// Which segment is emitted first in the fan-in and in the fan-out.
struct ChainOrder {
  bool after_first_in = true;
  bool after_first_out = true;
};

// Throws std::invalid_argument if `root` is not on line i. Without a root the
// middle member (rounded toward the line start) is used.
SynthesisPlan plan_chain(const ParityLayout& layout, int i, std::optional<QubitLabel> root = {});

// Fan-in maps X on the root to X on the whole line under conjugation; the
// root is the control of both segment gates that touch it.
void emit_fan_in(Circuit& circuit, const SynthesisPlan& plan, bool after_first);
void emit_fan_out(Circuit& circuit, const SynthesisPlan& plan, bool after_first);

// Empty physical circuit over layout.qubits().
Circuit layout_circuit(const ParityLayout& layout);

Circuit synth_rz(const ParityLayout& layout, int i, double alpha);
Circuit synth_rx(const ParityLayout& layout, int i, double alpha,
                 std::optional<QubitLabel> root = {}, ChainOrder order = {});
// Logical Rz(alpha) Rx(beta) Rz(gamma). Without a root every root and chain
// order is tried and the shallowest schedule kept.
Circuit synth_unitary(const ParityLayout& layout, int i, double alpha, double beta, double gamma,
                      std::optional<QubitLabel> root = {});
// Logical Hadamard as a physical H on the data qubit inside the chain.
Circuit synth_hadamard(const ParityLayout& layout, int i, ChainOrder order = {});
// Logical X: X on every member of line i.
Circuit synth_x(const ParityLayout& layout, int i);
Circuit synth_cphase(const ParityLayout& layout, int i, int j, double phi);
Circuit synth_cnot(const ParityLayout& layout, int control, int target);

// The four factors of the derived two-controlled phase, in order.
struct CcpParts {
  int data_role;  // index whose data qubit takes the physical CP
  Circuit cp_ij;
  Circuit cp_ik;
  Circuit flipped_cp;  // X(jk) CP((i),(jk)) X(jk)
  Circuit phase;       // P(-phi/2) on (i)
};
CcpParts synth_ccp_parts(const ParityLayout& layout, int i, int j, int k, double phi);
Circuit synth_ccp(const ParityLayout& layout, int i, int j, int k, double phi);
Circuit synth_toffoli(const ParityLayout& layout, int i, int j, int k_target);
// exp(i phi Z...Z) over `indices`, a single RZ(-2 phi) on the matching qubit.
Circuit synth_higher_order_rz(const ParityLayout& layout, const std::vector<int>& indices, double phi);

Circuit apply_negative_controls(const Circuit& circuit, const ParityLayout& layout,
                                const std::set<int>& negated, const std::set<QubitLabel>& touched);
// Uses every qubit the circuit acts on as `touched`.
Circuit apply_negative_controls(const Circuit& circuit, const ParityLayout& layout,
                                const std::set<int>& negated);

// Gate-by-gate translation of a logical circuit; no passes are run.
Circuit compile_logical(const Circuit& logical, const ParityLayout& layout);

}  // namespace parity
