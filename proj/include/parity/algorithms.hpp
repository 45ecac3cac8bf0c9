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

#include <set>
#include <utility>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/code.hpp"
#include "parity/simulator.hpp"

namespace parity {

// A physical circuit together with the layout it runs on.
struct Compiled {
  ParityLayout layout;
  Circuit circuit;
};

// H and controlled-R_k over `order`, where order[0] is treated as the most
// significant qubit. No terminal swaps.
Circuit qft_logical(int n, const std::vector<int>& order);
// Register (0)..(n-1) in natural order.
Circuit qft_logical(int n);
Circuit inverse_qft_logical(int n, const std::vector<int>& order);

// QFT on lhz_layout(n), with cancellation and merging applied.
Compiled qft_parity(int n);

// Both registers are little-endian: bit p of a on logical index p, bit j of b
// on index n + j. The sum is written into the first register.
Circuit draper_core_logical(int n);
Circuit draper_addition_logical(int n);
// Controlled phases of the Fourier-space addition only, on
// addition_layout(n, register_internal).
Compiled draper_core_step(int n, bool register_internal);
// Full adder. Needs the R1-internal block for n >= 2 and throws
// std::invalid_argument otherwise.
Compiled draper_addition(int n, bool register_internal);
// |a>|b> -> |a+b mod 2^n>|b> on 2n logical qubits.
LogicalOp addition_op(int n);

// Phase `phi` on the all-ones state of the m controls and the target, using
// m-1 ancillas that must start and end in |0>. Indices follow grover_indices.
Compiled multi_controlled_phase(int m, double phi);
// Logical circuit with the same ladder structure, valid for any ancilla input.
Circuit multi_controlled_phase_logical(int m, double phi);
// Reflection about the uniform state of n_total qubits, as H X [MCP(pi)] X H
// around multi_controlled_phase(n_total - 1, pi).
Compiled grover_diffusion(int n_total);
Circuit grover_diffusion_logical(int n_total);

struct IsingModel {
  int n = 0;
  std::vector<std::pair<std::vector<int>, double>> terms;
};

struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;
};

// Problem layer RZ(2 gamma J) on the qubit of each term, then the driver
// RX(2 beta) on every logical line, for each of the p layers.
Circuit qaoa_step(const IsingModel& model, const QaoaParams& params, const ParityLayout& layout);
// Driver alone, chains interleaved line by line.
Circuit qaoa_driver(const ParityLayout& layout, double beta);
// exp(-i beta_p H_X) exp(-i gamma_p H_Z) ... exp(-i beta_1 H_X) exp(-i gamma_1 H_Z).
LogicalOp qaoa_logical(const IsingModel& model, const QaoaParams& params);
// Gate-level form of qaoa_logical for models with one- and two-body terms.
Circuit qaoa_logical_circuit(const IsingModel& model, const QaoaParams& params);

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Throws std::invalid_argument for self-loops, repeated edges or indices out
// of range.
void validate_graph(const Graph& g);
// For each edge (i,j) every pair (k,m) with i <= k < m <= j, so that the
// encoding staircase can reach (i,j) from neighbours.
std::set<QubitLabel> graph_closure_labels(const Graph& g);
ParityLayout graph_layout(const Graph& g);

// CNOTs writing every parity qubit of `layout` from data qubits in |x>.
Circuit encoding_circuit(const ParityLayout& layout);
Circuit decoding_circuit(const ParityLayout& layout);

// H on data, encoding, then one RZ layer for all CZ edges. With `decode` the
// decoding circuit is appended.
Compiled graph_state_prep(const Graph& g, bool decode = false);
// H on all qubits followed by CZ on every edge.
Circuit graph_state_logical(const Graph& g);

}  // namespace parity
