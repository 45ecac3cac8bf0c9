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
#include <vector>

#include "parity/code.hpp"

namespace parity {

// Full LHZ layout with data qubits. Parity qubit (i,j), i<j, sits at (j,i) and
// data qubit (i) at (i,i). Line i runs up column i, through (i), then along
// row i, so lines i and j meet exactly at (i,j).
ParityLayout lhz_layout(int n);

// Data qubits plus the given two-body labels at their LHZ positions. Lines are
// ordered as in lhz_layout. Throws std::invalid_argument listing every
// violation if the result is not a valid layout.
ParityLayout reduced_layout(int n, const std::set<QubitLabel>& required_labels,
                            const std::vector<Constraint>& constraints);

// Two n-qubit registers: R1 holds logical indices 0..n-1, R2 holds n..2n-1.
// With `register_internal` the R1-internal LHZ block is present (needed for a
// Fourier transform on R1), giving 3n(n+1)/2 qubits. Without it only the
// inter-register block and both data registers remain, n(n+2) qubits.
ParityLayout addition_layout(int n, bool register_internal);

struct GroverIndices {
  std::vector<int> controls;  // m controls
  int target;
  std::vector<int> ancillas;  // m-1 ancillas
};
GroverIndices grover_indices(int m);

// Reduced layout carrying exactly the qubits used by the Toffoli ladder of an
// m-controlled phase gate.
ParityLayout grover_layout(int m);

// Number of qubits whose label names at least one ancilla index.
int grover_ancilla_qubit_count(const ParityLayout& layout, int m);

}  // namespace parity
