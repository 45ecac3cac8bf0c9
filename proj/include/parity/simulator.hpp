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

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/code.hpp"

namespace parity {

using Amplitude = std::complex<double>;

// Raised when a register would exceed the simulator cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by decode() when the state has support outside the code space.
struct LeakageError : std::runtime_error {
  LeakageError(const std::string& what, double leakage) : std::runtime_error(what), leakage(leakage) {}
  double leakage;
};

// Maximum register size: PARITY_SIM_CAP if set, else 22.
size_t simulator_cap();

// Dense state over an ordered register. Register qubit k is bit k of the
// amplitude index.
class StateVector {
 public:
  // |0...0>. Throws ResourceError above the cap.
  explicit StateVector(std::vector<QubitLabel> reg);
  static StateVector basis(std::vector<QubitLabel> reg, uint64_t index);
  // Register (0), ..., (n-1).
  static std::vector<QubitLabel> logical_register(int n);

  const std::vector<QubitLabel>& qubits() const { return register_; }
  size_t num_qubits() const { return register_.size(); }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm() const;

 private:
  std::vector<QubitLabel> register_;
  std::vector<Amplitude> amps_;
};

// In-place application. Circuit qubits are matched to state qubits by label.
void apply_in_place(const Circuit& circuit, StateVector& state);
StateVector apply(const Circuit& circuit, StateVector state);

// Inner product <a|b>; registers must match.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// Encoding isometry. `logical_state` must be over logical_register(n).
StateVector encode(const ParityLayout& layout, const StateVector& logical_state);
// Inverse of encode on its image; throws LeakageError when more than 1e-10 of
// the norm lies outside the code space.
StateVector decode(const ParityLayout& layout, const StateVector& physical_state);
// Squared norm outside the image of encode.
double code_space_leakage(const ParityLayout& layout, const StateVector& physical_state);
// Max over constraints of ||C|psi> - |psi>||.
double check_stabilizers(const ParityLayout& layout, const StateVector& physical_state);

using LogicalOp = std::function<StateVector(const StateVector&)>;
LogicalOp logical_op_from_circuit(const Circuit& logical);

struct EquivalenceOptions {
  uint64_t seed = 0;
  int random_states = 2;
};

struct EquivalenceResult {
  double fidelity = 0;              // min over inputs after one common phase
  double stabilizer_deviation = 0;  // max over outputs
};

// Compares U_phys E with E U_log on every logical basis state plus random
// superpositions. One global phase, taken from the input with the largest
// overlap, is shared by all inputs, so relative phases between inputs count.
EquivalenceResult verify_equivalence(const LogicalOp& logical, const Circuit& physical,
                                     const ParityLayout& layout, const EquivalenceOptions& options = {});
EquivalenceResult verify_equivalence(const Circuit& logical, const Circuit& physical,
                                     const ParityLayout& layout, const EquivalenceOptions& options = {});

// Min over a spanning set of |<a|b>| style agreement between two circuits on
// the same register, with one shared global phase.
double circuit_fidelity(const Circuit& a, const Circuit& b, const EquivalenceOptions& options = {});

// Binary dump: uint64 qubit count, then interleaved real/imag doubles, all
// little-endian.
void write_state_dump(std::ostream& out, const StateVector& state);
std::vector<Amplitude> read_state_dump(std::istream& in, uint64_t* num_qubits);

}  // namespace parity
