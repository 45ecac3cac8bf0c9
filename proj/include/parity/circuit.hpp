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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parity/code.hpp"

namespace parity {

enum class Space { kLogical, kPhysical };

enum class GateKind { kRX, kRZ, kH, kCNOT, kCP, kX };

std::string_view gate_name(GateKind kind);
// Throws std::invalid_argument for unknown names.
GateKind gate_kind_from_name(std::string_view name);
bool is_two_qubit(GateKind kind);
bool has_angle(GateKind kind);

// Reduces an angle into (-2pi, 2pi]. Every gate angle in the set has period
// dividing 4pi, so this never changes the operator.
double canonical_angle(double angle);

// Gates reference qubits by register position. For CNOT, q0 is the control.
struct Gate {
  GateKind kind;
  uint32_t q0;
  uint32_t q1;
  double angle;

  static Gate rx(uint32_t q, double angle) { return {GateKind::kRX, q, q, canonical_angle(angle)}; }
  static Gate rz(uint32_t q, double angle) { return {GateKind::kRZ, q, q, canonical_angle(angle)}; }
  static Gate h(uint32_t q) { return {GateKind::kH, q, q, 0}; }
  static Gate x(uint32_t q) { return {GateKind::kX, q, q, 0}; }
  static Gate cnot(uint32_t control, uint32_t target) {
    return {GateKind::kCNOT, control, target, 0};
  }
  static Gate cp(uint32_t a, uint32_t b, double angle) {
    return {GateKind::kCP, a, b, canonical_angle(angle)};
  }

  bool two_qubit() const { return is_two_qubit(kind); }
  bool touches(uint32_t q) const { return q0 == q || (two_qubit() && q1 == q); }
  bool operator==(const Gate&) const = default;
};

// Ordered gate list over a fixed register. Logical circuits use single-index
// labels (i) for logical qubit i.
class Circuit {
 public:
  Circuit(Space space, std::vector<QubitLabel> reg);
  // Register (0), (1), ..., (n-1).
  static Circuit logical(int n);

  Space space() const { return space_; }
  const std::vector<QubitLabel>& qubits() const { return register_; }
  size_t num_qubits() const { return register_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // Phase e^{i*global_phase} by which the gate list must be multiplied to
  // equal the intended operator. Metadata only.
  double global_phase() const { return global_phase_; }
  void add_global_phase(double phase) { global_phase_ += phase; }
  void set_global_phase(double phase) { global_phase_ = phase; }

  size_t index_of(const QubitLabel& label) const;
  bool contains(const QubitLabel& label) const { return index_.count(label) != 0; }

  // Validates register bounds and distinct operands.
  void add(const Gate& gate);
  void rx(const QubitLabel& q, double angle);
  void rz(const QubitLabel& q, double angle);
  void h(const QubitLabel& q);
  void x(const QubitLabel& q);
  void cnot(const QubitLabel& control, const QubitLabel& target);
  void cp(const QubitLabel& a, const QubitLabel& b, double angle);

  // Appends `other` gate by gate, translating through qubit labels; every
  // label of `other` must be in this register. Global phases add.
  void append(const Circuit& other);
  // Same register and space, empty gate list, zero phase.
  Circuit empty_copy() const;
  void replace_gates(std::vector<Gate> gates);

 private:
  Space space_;
  std::vector<QubitLabel> register_;
  std::map<QubitLabel, uint32_t> index_;
  std::vector<Gate> gates_;
  double global_phase_ = 0;
};

// Gate-by-gate adjacency check of a physical circuit against its layout.
// CNOT needs Manhattan neighbors; CP may also act across a plaquette diagonal.
std::vector<std::string> check_adjacency(const Circuit& circuit, const ParityLayout& layout);

}  // namespace parity
