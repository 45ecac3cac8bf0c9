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

#include "parity/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parity {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kRX:
      return "RX";
    case GateKind::kRZ:
      return "RZ";
    case GateKind::kH:
      return "H";
    case GateKind::kCNOT:
      return "CNOT";
    case GateKind::kCP:
      return "CP";
    case GateKind::kX:
      return "X";
  }
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  for (GateKind k : {GateKind::kRX, GateKind::kRZ, GateKind::kH, GateKind::kCNOT, GateKind::kCP,
                     GateKind::kX}) {
    if (gate_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::kCNOT || kind == GateKind::kCP; }

bool has_angle(GateKind kind) {
  return kind == GateKind::kRX || kind == GateKind::kRZ || kind == GateKind::kCP;
}

double canonical_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("gate angle must be finite");
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double a = std::fmod(angle, 2 * kTwoPi);
  if (a > kTwoPi) a -= 2 * kTwoPi;
  if (a <= -kTwoPi) a += 2 * kTwoPi;
  return a;
}

Circuit::Circuit(Space space, std::vector<QubitLabel> reg) : space_(space), register_(std::move(reg)) {
  for (size_t k = 0; k < register_.size(); k++) {
    if (!index_.emplace(register_[k], static_cast<uint32_t>(k)).second) {
      throw std::invalid_argument("qubit " + register_[k].str() + " appears twice in register");
    }
  }
}

Circuit Circuit::logical(int n) {
  std::vector<QubitLabel> reg;
  for (int i = 0; i < n; i++) reg.push_back(QubitLabel{i});
  return Circuit(Space::kLogical, std::move(reg));
}

size_t Circuit::index_of(const QubitLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw std::invalid_argument("qubit " + label.str() + " is not in the circuit register");
  }
  return it->second;
}

void Circuit::add(const Gate& gate) {
  const size_t n = register_.size();
  if (gate.q0 >= n || (gate.two_qubit() && gate.q1 >= n)) {
    throw std::out_of_range(std::string(gate_name(gate.kind)) + " references a qubit outside the register");
  }
  if (gate.two_qubit() && gate.q0 == gate.q1) {
    throw std::invalid_argument(std::string(gate_name(gate.kind)) + " needs two distinct qubits");
  }
  Gate g = gate;
  if (!g.two_qubit()) g.q1 = g.q0;
  g.angle = has_angle(g.kind) ? canonical_angle(g.angle) : 0;
  gates_.push_back(g);
}

void Circuit::rx(const QubitLabel& q, double angle) { add(Gate::rx(index_of(q), angle)); }
void Circuit::rz(const QubitLabel& q, double angle) { add(Gate::rz(index_of(q), angle)); }
void Circuit::h(const QubitLabel& q) { add(Gate::h(index_of(q))); }
void Circuit::x(const QubitLabel& q) { add(Gate::x(index_of(q))); }
void Circuit::cnot(const QubitLabel& control, const QubitLabel& target) {
  add(Gate::cnot(index_of(control), index_of(target)));
}
void Circuit::cp(const QubitLabel& a, const QubitLabel& b, double angle) {
  add(Gate::cp(index_of(a), index_of(b), angle));
}

void Circuit::append(const Circuit& other) {
  std::vector<uint32_t> map;
  map.reserve(other.register_.size());
  for (const auto& q : other.register_) map.push_back(static_cast<uint32_t>(index_of(q)));
  for (Gate g : other.gates_) {
    g.q0 = map[g.q0];
    g.q1 = map[g.q1];
    add(g);
  }
  global_phase_ += other.global_phase_;
}

Circuit Circuit::empty_copy() const { return Circuit(space_, register_); }

void Circuit::replace_gates(std::vector<Gate> gates) {
  gates_.clear();
  for (const auto& g : gates) add(g);
}

std::vector<std::string> check_adjacency(const Circuit& circuit, const ParityLayout& layout) {
  std::vector<std::string> out;
  const auto& reg = circuit.qubits();
  for (size_t k = 0; k < circuit.size(); k++) {
    const Gate& g = circuit.gates()[k];
    if (!g.two_qubit()) continue;
    const QubitLabel& a = reg[g.q0];
    const QubitLabel& b = reg[g.q1];
    if (!layout.contains(a) || !layout.contains(b)) {
      out.push_back("gate " + std::to_string(k) + " acts on a qubit outside the layout");
      continue;
    }
    bool ok = layout.adjacent(a, b) || (g.kind == GateKind::kCP && layout.diagonal(a, b));
    if (!ok) {
      out.push_back("gate " + std::to_string(k) + " " + std::string(gate_name(g.kind)) + " on " +
                    a.str() + " and " + b.str() + " is not nearest-neighbor");
    }
  }
  return out;
}

}  // namespace parity
