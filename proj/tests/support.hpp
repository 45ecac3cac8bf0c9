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
#include <random>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/code.hpp"

namespace parity::testkit {

// Three data qubits around a three-body parity qubit (0,1,2). With
// `with_pair` the pair (0,1) closes a triangle constraint with (0) and (1).
inline ParityLayout plus_layout(bool with_pair) {
  std::vector<QubitLabel> qubits{{0}, {1}, {2}, {0, 1, 2}};
  std::vector<GridPos> positions{{0, 1}, {1, 0}, {2, 1}, {1, 1}};
  std::vector<Constraint> constraints;
  std::vector<std::vector<QubitLabel>> lines{{{0}, {0, 1, 2}}, {{1}, {0, 1, 2}}, {{2}, {0, 1, 2}}};
  if (with_pair) {
    qubits.push_back({0, 1});
    positions.push_back({0, 0});
    constraints.push_back({{{0}, {1}, {0, 1}}});
    lines[0] = {{0, 1}, {0}, {0, 1, 2}};
    lines[1] = {{0, 1}, {1}, {0, 1, 2}};
  }
  return ParityLayout(3, qubits, positions, constraints, lines);
}

// Register of `num_qubits` single-index labels with gates drawn so that CNOT
// pairs and RZ runs on shared qubits are common.
inline Circuit random_physical_circuit(std::mt19937_64& rng, int num_qubits, int num_gates) {
  std::vector<QubitLabel> reg;
  for (int q = 0; q < num_qubits; q++) reg.push_back(QubitLabel{q});
  Circuit c(Space::kPhysical, reg);
  std::uniform_int_distribution<int> pick(0, num_qubits - 1);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_real_distribution<double> angle(-6.5, 6.5);
  const double quarter = 1.5707963267948966;
  auto other = [&](uint32_t q) {
    uint32_t r;
    do r = static_cast<uint32_t>(pick(rng)); while (r == q);
    return r;
  };
  while (static_cast<int>(c.size()) < num_gates) {
    uint32_t a = static_cast<uint32_t>(pick(rng));
    switch (kind(rng)) {
      case 0: case 1: case 2: {
        uint32_t b = other(a);
        c.add(Gate::cnot(a, b));
        if (kind(rng) < 4) c.add(Gate::rz(a, angle(rng)));
        if (kind(rng) < 5) c.add(Gate::cnot(a, b));
        break;
      }
      case 3: case 4:
        c.add(Gate::rz(a, angle(rng)));
        break;
      case 5:
        c.add(Gate::rz(a, quarter * static_cast<double>(pick(rng) % 8)));
        break;
      case 6:
        c.add(Gate::rx(a, angle(rng)));
        break;
      case 7:
        c.add(Gate::h(a));
        break;
      case 8:
        c.add(Gate::x(a));
        break;
      default:
        c.add(Gate::cp(a, other(a), angle(rng)));
        break;
    }
  }
  std::vector<Gate> gates(c.gates().begin(), c.gates().begin() + num_gates);
  c.replace_gates(std::move(gates));
  return c;
}

}  // namespace parity::testkit
