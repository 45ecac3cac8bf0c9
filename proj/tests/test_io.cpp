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

#include <gtest/gtest.h>

#include <random>

#include "parity/algorithms.hpp"
#include "parity/io.hpp"
#include "parity/layouts.hpp"
#include "support.hpp"

using namespace parity;

TEST(CircuitJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; trial++) {
    Circuit c = testkit::random_physical_circuit(rng, 5, 40);
    c.set_global_phase(0.1 * trial);
    Circuit back = circuit_from_json(circuit_to_json(c));
    EXPECT_EQ(back.qubits(), c.qubits());
    EXPECT_EQ(back.gates(), c.gates());
    EXPECT_EQ(back.global_phase(), c.global_phase());
    EXPECT_EQ(back.space(), c.space());
    EXPECT_EQ(circuit_to_json(back), circuit_to_json(c));
  }
}

TEST(CircuitJson, RoundTripsCompiledQft) {
  Compiled q = qft_parity(4);
  Circuit back = circuit_from_json(circuit_to_json(q.circuit));
  EXPECT_EQ(back.gates(), q.circuit.gates());
  EXPECT_EQ(back.global_phase(), q.circuit.global_phase());
}

TEST(CircuitJson, OmitsZeroPhase) {
  Circuit c = Circuit::logical(1);
  c.h(QubitLabel{0});
  EXPECT_EQ(circuit_to_json(c).find("global_phase"), std::string::npos);
}

TEST(CircuitJson, AcceptsHandWrittenInput) {
  Circuit c = circuit_from_json(R"({"version": 1, "space": "logical", "register": [[0], [1]],
    "gates": [{"kind": "H", "qubits": [0]}, {"kind": "CP", "qubits": [0, 1], "angle": 1e-1}]})");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[1].kind, GateKind::kCP);
  EXPECT_DOUBLE_EQ(c.gates()[1].angle, 0.1);
}

TEST(CircuitJson, RejectsMalformedInput) {
  EXPECT_THROW(circuit_from_json("{"), FormatError);
  EXPECT_THROW(circuit_from_json(R"({"version": 2, "space": "logical", "register": [], "gates": []})"), FormatError);
  EXPECT_THROW(circuit_from_json(R"({"version": 1, "space": "logical", "register": [[0]],
    "gates": [{"kind": "RZ", "qubits": [0]}]})"),
               FormatError);
  EXPECT_THROW(circuit_from_json(R"({"version": 1, "space": "logical", "register": [[0]],
    "gates": [{"kind": "CNOT", "qubits": [0, 3]}]})"),
               FormatError);
  EXPECT_THROW(circuit_from_json(R"({"version": 1, "space": "logical", "register": [[0]],
    "gates": [{"kind": "TOF", "qubits": [0]}]})"),
               FormatError);
}

TEST(LayoutJson, RoundTrip) {
  for (const ParityLayout& layout : {lhz_layout(4), addition_layout(2, true), grover_layout(3)}) {
    ParityLayout back = layout_from_json(layout_to_json(layout));
    EXPECT_EQ(back.n_logical(), layout.n_logical());
    EXPECT_EQ(back.qubits(), layout.qubits());
    EXPECT_EQ(back.positions(), layout.positions());
    EXPECT_EQ(back.lines(), layout.lines());
    ASSERT_EQ(back.constraints().size(), layout.constraints().size());
    for (size_t k = 0; k < layout.constraints().size(); k++) {
      EXPECT_EQ(back.constraints()[k].members, layout.constraints()[k].members);
    }
  }
}

TEST(LayoutJson, RejectsBadReferences) {
  EXPECT_THROW(layout_from_json(R"({"n": 1, "qubits": [[0]], "positions": [[0, 0]], "constraints": [],
    "lines": [[4]]})"),
               FormatError);
  EXPECT_THROW(layout_from_json(R"({"n": 1, "qubits": [[0]]})"), FormatError);
}

TEST(RenderLayout, DrawsTopRowFirst) {
  EXPECT_EQ(render_layout(lhz_layout(2)), ".     (1)\n(0)   (0,1)\n");
}
