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

#include <numbers>
#include <random>
#include <set>

#include "parity/algorithms.hpp"
#include "parity/layouts.hpp"
#include "parity/scheduler.hpp"
#include "parity/simulator.hpp"
#include "parity/synth.hpp"
#include "support.hpp"

using namespace parity;

namespace {

constexpr double kPi = std::numbers::pi;

Circuit reg3() { return Circuit(Space::kPhysical, {QubitLabel{0}, QubitLabel{1}, QubitLabel{2}}); }
const QubitLabel a{0}, b{1}, c{2};

}  // namespace

TEST(Cancel, AdjacentPair) {
  Circuit x = reg3();
  x.cnot(a, b);
  x.cnot(a, b);
  EXPECT_TRUE(cancel_adjacent_cnots(x).empty());
}

TEST(Cancel, RzOnControlDoesNotBlock) {
  Circuit x = reg3();
  x.cnot(a, b);
  x.rz(a, 0.3);
  x.cnot(a, b);
  Circuit y = cancel_adjacent_cnots(x);
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y.gates()[0].kind, GateKind::kRZ);
}

TEST(Cancel, BlockersStayPut) {
  for (int blocker = 0; blocker < 4; blocker++) {
    Circuit x = reg3();
    x.cnot(a, b);
    if (blocker == 0) x.rz(b, 0.3);
    if (blocker == 1) x.rx(a, 0.3);
    if (blocker == 2) x.cnot(b, c);
    if (blocker == 3) x.h(a);
    x.cnot(a, b);
    EXPECT_EQ(cancel_adjacent_cnots(x).size(), 3u) << blocker;
  }
}

TEST(Cancel, NestedPairsReachFixpoint) {
  Circuit x = reg3();
  x.cnot(a, b);
  x.cnot(b, c);
  x.cnot(b, c);
  x.cnot(a, b);
  EXPECT_TRUE(cancel_adjacent_cnots(x).empty());
}

TEST(Merge, SumsAndDrops) {
  Circuit x = reg3();
  x.rz(a, kPi / 2);
  x.rz(a, kPi / 2);
  Circuit y = merge_rz(x);
  ASSERT_EQ(y.size(), 1u);
  EXPECT_NEAR(y.gates()[0].angle, kPi, 1e-15);

  Circuit z = reg3();
  z.rz(a, 0.4);
  z.rz(a, -0.4);
  EXPECT_TRUE(merge_rz(z).empty());
}

TEST(Merge, FullTurnBecomesGlobalPhase) {
  Circuit x = reg3();
  x.rz(a, kPi);
  x.rz(a, kPi);
  Circuit y = merge_rz(x);
  EXPECT_TRUE(y.empty());
  EXPECT_NEAR(circuit_fidelity(x, y), 1, 1e-12);
}

TEST(Merge, PassesThroughControlButNotTarget) {
  Circuit x = reg3();
  x.rz(a, 0.2);
  x.cnot(a, b);
  x.rz(a, 0.3);
  EXPECT_EQ(merge_rz(x).size(), 2u);
  Circuit y = reg3();
  y.rz(b, 0.2);
  y.cnot(a, b);
  y.rz(b, 0.3);
  EXPECT_EQ(merge_rz(y).size(), 3u);
}

TEST(Passes, PreserveActionOnRandomCircuits) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> qubits(2, 8), gates(1, 60);
  for (int trial = 0; trial < 200; trial++) {
    Circuit x = testkit::random_physical_circuit(rng, qubits(rng), gates(rng));
    Circuit y = apply_passes(x);
    EXPECT_LE(y.size(), x.size());
    EXPECT_GE(circuit_fidelity(x, y, {static_cast<uint64_t>(trial), 2}), 1 - 1e-12) << trial;
  }
}

TEST(Schedule, EmptyAndLayerDisjointness) {
  EXPECT_EQ(schedule(reg3()).stats.depth, 0);
  EXPECT_EQ(resource_stats(reg3()), ResourceStats{.qubit_count = 3});
  ScheduledCircuit s = schedule(qft_parity(5).circuit);
  size_t placed = 0;
  for (const auto& layer : s.layers) {
    std::set<uint32_t> used;
    for (size_t g : layer) {
      const Gate& gate = s.circuit.gates()[g];
      EXPECT_TRUE(used.insert(gate.q0).second);
      if (gate.two_qubit()) EXPECT_TRUE(used.insert(gate.q1).second);
    }
    placed += layer.size();
  }
  EXPECT_EQ(placed, s.circuit.size());
}

TEST(Schedule, AsapPlacement) {
  Circuit x = reg3();
  x.h(a);
  x.h(b);
  x.cnot(a, b);
  x.x(c);
  ScheduledCircuit s = schedule(x);
  ASSERT_EQ(s.layers.size(), 2u);
  EXPECT_EQ(s.layers[0], (std::vector<size_t>{0, 1, 3}));
  EXPECT_EQ(s.layers[1], (std::vector<size_t>{2}));
}

TEST(Stats, CountsByKind) {
  Circuit x = reg3();
  x.cnot(a, b);
  x.cp(b, c, 0.3);
  x.rz(a, 0.1);
  x.x(c);
  ResourceStats s = resource_stats(x);
  EXPECT_EQ(s.cnot_count, 1);
  EXPECT_EQ(s.cp_count, 1);
  EXPECT_EQ(s.single_qubit_count, 2);
  EXPECT_EQ(s.total_gates, 4);
  EXPECT_EQ(s.depth, 3);
  EXPECT_EQ(stats_json(s)["cp"], 1);
  EXPECT_NE(stats_table(s).find("CP"), std::string::npos);
}

TEST(Stats, QftRowAtFour) {
  ResourceStats s = resource_stats(qft_parity(4).circuit);
  EXPECT_EQ(s.qubit_count, 10);
  EXPECT_EQ(s.cnot_count, 24);
  EXPECT_EQ(s.depth, 23);
  EXPECT_NE(stats_table(s).find("circuit depth 23"), std::string::npos);
}

TEST(CnotDepthFormula, Examples) {
  EXPECT_EQ(cnot_depth_formula(4, 1, 2, IndexConvention::kZeroBased), 9);
  EXPECT_EQ(cnot_depth_formula(4, 0, 1), 9);
  // 1-based c=1, t=3 sit symmetric about n/2 = 2.
  EXPECT_EQ(cnot_depth_formula(4, 0, 2), 2 * (2 + 1 + 1) + 3);
  EXPECT_THROW(cnot_depth_formula(4, 2, 2), std::invalid_argument);
  EXPECT_THROW(cnot_depth_formula(4, 0, 4), std::invalid_argument);
}

TEST(CnotDepthFormula, ConventionsTieAtFour) {
  ParityLayout layout = lhz_layout(4);
  int zero = 0, one = 0;
  for (int c = 0; c < 4; c++) {
    for (int t = 0; t < 4; t++) {
      if (c == t) continue;
      int d = resource_stats(synth_cnot(layout, c, t)).depth;
      zero += d == cnot_depth_formula(4, c, t, IndexConvention::kZeroBased);
      one += d == cnot_depth_formula(4, c, t, IndexConvention::kOneBased);
    }
  }
  EXPECT_EQ(zero, one);
  EXPECT_EQ(kPinnedConvention, IndexConvention::kOneBased);
}
