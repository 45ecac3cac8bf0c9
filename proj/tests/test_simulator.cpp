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

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "parity/layouts.hpp"
#include "parity/simulator.hpp"
#include "parity/synth.hpp"
#include "support.hpp"

using namespace parity;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_logical(int n, std::mt19937_64& rng) {
  StateVector s(StateVector::logical_register(n));
  std::normal_distribution<double> g;
  double norm = 0;
  for (auto& a : s.amplitudes()) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : s.amplitudes()) a /= std::sqrt(norm);
  return s;
}

}  // namespace

TEST(Apply, EmptyCircuitIsIdentity) {
  std::mt19937_64 rng(1);
  StateVector s = random_logical(3, rng);
  StateVector out = apply(Circuit::logical(3), s);
  EXPECT_NEAR(std::abs(inner_product(s, out)), 1, 1e-12);
}

TEST(Apply, HadamardOnZero) {
  Circuit c = Circuit::logical(1);
  c.h(QubitLabel{0});
  StateVector out = apply(c, StateVector(StateVector::logical_register(1)));
  EXPECT_NEAR(out.amplitudes()[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(out.amplitudes()[1].real(), M_SQRT1_2, 1e-15);
}

TEST(Apply, CnotTruthTable) {
  Circuit c = Circuit::logical(2);
  c.cnot(QubitLabel{0}, QubitLabel{1});
  const uint64_t expected[4] = {0, 3, 2, 1};
  for (uint64_t b = 0; b < 4; b++) {
    StateVector out = apply(c, StateVector::basis(StateVector::logical_register(2), b));
    EXPECT_NEAR(std::abs(out.amplitudes()[expected[b]]), 1, 1e-15);
  }
}

TEST(Apply, RotationConventions) {
  const double t = 0.7;
  Circuit rz = Circuit::logical(1);
  rz.rz(QubitLabel{0}, t);
  StateVector one = apply(rz, StateVector::basis(StateVector::logical_register(1), 1));
  EXPECT_NEAR(std::arg(one.amplitudes()[1]), t / 2, 1e-15);
  Circuit rx = Circuit::logical(1);
  rx.rx(QubitLabel{0}, t);
  StateVector zero = apply(rx, StateVector(StateVector::logical_register(1)));
  EXPECT_NEAR(zero.amplitudes()[0].real(), std::cos(t / 2), 1e-15);
  EXPECT_NEAR(zero.amplitudes()[1].imag(), -std::sin(t / 2), 1e-15);
  Circuit cp = Circuit::logical(2);
  cp.cp(QubitLabel{0}, QubitLabel{1}, t);
  StateVector both = apply(cp, StateVector::basis(StateVector::logical_register(2), 3));
  EXPECT_NEAR(std::arg(both.amplitudes()[3]), t, 1e-15);
}

TEST(Apply, GlobalPhaseIsApplied) {
  Circuit c = Circuit::logical(1);
  c.set_global_phase(0.4);
  StateVector out = apply(c, StateVector(StateVector::logical_register(1)));
  EXPECT_NEAR(std::arg(out.amplitudes()[0]), 0.4, 1e-15);
}

TEST(Apply, PreservesNorm) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; trial++) {
    Circuit c = testkit::random_physical_circuit(rng, 6, 50);
    StateVector s(c.qubits());
    StateVector out = apply(c, s);
    EXPECT_NEAR(out.norm(), 1, 1e-12);
  }
}

TEST(Encode, BellPair) {
  ParityLayout layout = lhz_layout(2);
  StateVector bell(StateVector::logical_register(2));
  bell.amplitudes()[0] = M_SQRT1_2;
  bell.amplitudes()[3] = M_SQRT1_2;
  StateVector phys = encode(layout, bell);
  // Register (0),(1),(0,1): |000> and |110> are indices 0 and 3.
  EXPECT_NEAR(phys.amplitudes()[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(phys.amplitudes()[3].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(phys.norm(), 1, 1e-15);
}

TEST(Encode, IsometryAndDecodeRoundTrip) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 4; n++) {
    ParityLayout layout = lhz_layout(n);
    StateVector a = random_logical(n, rng), b = random_logical(n, rng);
    Amplitude logical = inner_product(a, b);
    Amplitude physical = inner_product(encode(layout, a), encode(layout, b));
    EXPECT_NEAR(std::abs(logical - physical), 0, 1e-12);
    StateVector back = decode(layout, encode(layout, a));
    EXPECT_NEAR(std::abs(inner_product(a, back)), 1, 1e-12);
    EXPECT_LT(check_stabilizers(layout, encode(layout, a)), 1e-12);
  }
}

TEST(Decode, CorruptedStateLeaks) {
  ParityLayout layout = lhz_layout(3);
  StateVector s = encode(layout, StateVector(StateVector::logical_register(3)));
  Circuit flip(Space::kPhysical, layout.qubits());
  flip.x(QubitLabel{0, 2});
  StateVector bad = apply(flip, s);
  EXPECT_NEAR(code_space_leakage(layout, bad), 1, 1e-12);
  EXPECT_THROW(decode(layout, bad), LeakageError);
  EXPECT_NEAR(check_stabilizers(layout, bad), 2, 1e-12);
}

TEST(Verify, IdentityAndFaultInjection) {
  ParityLayout layout = lhz_layout(2);
  EXPECT_NEAR(verify_equivalence(Circuit::logical(2), layout_circuit(layout), layout).fidelity, 1, 1e-12);

  const double phi = 0.9;
  Circuit logical = Circuit::logical(2);
  logical.cp(QubitLabel{0}, QubitLabel{1}, phi);
  EXPECT_GT(verify_equivalence(logical, synth_cphase(layout, 0, 1, phi), layout).fidelity, 1 - 1e-10);
  // Same gates with the parity rotation sign flipped.
  Circuit wrong(Space::kPhysical, layout.qubits());
  wrong.rz(QubitLabel{0}, phi / 2);
  wrong.rz(QubitLabel{0, 1}, phi / 2);
  wrong.rz(QubitLabel{1}, phi / 2);
  EXPECT_LT(verify_equivalence(logical, wrong, layout).fidelity, 0.99);
}

TEST(Verify, RelativePhaseBetweenInputsCounts) {
  // RZ differs from P only by a global phase; Z differs from identity on |1>.
  ParityLayout layout = lhz_layout(2);
  Circuit logical = Circuit::logical(2);
  Circuit z(Space::kPhysical, layout.qubits());
  z.rz(QubitLabel{0}, kPi);
  EXPECT_LT(verify_equivalence(logical, z, layout).fidelity, 0.5);
}

TEST(Cap, ExceedingTheCapThrows) {
  ::setenv("PARITY_SIM_CAP", "4", 1);
  EXPECT_EQ(simulator_cap(), 4u);
  EXPECT_THROW(StateVector(StateVector::logical_register(5)), ResourceError);
  ::unsetenv("PARITY_SIM_CAP");
  EXPECT_EQ(simulator_cap(), 22u);
}

TEST(StateDump, RoundTrip) {
  std::mt19937_64 rng(5);
  StateVector s = random_logical(3, rng);
  std::stringstream buf;
  write_state_dump(buf, s);
  EXPECT_EQ(buf.str().size(), 8u + 8 * 16);
  uint64_t k = 0;
  auto amps = read_state_dump(buf, &k);
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(amps, s.amplitudes());
}
