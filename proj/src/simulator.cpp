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

#include "parity/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <random>
#include <string>

namespace parity {

namespace {

void check_cap(size_t k) {
  size_t cap = simulator_cap();
  if (k > cap) {
    throw ResourceError("register of " + std::to_string(k) + " qubits exceeds the simulator cap of " +
                        std::to_string(cap));
  }
}

void apply_gate(const Gate& g, uint64_t m0, uint64_t m1, std::vector<Amplitude>& a) {
  const uint64_t size = a.size();
  switch (g.kind) {
    case GateKind::kRX: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      const Amplitude mis(0, -s);
      for (uint64_t i = 0; i < size; i++) {
        if (i & m0) continue;
        Amplitude x = a[i], y = a[i | m0];
        a[i] = c * x + mis * y;
        a[i | m0] = mis * x + c * y;
      }
      break;
    }
    case GateKind::kRZ: {
      const Amplitude p0 = std::polar(1.0, -g.angle / 2), p1 = std::polar(1.0, g.angle / 2);
      for (uint64_t i = 0; i < size; i++) a[i] *= (i & m0) ? p1 : p0;
      break;
    }
    case GateKind::kH: {
      const double r = 1 / std::sqrt(2.0);
      for (uint64_t i = 0; i < size; i++) {
        if (i & m0) continue;
        Amplitude x = a[i], y = a[i | m0];
        a[i] = r * (x + y);
        a[i | m0] = r * (x - y);
      }
      break;
    }
    case GateKind::kX:
      for (uint64_t i = 0; i < size; i++) {
        if (!(i & m0)) std::swap(a[i], a[i | m0]);
      }
      break;
    case GateKind::kCNOT:
      for (uint64_t i = 0; i < size; i++) {
        if ((i & m0) && !(i & m1)) std::swap(a[i], a[i | m1]);
      }
      break;
    case GateKind::kCP: {
      const Amplitude p = std::polar(1.0, g.angle);
      for (uint64_t i = 0; i < size; i++) {
        if ((i & m0) && (i & m1)) a[i] *= p;
      }
      break;
    }
  }
}

// Physical index flipped by each logical bit.
std::vector<uint64_t> logical_masks(const ParityLayout& layout) {
  std::vector<uint64_t> masks(layout.n_logical(), 0);
  for (size_t k = 0; k < layout.num_qubits(); k++) {
    for (int i : layout.qubits()[k].indices()) {
      if (i < layout.n_logical()) masks[i] |= uint64_t{1} << k;
    }
  }
  return masks;
}

uint64_t image_index(const std::vector<uint64_t>& masks, uint64_t s) {
  uint64_t out = 0;
  for (size_t i = 0; i < masks.size(); i++) {
    if ((s >> i) & 1) out ^= masks[i];
  }
  return out;
}

void check_logical_register(const ParityLayout& layout, const StateVector& s) {
  if (s.qubits() != StateVector::logical_register(layout.n_logical())) {
    throw std::invalid_argument("logical state must be over logical qubits 0.." +
                                std::to_string(layout.n_logical() - 1));
  }
}

void check_physical_register(const ParityLayout& layout, const StateVector& s) {
  if (s.qubits() != layout.qubits()) {
    throw std::invalid_argument("physical state register must equal the layout qubit order");
  }
}

StateVector random_state(std::vector<QubitLabel> reg, std::mt19937_64& rng) {
  StateVector s(std::move(reg));
  std::normal_distribution<double> gauss;
  double norm = 0;
  for (auto& a : s.amplitudes()) {
    a = Amplitude(gauss(rng), gauss(rng));
    norm += std::norm(a);
  }
  for (auto& a : s.amplitudes()) a /= std::sqrt(norm);
  return s;
}

template <typename T>
void put_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw std::runtime_error("truncated state dump");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

// Shared-phase fidelity over a list of overlaps.
double shared_phase_fidelity(const std::vector<Amplitude>& overlaps) {
  if (overlaps.empty()) return 1;
  size_t best = 0;
  for (size_t k = 1; k < overlaps.size(); k++) {
    if (std::abs(overlaps[k]) > std::abs(overlaps[best]) + 1e-12) best = k;
  }
  const Amplitude align = std::polar(1.0, -std::arg(overlaps[best]));
  double f = 1;
  for (auto o : overlaps) f = std::min(f, (align * o).real());
  return f;
}

}  // namespace

size_t simulator_cap() {
  if (const char* env = std::getenv("PARITY_SIM_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return v;
  }
  return 22;
}

StateVector::StateVector(std::vector<QubitLabel> reg) : register_(std::move(reg)) {
  check_cap(register_.size());
  amps_.assign(uint64_t{1} << register_.size(), Amplitude(0, 0));
  amps_[0] = 1;
}

StateVector StateVector::basis(std::vector<QubitLabel> reg, uint64_t index) {
  StateVector s(std::move(reg));
  if (index >= s.amps_.size()) throw std::out_of_range("basis index outside the register");
  s.amps_[0] = 0;
  s.amps_[index] = 1;
  return s;
}

std::vector<QubitLabel> StateVector::logical_register(int n) {
  std::vector<QubitLabel> reg;
  for (int i = 0; i < n; i++) reg.push_back(QubitLabel{i});
  return reg;
}

double StateVector::norm() const {
  double s = 0;
  for (auto a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void apply_in_place(const Circuit& circuit, StateVector& state) {
  std::map<QubitLabel, size_t> pos;
  for (size_t k = 0; k < state.num_qubits(); k++) pos.emplace(state.qubits()[k], k);
  std::vector<uint64_t> mask;
  for (const auto& q : circuit.qubits()) {
    auto it = pos.find(q);
    if (it == pos.end()) {
      throw std::invalid_argument("circuit qubit " + q.str() + " is not in the state register");
    }
    mask.push_back(uint64_t{1} << it->second);
  }
  auto& a = state.amplitudes();
  for (const auto& g : circuit.gates()) apply_gate(g, mask[g.q0], mask[g.q1], a);
  if (circuit.global_phase() != 0) {
    const Amplitude p = std::polar(1.0, circuit.global_phase());
    for (auto& x : a) x *= p;
  }
}

StateVector apply(const Circuit& circuit, StateVector state) {
  apply_in_place(circuit, state);
  return state;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("inner product over different registers");
  Amplitude s = 0;
  for (size_t i = 0; i < a.amplitudes().size(); i++) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return s;
}

StateVector encode(const ParityLayout& layout, const StateVector& logical_state) {
  check_logical_register(layout, logical_state);
  StateVector out(layout.qubits());
  out.amplitudes()[0] = 0;
  const auto masks = logical_masks(layout);
  const auto& in = logical_state.amplitudes();
  for (uint64_t s = 0; s < in.size(); s++) {
    if (in[s] != Amplitude(0, 0)) out.amplitudes()[image_index(masks, s)] = in[s];
  }
  return out;
}

double code_space_leakage(const ParityLayout& layout, const StateVector& physical_state) {
  check_physical_register(layout, physical_state);
  const auto masks = logical_masks(layout);
  double total = 0, inside = 0;
  for (auto a : physical_state.amplitudes()) total += std::norm(a);
  for (uint64_t s = 0; s < (uint64_t{1} << layout.n_logical()); s++) {
    inside += std::norm(physical_state.amplitudes()[image_index(masks, s)]);
  }
  return std::max(0.0, total - inside);
}

StateVector decode(const ParityLayout& layout, const StateVector& physical_state) {
  double leak = code_space_leakage(layout, physical_state);
  if (leak > 1e-10) {
    throw LeakageError("state leaks out of the code space (leakage norm " +
                           std::to_string(std::sqrt(leak)) + ")",
                       std::sqrt(leak));
  }
  StateVector out(StateVector::logical_register(layout.n_logical()));
  const auto masks = logical_masks(layout);
  for (uint64_t s = 0; s < out.amplitudes().size(); s++) {
    out.amplitudes()[s] = physical_state.amplitudes()[image_index(masks, s)];
  }
  return out;
}

double check_stabilizers(const ParityLayout& layout, const StateVector& physical_state) {
  check_physical_register(layout, physical_state);
  double worst = 0;
  const auto& a = physical_state.amplitudes();
  for (const auto& c : layout.constraints()) {
    uint64_t mask = 0;
    for (const auto& m : c.members) mask |= uint64_t{1} << layout.index_of(m);
    double odd = 0;
    for (uint64_t i = 0; i < a.size(); i++) {
      if (std::popcount(i & mask) & 1) odd += std::norm(a[i]);
    }
    worst = std::max(worst, 2 * std::sqrt(odd));
  }
  return worst;
}

LogicalOp logical_op_from_circuit(const Circuit& logical) {
  return [logical](const StateVector& s) { return apply(logical, s); };
}

EquivalenceResult verify_equivalence(const LogicalOp& logical, const Circuit& physical,
                                     const ParityLayout& layout, const EquivalenceOptions& options) {
  const int n = layout.n_logical();
  check_cap(layout.num_qubits());
  check_cap(n);
  const auto reg = StateVector::logical_register(n);
  std::vector<StateVector> inputs;
  for (uint64_t s = 0; s < (uint64_t{1} << n); s++) inputs.push_back(StateVector::basis(reg, s));
  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < options.random_states; k++) inputs.push_back(random_state(reg, rng));

  EquivalenceResult result;
  std::vector<Amplitude> overlaps;
  for (const auto& psi : inputs) {
    StateVector expected = encode(layout, logical(psi));
    StateVector actual = apply(physical, encode(layout, psi));
    overlaps.push_back(inner_product(expected, actual));
    result.stabilizer_deviation =
        std::max(result.stabilizer_deviation, check_stabilizers(layout, actual));
  }
  result.fidelity = shared_phase_fidelity(overlaps);
  return result;
}

EquivalenceResult verify_equivalence(const Circuit& logical, const Circuit& physical,
                                     const ParityLayout& layout, const EquivalenceOptions& options) {
  return verify_equivalence(logical_op_from_circuit(logical), physical, layout, options);
}

double circuit_fidelity(const Circuit& a, const Circuit& b, const EquivalenceOptions& options) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("circuits act on different registers");
  std::mt19937_64 rng(options.seed);
  std::vector<Amplitude> overlaps;
  std::vector<StateVector> inputs;
  inputs.emplace_back(a.qubits());
  for (int k = 0; k < std::max(1, options.random_states); k++) inputs.push_back(random_state(a.qubits(), rng));
  for (const auto& psi : inputs) overlaps.push_back(inner_product(apply(a, psi), apply(b, psi)));
  return shared_phase_fidelity(overlaps);
}

void write_state_dump(std::ostream& out, const StateVector& state) {
  put_le<uint64_t>(out, state.num_qubits());
  for (auto a : state.amplitudes()) {
    put_le<double>(out, a.real());
    put_le<double>(out, a.imag());
  }
}

std::vector<Amplitude> read_state_dump(std::istream& in, uint64_t* num_qubits) {
  uint64_t k = get_le<uint64_t>(in);
  check_cap(k);
  std::vector<Amplitude> amps(uint64_t{1} << k);
  for (auto& a : amps) {
    double re = get_le<double>(in);
    double im = get_le<double>(in);
    a = Amplitude(re, im);
  }
  if (num_qubits) *num_qubits = k;
  return amps;
}

}  // namespace parity
