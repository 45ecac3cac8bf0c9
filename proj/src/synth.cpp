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

#include "parity/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "parity/scheduler.hpp"

namespace parity {

namespace {

constexpr double kPi = std::numbers::pi;

QubitLabel data(int i) { return QubitLabel{i}; }
QubitLabel pair(int i, int j) { return QubitLabel{i, j}; }

void require(const ParityLayout& layout, const QubitLabel& q, const char* what) {
  if (!layout.contains(q)) {
    throw std::invalid_argument(std::string(what) + " " + q.str() + " unavailable in layout");
  }
}

size_t position_on_line(const std::vector<QubitLabel>& line, const QubitLabel& q) {
  auto it = std::find(line.begin(), line.end(), q);
  if (it == line.end()) throw std::invalid_argument("qubit " + q.str() + " is not on the line");
  return static_cast<size_t>(it - line.begin());
}

void emit_chain(Circuit& c, const ParityLayout& layout, int i, const QubitLabel& root,
                ChainOrder order, const auto& core) {
  SynthesisPlan plan = plan_chain(layout, i, root);
  emit_fan_in(c, plan, order.after_first_in);
  core(c);
  emit_fan_out(c, plan, order.after_first_out);
}

const ChainOrder kOrders[4] = {{true, true}, {true, false}, {false, true}, {false, false}};

}  // namespace

SynthesisPlan plan_chain(const ParityLayout& layout, int i, std::optional<QubitLabel> root) {
  const auto& line = layout.line(i);
  if (line.empty()) throw std::invalid_argument("logical line " + std::to_string(i) + " is empty");
  size_t r = (line.size() - 1) / 2;
  if (root) {
    auto it = std::find(line.begin(), line.end(), *root);
    if (it == line.end()) {
      throw std::invalid_argument("root " + root->str() + " is not on logical line " + std::to_string(i));
    }
    r = static_cast<size_t>(it - line.begin());
  }
  SynthesisPlan plan{i, line[r], {}, {}};
  plan.before.assign(line.begin(), line.begin() + static_cast<std::ptrdiff_t>(r));
  plan.after.assign(line.begin() + static_cast<std::ptrdiff_t>(r) + 1, line.end());
  return plan;
}

void emit_fan_in(Circuit& circuit, const SynthesisPlan& plan, bool after_first) {
  auto before = [&] {
    const auto& b = plan.before;
    for (size_t k = 0; k < b.size(); k++) {
      circuit.cnot(k + 1 < b.size() ? b[k + 1] : plan.root, b[k]);
    }
  };
  auto after = [&] {
    const auto& a = plan.after;
    for (size_t k = a.size(); k-- > 0;) circuit.cnot(k > 0 ? a[k - 1] : plan.root, a[k]);
  };
  if (after_first) {
    after();
    before();
  } else {
    before();
    after();
  }
}

void emit_fan_out(Circuit& circuit, const SynthesisPlan& plan, bool after_first) {
  auto before = [&] {
    const auto& b = plan.before;
    for (size_t k = b.size(); k-- > 0;) circuit.cnot(k + 1 < b.size() ? b[k + 1] : plan.root, b[k]);
  };
  auto after = [&] {
    const auto& a = plan.after;
    for (size_t k = 0; k < a.size(); k++) circuit.cnot(k > 0 ? a[k - 1] : plan.root, a[k]);
  };
  if (after_first) {
    after();
    before();
  } else {
    before();
    after();
  }
}

Circuit layout_circuit(const ParityLayout& layout) { return Circuit(Space::kPhysical, layout.qubits()); }

Circuit synth_rz(const ParityLayout& layout, int i, double alpha) {
  require(layout, data(i), "data qubit");
  Circuit c = layout_circuit(layout);
  if (canonical_angle(alpha) != 0) c.rz(data(i), alpha);
  return c;
}

Circuit synth_rx(const ParityLayout& layout, int i, double alpha, std::optional<QubitLabel> root,
                 ChainOrder order) {
  SynthesisPlan plan = plan_chain(layout, i, root);
  Circuit c = layout_circuit(layout);
  if (canonical_angle(alpha) == 0) return c;
  emit_chain(c, layout, i, plan.root, order, [&](Circuit& cc) { cc.rx(plan.root, alpha); });
  return c;
}

Circuit synth_unitary(const ParityLayout& layout, int i, double alpha, double beta, double gamma,
                      std::optional<QubitLabel> root) {
  require(layout, data(i), "data qubit");
  if (root) plan_chain(layout, i, root);
  const QubitLabel d = data(i);
  auto build = [&](const QubitLabel& r, ChainOrder order) {
    Circuit c = layout_circuit(layout);
    if (canonical_angle(beta) == 0) {
      c.rz(d, gamma);
      c.rz(d, alpha);
      return merge_rz(c);
    }
    if (r == d) {
      emit_chain(c, layout, i, r, order, [&](Circuit& cc) {
        cc.rz(d, gamma);
        cc.rx(d, beta);
        cc.rz(d, alpha);
      });
    } else {
      c.rz(d, gamma);
      emit_chain(c, layout, i, r, order, [&](Circuit& cc) { cc.rx(r, beta); });
      c.rz(d, alpha);
    }
    return apply_passes(c);
  };

  const auto& line = layout.line(i);
  const double middle = (static_cast<double>(line.size()) - 1) / 2;
  std::optional<Circuit> best;
  std::tuple<int, double, size_t> best_key{};
  for (size_t r = 0; r < line.size(); r++) {
    if (root && line[r] != *root) continue;
    for (const ChainOrder& order : kOrders) {
      Circuit c = build(line[r], order);
      std::tuple<int, double, size_t> key{schedule(c).stats.depth, std::abs(r - middle), r};
      if (!best || key < best_key) {
        best = std::move(c);
        best_key = key;
      }
    }
  }
  return *best;
}

Circuit synth_hadamard(const ParityLayout& layout, int i, ChainOrder order) {
  require(layout, data(i), "data qubit");
  Circuit c = layout_circuit(layout);
  emit_chain(c, layout, i, data(i), order, [&](Circuit& cc) { cc.h(data(i)); });
  return c;
}

Circuit synth_x(const ParityLayout& layout, int i) {
  Circuit c = layout_circuit(layout);
  for (const auto& q : layout.line(i)) c.x(q);
  return c;
}

Circuit synth_cphase(const ParityLayout& layout, int i, int j, double phi) {
  if (i == j) throw std::invalid_argument("controlled phase needs two distinct logical qubits");
  require(layout, data(i), "data qubit");
  require(layout, data(j), "data qubit");
  require(layout, pair(i, j), "parity qubit");
  Circuit c = layout_circuit(layout);
  if (canonical_angle(phi) == 0) return c;
  c.rz(data(i), phi / 2);
  c.rz(pair(i, j), -phi / 2);
  c.rz(data(j), phi / 2);
  c.add_global_phase(phi / 4);
  return c;
}

Circuit synth_cnot(const ParityLayout& layout, int control, int target) {
  if (control == target) throw std::invalid_argument("CNOT needs distinct control and target");
  require(layout, data(control), "data qubit");
  require(layout, data(target), "data qubit");
  require(layout, pair(control, target), "parity qubit");
  const auto& line = layout.line(target);
  size_t a = position_on_line(line, pair(control, target));
  size_t b = position_on_line(line, data(target));
  if (a > b) std::swap(a, b);
  const double middle = (static_cast<double>(line.size()) - 1) / 2;

  auto hadamard = [&](Circuit& c, size_t r, ChainOrder order) {
    c.rz(data(target), kPi / 2);
    emit_chain(c, layout, target, line[r], order, [&](Circuit& cc) { cc.rx(line[r], kPi / 2); });
    c.rz(data(target), kPi / 2);
    c.add_global_phase(kPi / 2);
  };

  std::optional<Circuit> best;
  std::tuple<int, int, double, size_t, int> best_key{};
  for (size_t r = a; r <= b; r++) {
    for (int first = 0; first < 4; first++) {
      for (int second = 0; second < 4; second++) {
        Circuit c = layout_circuit(layout);
        hadamard(c, r, kOrders[first]);
        c.append(synth_cphase(layout, control, target, kPi));
        hadamard(c, r, kOrders[second]);
        c = apply_passes(c);
        ScheduledCircuit s = schedule(c);
        std::tuple<int, int, double, size_t, int> key{s.stats.cnot_count, s.stats.depth,
                                                      std::abs(r - middle), r, first * 4 + second};
        if (!best || key < best_key) {
          best = std::move(c);
          best_key = key;
        }
      }
    }
  }
  return *best;
}

CcpParts synth_ccp_parts(const ParityLayout& layout, int i, int j, int k, double phi) {
  if (i == j || j == k || i == k) throw std::invalid_argument("CCP needs three distinct logical qubits");
  for (int q : {i, j, k}) require(layout, data(q), "data qubit");
  for (auto [p, q] : std::initializer_list<std::pair<int, int>>{{i, j}, {i, k}, {j, k}}) require(layout, pair(p, q), "parity qubit");
  // The gate is symmetric, so any index may take the data role.
  std::array<int, 3> roles[3] = {{i, j, k}, {j, i, k}, {k, i, j}};
  for (auto [d, p, q] : roles) {
    if (!layout.adjacent(data(d), pair(p, q)) && !layout.diagonal(data(d), pair(p, q))) continue;
    CcpParts parts{d, synth_cphase(layout, d, p, phi / 2), synth_cphase(layout, d, q, phi / 2),
                   layout_circuit(layout), layout_circuit(layout)};
    parts.flipped_cp.x(pair(p, q));
    parts.flipped_cp.cp(data(d), pair(p, q), phi / 2);
    parts.flipped_cp.x(pair(p, q));
    parts.phase.rz(data(d), -phi / 2);
    parts.phase.add_global_phase(-phi / 4);
    return parts;
  }
  throw std::invalid_argument("no data qubit of (" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) +
                              ") neighbours the parity qubit of the other two; use a layout tailored "
                              "to this gate");
}

Circuit synth_ccp(const ParityLayout& layout, int i, int j, int k, double phi) {
  CcpParts parts = synth_ccp_parts(layout, i, j, k, phi);
  Circuit c = layout_circuit(layout);
  if (canonical_angle(phi) == 0) return c;
  c.append(parts.cp_ij);
  c.append(parts.cp_ik);
  c.append(parts.flipped_cp);
  c.append(parts.phase);
  return merge_rz(c);
}

Circuit synth_toffoli(const ParityLayout& layout, int i, int j, int k_target) {
  Circuit c = layout_circuit(layout);
  c.append(synth_hadamard(layout, k_target));
  c.append(synth_ccp(layout, i, j, k_target, kPi));
  c.append(synth_hadamard(layout, k_target));
  return apply_passes(c);
}

Circuit synth_higher_order_rz(const ParityLayout& layout, const std::vector<int>& indices, double phi) {
  QubitLabel q(indices);
  require(layout, q, "qubit");
  Circuit c = layout_circuit(layout);
  if (canonical_angle(-2 * phi) != 0) c.rz(q, -2 * phi);
  return c;
}

Circuit apply_negative_controls(const Circuit& circuit, const ParityLayout& layout,
                                const std::set<int>& negated, const std::set<QubitLabel>& touched) {
  if (negated.empty()) return circuit;
  Circuit flips = circuit.empty_copy();
  for (int i : negated) {
    require(layout, data(i), "data qubit");
    flips.x(data(i));
    for (const auto& q : touched) {
      if (!q.is_data() && q.contains(i)) flips.x(q);
    }
  }
  Circuit out = flips;
  out.append(circuit);
  out.append(flips);
  return out;
}

Circuit apply_negative_controls(const Circuit& circuit, const ParityLayout& layout,
                                const std::set<int>& negated) {
  std::set<QubitLabel> touched;
  for (const auto& g : circuit.gates()) {
    touched.insert(circuit.qubits()[g.q0]);
    touched.insert(circuit.qubits()[g.q1]);
  }
  return apply_negative_controls(circuit, layout, negated, touched);
}

Circuit compile_logical(const Circuit& logical, const ParityLayout& layout) {
  Circuit c = layout_circuit(layout);
  auto idx = [&](uint32_t q) {
    const QubitLabel& l = logical.qubits()[q];
    if (!l.is_data()) throw std::invalid_argument("logical circuits must use single-index qubits");
    return l.indices()[0];
  };
  for (const Gate& g : logical.gates()) {
    switch (g.kind) {
      case GateKind::kRZ:
        c.append(synth_rz(layout, idx(g.q0), g.angle));
        break;
      case GateKind::kRX:
        c.append(synth_rx(layout, idx(g.q0), g.angle));
        break;
      case GateKind::kH:
        c.append(synth_hadamard(layout, idx(g.q0)));
        break;
      case GateKind::kX:
        c.append(synth_x(layout, idx(g.q0)));
        break;
      case GateKind::kCP:
        c.append(synth_cphase(layout, idx(g.q0), idx(g.q1), g.angle));
        break;
      case GateKind::kCNOT:
        c.append(synth_cnot(layout, idx(g.q0), idx(g.q1)));
        break;
    }
  }
  c.add_global_phase(logical.global_phase());
  return c;
}

}  // namespace parity
