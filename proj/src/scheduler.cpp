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

#include "parity/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace parity {

namespace {

bool shares_qubit(const Gate& a, const Gate& b) {
  return a.touches(b.q0) || (b.two_qubit() && a.touches(b.q1));
}

bool cancel_sweep(std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  bool changed = false;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::kCNOT) {
      bool cancelled = false;
      for (size_t j = out.size(); j-- > 0;) {
        const Gate& h = out[j];
        if (!shares_qubit(g, h)) continue;
        if (h == g) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
          break;
        }
        if (h.kind == GateKind::kRZ && h.q0 == g.q0) continue;
        break;
      }
      if (cancelled) {
        changed = true;
        continue;
      }
    }
    out.push_back(g);
  }
  gates = std::move(out);
  return changed;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

bool merge_sweep(std::vector<Gate>& gates, double& phase) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  bool changed = false;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::kRZ) {
      bool merged = false;
      for (size_t j = out.size(); j-- > 0;) {
        Gate& h = out[j];
        if (!h.touches(g.q0)) continue;
        if (h.kind == GateKind::kRZ) {
          h.angle = canonical_angle(h.angle + g.angle);
          merged = true;
          break;
        }
        if (h.kind == GateKind::kCNOT && h.q0 == g.q0) continue;
        break;
      }
      if (merged) {
        changed = true;
        continue;
      }
    }
    out.push_back(g);
  }
  std::vector<Gate> kept;
  kept.reserve(out.size());
  for (const Gate& g : out) {
    if (g.kind == GateKind::kRZ && near(g.angle, 0)) {
      changed = true;
      continue;
    }
    if (g.kind == GateKind::kRZ && near(g.angle, 2 * std::numbers::pi)) {
      phase += std::numbers::pi;
      changed = true;
      continue;
    }
    kept.push_back(g);
  }
  gates = std::move(kept);
  return changed;
}

}  // namespace

Circuit cancel_adjacent_cnots(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  while (cancel_sweep(gates)) {
  }
  Circuit out = circuit.empty_copy();
  out.replace_gates(std::move(gates));
  out.set_global_phase(circuit.global_phase());
  return out;
}

Circuit merge_rz(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  double phase = circuit.global_phase();
  while (merge_sweep(gates, phase)) {
  }
  Circuit out = circuit.empty_copy();
  out.replace_gates(std::move(gates));
  out.set_global_phase(phase);
  return out;
}

Circuit apply_passes(const Circuit& circuit) {
  Circuit current = circuit;
  while (true) {
    Circuit next = merge_rz(cancel_adjacent_cnots(current));
    if (next.gates() == current.gates()) return next;
    current = std::move(next);
  }
}

ScheduledCircuit schedule(const Circuit& circuit) {
  ScheduledCircuit out{circuit, {}, {}};
  std::vector<int> last(circuit.num_qubits(), 0);
  for (size_t k = 0; k < circuit.size(); k++) {
    const Gate& g = circuit.gates()[k];
    int layer = last[g.q0];
    if (g.two_qubit()) layer = std::max(layer, last[g.q1]);
    last[g.q0] = layer + 1;
    if (g.two_qubit()) last[g.q1] = layer + 1;
    if (out.layers.size() <= static_cast<size_t>(layer)) out.layers.resize(layer + 1);
    out.layers[layer].push_back(k);
  }
  ResourceStats& s = out.stats;
  s.depth = static_cast<int>(out.layers.size());
  s.qubit_count = static_cast<int>(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::kCNOT) {
      s.cnot_count++;
    } else if (g.kind == GateKind::kCP) {
      s.cp_count++;
    } else {
      s.single_qubit_count++;
    }
  }
  s.total_gates = s.cnot_count + s.cp_count + s.single_qubit_count;
  return out;
}

ResourceStats resource_stats(const Circuit& circuit) { return schedule(circuit).stats; }

int cnot_depth_formula(int n, int c, int t, IndexConvention convention) {
  if (c == t) throw std::invalid_argument("control and target must differ");
  if (c < 0 || t < 0 || c >= n || t >= n) throw std::invalid_argument("qubit index out of range");
  if (convention == IndexConvention::kOneBased) {
    c++;
    t++;
  }
  const double half = n / 2.0;
  const double dc = std::abs(half - c), dt = std::abs(half - t);
  const int k = dc == dt ? 1 : 0;
  return 2 * ((n + 1) / 2 + static_cast<int>(std::floor(std::max(dc, dt))) + k) + 3;
}

nlohmann::json stats_json(const ResourceStats& s) {
  return {{"qubits", s.qubit_count},   {"cnot", s.cnot_count},
          {"cp", s.cp_count},          {"single_qubit", s.single_qubit_count},
          {"total_gates", s.total_gates}, {"depth", s.depth}};
}

std::string stats_table(const ResourceStats& s) {
  std::vector<std::pair<std::string, int>> rows = {{"qubits", s.qubit_count},
                                                   {"CNOT", s.cnot_count},
                                                   {"single-qubit", s.single_qubit_count},
                                                   {"total gates", s.total_gates},
                                                   {"circuit depth", s.depth}};
  if (s.cp_count) rows.insert(rows.begin() + 2, {"CP", s.cp_count});
  std::ostringstream out;
  for (const auto& [label, v] : rows) {
    std::string l = label;
    l.resize(14, ' ');
    out << l << v << "\n";
  }
  return out.str();
}

}  // namespace parity
