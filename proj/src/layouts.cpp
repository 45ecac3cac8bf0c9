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

#include "parity/layouts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace parity {

namespace {

GridPos corner_position(const QubitLabel& q) {
  if (q.is_data()) return {q.indices()[0], q.indices()[0]};
  return {q.indices()[1], q.indices()[0]};
}

bool label_order(const QubitLabel& a, const QubitLabel& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Builds a layout whose lines follow increasing x+y, which is the line order
// for every staircase placement used here.
ParityLayout staircase_layout(int n, std::map<QubitLabel, GridPos> placed) {
  std::vector<QubitLabel> qubits;
  for (const auto& [q, p] : placed) qubits.push_back(q);
  std::stable_sort(qubits.begin(), qubits.end(), label_order);
  std::vector<GridPos> positions;
  for (const auto& q : qubits) positions.push_back(placed.at(q));

  std::vector<std::vector<QubitLabel>> lines(n);
  for (int i = 0; i < n; i++) {
    for (const auto& q : qubits) {
      if (q.contains(i)) lines[i].push_back(q);
    }
    std::stable_sort(lines[i].begin(), lines[i].end(), [&](const QubitLabel& a, const QubitLabel& b) {
      GridPos pa = placed.at(a), pb = placed.at(b);
      return pa.x + pa.y < pb.x + pb.y;
    });
  }
  auto constraints = find_plaquette_constraints(qubits, positions);
  return ParityLayout(n, std::move(qubits), std::move(positions), std::move(constraints),
                      std::move(lines));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

ParityLayout lhz_layout(int n) {
  if (n < 2) throw std::invalid_argument("LHZ layout needs n >= 2");
  std::map<QubitLabel, GridPos> placed;
  for (int i = 0; i < n; i++) {
    for (int j = i; j < n; j++) {
      QubitLabel q = i == j ? QubitLabel{i} : QubitLabel{i, j};
      placed.emplace(q, corner_position(q));
    }
  }
  return staircase_layout(n, std::move(placed));
}

ParityLayout reduced_layout(int n, const std::set<QubitLabel>& required_labels,
                            const std::vector<Constraint>& constraints) {
  if (n < 1) throw std::invalid_argument("reduced layout needs n >= 1");
  std::map<QubitLabel, GridPos> placed;
  for (int i = 0; i < n; i++) placed.emplace(QubitLabel{i}, GridPos{i, i});
  for (const auto& q : required_labels) {
    if (q.size() != 2 || q.indices()[1] >= n) {
      throw std::invalid_argument("reduced layout only places two-body labels within 0.." +
                                  std::to_string(n - 1) + ", got " + q.str());
    }
    placed.emplace(q, corner_position(q));
  }
  ParityLayout base = staircase_layout(n, std::move(placed));
  ParityLayout layout(n, base.qubits(), base.positions(), constraints, base.lines());
  auto violations = validate_layout(layout);
  if (!violations.empty()) throw std::invalid_argument("invalid reduced layout: " + join(violations));
  return layout;
}

ParityLayout addition_layout(int n, bool register_internal) {
  if (n < 1) throw std::invalid_argument("addition layout needs n >= 1");
  std::map<QubitLabel, GridPos> placed;
  for (int i = 0; i < n; i++) {
    if (register_internal) {
      placed.emplace(QubitLabel{i}, GridPos{i, i});
      for (int k = i + 1; k < n; k++) placed.emplace(QubitLabel{i, k}, GridPos{k, i});
    } else {
      placed.emplace(QubitLabel{i}, GridPos{n - 1, i});
    }
    for (int j = 0; j < n; j++) placed.emplace(QubitLabel{i, n + j}, GridPos{n + j, i});
  }
  for (int j = 0; j < n; j++) placed.emplace(QubitLabel{n + j}, GridPos{n + j, n});
  return staircase_layout(2 * n, std::move(placed));
}

GroverIndices grover_indices(int m) {
  if (m < 2) throw std::invalid_argument("multi-controlled phase needs m >= 2 controls");
  GroverIndices g;
  for (int k = 0; k < m; k++) g.controls.push_back(k);
  g.target = m;
  for (int k = 1; k < m; k++) g.ancillas.push_back(m + k);
  return g;
}

ParityLayout grover_layout(int m) {
  const GroverIndices g = grover_indices(m);
  const int n = 2 * m;
  const auto& c = g.controls;
  const int t = g.target;
  auto anc = [&](int k) { return g.ancillas[k - 1]; };  // A_k, k = 1..m-1

  std::map<QubitLabel, GridPos> placed;
  std::vector<std::vector<QubitLabel>> lines(n);
  auto put = [&](const QubitLabel& q, int x, int y) { placed.emplace(q, GridPos{x, y}); };

  // First ancilla collects controls 0 and 1; (c0) sits diagonal to (c1,A1).
  const int a1 = anc(1);
  put({c[0], a1}, 0, 1);
  put({c[1], a1}, 1, 1);
  put({a1}, 2, 1);
  put({c[0]}, 0, 2);
  put({c[0], c[1]}, 1, 2);
  put({c[1]}, 2, 2);
  lines[c[0]] = {{c[0], a1}, {c[0]}, {c[0], c[1]}};
  lines[c[1]] = {{c[1]}, {c[0], c[1]}, {c[1], a1}};
  int u = 3, v = 0;
  if (m == 2) {
    put({a1, t}, 3, 1);
    put({t}, 3, 0);
    lines[a1] = {{c[0], a1}, {c[1], a1}, {a1}, {a1, t}};
    lines[t] = {{a1, t}, {t}};
  } else {
    put({c[2], a1}, 3, 1);
    put({a1, anc(2)}, u, v);
    lines[a1] = {{c[0], a1}, {c[1], a1}, {a1}, {c[2], a1}, {a1, anc(2)}};
  }

  // Ancilla k >= 2 starts at the junction (A_{k-1},A_k) at (u,v); control k
  // sits diagonal to that junction.
  for (int k = 2; k <= m - 1; k++) {
    const int ak = anc(k), prev = anc(k - 1);
    put({c[k], ak}, u + 1, v);
    put({c[k]}, u + 1, v + 1);
    put({ak}, u + 2, v);
    lines[c[k]] = {{c[k], prev}, {c[k]}, {c[k], ak}};
    if (k < m - 1) {
      const int next = anc(k + 1);
      put({c[k + 1], ak}, u + 3, v);
      put({ak, next}, u + 3, v - 1);
      lines[ak] = {{prev, ak}, {c[k], ak}, {ak}, {c[k + 1], ak}, {ak, next}};
      u += 3;
      v -= 1;
    } else {
      put({ak, t}, u + 3, v);
      put({t}, u + 3, v - 1);
      lines[ak] = {{prev, ak}, {c[k], ak}, {ak}, {ak, t}};
      lines[t] = {{ak, t}, {t}};
    }
  }

  std::vector<QubitLabel> qubits;
  for (const auto& [q, p] : placed) qubits.push_back(q);
  std::stable_sort(qubits.begin(), qubits.end(), label_order);
  std::vector<GridPos> positions;
  for (const auto& q : qubits) positions.push_back(placed.at(q));
  auto constraints = find_plaquette_constraints(qubits, positions);
  return ParityLayout(n, std::move(qubits), std::move(positions), std::move(constraints),
                      std::move(lines));
}

int grover_ancilla_qubit_count(const ParityLayout& layout, int m) {
  const GroverIndices g = grover_indices(m);
  int count = 0;
  for (const auto& q : layout.qubits()) {
    bool hit = std::any_of(g.ancillas.begin(), g.ancillas.end(), [&](int a) { return q.contains(a); });
    count += hit;
  }
  return count;
}

}  // namespace parity
