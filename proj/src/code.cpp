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

#include "parity/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parity {

QubitLabel::QubitLabel(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("qubit label needs at least one index");
  std::sort(indices_.begin(), indices_.end());
  if (indices_.front() < 0) throw std::invalid_argument("negative logical index in qubit label");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("repeated logical index in qubit label");
  }
}

QubitLabel::QubitLabel(std::initializer_list<int> indices)
    : QubitLabel(std::vector<int>(indices)) {}

bool QubitLabel::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::string QubitLabel::str() const {
  std::string out = "(";
  for (size_t k = 0; k < indices_.size(); k++) {
    if (k) out += ",";
    out += std::to_string(indices_[k]);
  }
  return out + ")";
}

bool grid_adjacent(GridPos a, GridPos b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

bool grid_diagonal(GridPos a, GridPos b) {
  return std::abs(a.x - b.x) == 1 && std::abs(a.y - b.y) == 1;
}

std::vector<int> odd_indices(const Constraint& c) {
  std::map<int, int> count;
  for (const auto& m : c.members) {
    for (int i : m.indices()) count[i]++;
  }
  std::vector<int> odd;
  for (auto [i, k] : count) {
    if (k % 2) odd.push_back(i);
  }
  return odd;
}

ParityLayout::ParityLayout(int n_logical, std::vector<QubitLabel> qubits,
                           std::vector<GridPos> positions, std::vector<Constraint> constraints,
                           std::vector<std::vector<QubitLabel>> lines)
    : n_logical_(n_logical),
      qubits_(std::move(qubits)),
      positions_(std::move(positions)),
      constraints_(std::move(constraints)),
      lines_(std::move(lines)) {
  for (size_t k = 0; k < qubits_.size(); k++) index_.emplace(qubits_[k], k);
}

const std::vector<QubitLabel>& ParityLayout::line(int index) const {
  if (index < 0 || static_cast<size_t>(index) >= lines_.size()) {
    throw std::out_of_range("no logical line for index " + std::to_string(index));
  }
  return lines_[index];
}

std::optional<size_t> ParityLayout::find(const QubitLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t ParityLayout::index_of(const QubitLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw std::invalid_argument("qubit " + label.str() + " is not part of the layout");
  }
  return it->second;
}

GridPos ParityLayout::position(const QubitLabel& label) const {
  size_t k = index_of(label);
  if (k >= positions_.size()) throw std::out_of_range("no position for qubit " + label.str());
  return positions_[k];
}

bool ParityLayout::adjacent(const QubitLabel& a, const QubitLabel& b) const {
  return grid_adjacent(position(a), position(b));
}

bool ParityLayout::diagonal(const QubitLabel& a, const QubitLabel& b) const {
  return grid_diagonal(position(a), position(b));
}

uint8_t label_parity(const QubitLabel& label, const Bits& logical_bits) {
  uint8_t p = 0;
  for (int i : label.indices()) {
    if (static_cast<size_t>(i) >= logical_bits.size()) {
      throw std::out_of_range("logical index " + std::to_string(i) + " missing from basis state");
    }
    p ^= logical_bits[i] & 1;
  }
  return p;
}

Bits code_basis_image(const ParityLayout& layout, const Bits& logical_bits) {
  if (logical_bits.size() != static_cast<size_t>(layout.n_logical())) {
    throw std::invalid_argument("logical basis state must cover all " +
                                std::to_string(layout.n_logical()) + " logical qubits");
  }
  Bits out;
  out.reserve(layout.num_qubits());
  for (const auto& q : layout.qubits()) out.push_back(label_parity(q, logical_bits));
  return out;
}

bool constraint_satisfied(const ParityLayout& layout, const Bits& state, const Constraint& c) {
  uint8_t p = 0;
  for (const auto& m : c.members) p ^= state.at(layout.index_of(m)) & 1;
  return p == 0;
}

namespace {

std::string pos_str(GridPos p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

std::vector<std::string> validate_layout(const ParityLayout& layout) {
  std::vector<std::string> out;
  const int n = layout.n_logical();
  const auto& qubits = layout.qubits();
  const auto& positions = layout.positions();

  if (positions.size() != qubits.size()) {
    out.push_back("layout has " + std::to_string(qubits.size()) + " qubits but " +
                  std::to_string(positions.size()) + " positions");
  }

  std::set<QubitLabel> seen;
  std::vector<int> data_count(std::max(n, 0), 0);
  for (const auto& q : qubits) {
    if (q.indices().back() >= n) {
      out.push_back("qubit " + q.str() + " names a logical index outside 0.." +
                    std::to_string(n - 1));
    }
    if (!seen.insert(q).second) {
      out.push_back(q.is_data() ? "duplicate data qubit " + std::to_string(q.indices()[0])
                                : "duplicate qubit " + q.str());
    }
    if (q.is_data() && q.indices()[0] < n) data_count[q.indices()[0]]++;
  }
  for (int i = 0; i < n; i++) {
    if (data_count[i] == 0) out.push_back("missing data qubit " + std::to_string(i));
  }

  std::map<GridPos, size_t> occupied;
  for (size_t k = 0; k < std::min(qubits.size(), positions.size()); k++) {
    auto [it, fresh] = occupied.emplace(positions[k], k);
    if (!fresh) {
      out.push_back("qubits " + qubits[it->second].str() + " and " + qubits[k].str() +
                    " share position " + pos_str(positions[k]));
    }
  }
  const bool have_positions = positions.size() == qubits.size();

  if (layout.lines().size() != static_cast<size_t>(n)) {
    out.push_back("layout has " + std::to_string(layout.lines().size()) + " logical lines for " +
                  std::to_string(n) + " logical qubits");
  }
  for (size_t i = 0; i < layout.lines().size(); i++) {
    const auto& line = layout.lines()[i];
    const std::string name = "line " + std::to_string(i);
    std::set<QubitLabel> members;
    for (const auto& q : line) {
      if (!members.insert(q).second) out.push_back(name + " lists " + q.str() + " twice");
      if (!q.contains(static_cast<int>(i))) {
        out.push_back(name + " contains " + q.str() + " which does not include index " +
                      std::to_string(i));
      }
      if (!layout.contains(q)) out.push_back(name + " contains unknown qubit " + q.str());
    }
    for (const auto& q : qubits) {
      if (q.contains(static_cast<int>(i)) && !members.count(q)) {
        out.push_back(name + " is missing qubit " + q.str());
      }
    }
    if (!have_positions) continue;
    for (size_t k = 1; k < line.size(); k++) {
      if (layout.contains(line[k - 1]) && layout.contains(line[k]) &&
          !layout.adjacent(line[k - 1], line[k])) {
        out.push_back(name + ": " + line[k - 1].str() + " and " + line[k].str() +
                      " are not grid-adjacent");
      }
    }
  }

  for (size_t c = 0; c < layout.constraints().size(); c++) {
    const auto& con = layout.constraints()[c];
    const std::string name = "constraint " + std::to_string(c);
    if (con.members.size() < 3 || con.members.size() > 4) {
      out.push_back(name + " has " + std::to_string(con.members.size()) +
                    " members (expected 3 or 4)");
    }
    bool known = true;
    for (const auto& m : con.members) {
      if (!layout.contains(m)) {
        out.push_back(name + " references unknown qubit " + m.str());
        known = false;
      }
    }
    for (int i : odd_indices(con)) {
      out.push_back(name + ": index " + std::to_string(i) +
                    " occurs an odd number of times (each index must occur an even number of "
                    "times)");
    }
    if (known && have_positions && !con.members.empty()) {
      int x0 = INT32_MAX, x1 = INT32_MIN, y0 = INT32_MAX, y1 = INT32_MIN;
      for (const auto& m : con.members) {
        GridPos p = layout.position(m);
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
      }
      if (x1 - x0 > 1 || y1 - y0 > 1) {
        out.push_back(name + " members do not fit in one unit plaquette");
      }
    }
  }
  return out;
}

std::vector<Constraint> find_plaquette_constraints(const std::vector<QubitLabel>& qubits,
                                                   const std::vector<GridPos>& positions) {
  std::map<GridPos, size_t> at;
  for (size_t k = 0; k < qubits.size() && k < positions.size(); k++) at.emplace(positions[k], k);

  std::set<std::pair<int, int>> squares;  // (y, x) of the lower-left corner
  for (const auto& [p, k] : at) {
    for (int dy = -1; dy <= 0; dy++) {
      for (int dx = -1; dx <= 0; dx++) squares.insert({p.y + dy, p.x + dx});
    }
  }

  std::vector<Constraint> out;
  for (auto [y, x] : squares) {
    std::vector<QubitLabel> corners;
    for (GridPos p : {GridPos{x, y}, GridPos{x + 1, y}, GridPos{x, y + 1}, GridPos{x + 1, y + 1}}) {
      auto it = at.find(p);
      if (it != at.end()) corners.push_back(qubits[it->second]);
    }
    if (corners.size() < 3) continue;
    if (corners.size() == 4) {
      Constraint c{corners};
      if (odd_indices(c).empty()) {
        out.push_back(std::move(c));
        continue;
      }
    }
    for (size_t skip = 0; skip < corners.size(); skip++) {
      if (corners.size() == 3 && skip > 0) break;
      Constraint c;
      for (size_t k = 0; k < corners.size(); k++) {
        if (corners.size() == 4 && k == skip) continue;
        c.members.push_back(corners[k]);
      }
      if (odd_indices(c).empty()) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace parity
