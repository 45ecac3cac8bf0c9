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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parity {

// A physical qubit named by the sorted set of logical indices whose parity it
// stores. A single index names a data qubit.
class QubitLabel {
 public:
  // Sorts the indices. Throws std::invalid_argument on empty input, negative
  // or repeated indices.
  explicit QubitLabel(std::vector<int> indices);
  QubitLabel(std::initializer_list<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  size_t size() const { return indices_.size(); }
  bool is_data() const { return indices_.size() == 1; }
  bool contains(int index) const;
  std::string str() const;

  auto operator<=>(const QubitLabel&) const = default;
  bool operator==(const QubitLabel&) const = default;

 private:
  std::vector<int> indices_;
};

// Bit assignment over an ordered register; entry k belongs to register qubit k.
using Bits = std::vector<uint8_t>;

struct GridPos {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPos&) const = default;
  bool operator==(const GridPos&) const = default;
};

// Manhattan distance 1.
bool grid_adjacent(GridPos a, GridPos b);
// Opposite corners of one unit square.
bool grid_diagonal(GridPos a, GridPos b);

// Z-type stabilizer over 3 or 4 physical qubits.
struct Constraint {
  std::vector<QubitLabel> members;
};

// Returns the logical indices that occur an odd number of times in the
// members of `c`. Empty for a valid constraint.
std::vector<int> odd_indices(const Constraint& c);

class ParityLayout {
 public:
  ParityLayout(int n_logical, std::vector<QubitLabel> qubits, std::vector<GridPos> positions,
               std::vector<Constraint> constraints, std::vector<std::vector<QubitLabel>> lines);

  int n_logical() const { return n_logical_; }
  size_t num_qubits() const { return qubits_.size(); }
  const std::vector<QubitLabel>& qubits() const { return qubits_; }
  const std::vector<GridPos>& positions() const { return positions_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<std::vector<QubitLabel>>& lines() const { return lines_; }
  const std::vector<QubitLabel>& line(int index) const;

  bool contains(const QubitLabel& label) const { return index_.count(label) != 0; }
  std::optional<size_t> find(const QubitLabel& label) const;
  // Throws std::invalid_argument naming the label if absent.
  size_t index_of(const QubitLabel& label) const;
  GridPos position(const QubitLabel& label) const;

  bool adjacent(const QubitLabel& a, const QubitLabel& b) const;
  bool diagonal(const QubitLabel& a, const QubitLabel& b) const;

 private:
  int n_logical_;
  std::vector<QubitLabel> qubits_;
  std::vector<GridPos> positions_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<QubitLabel>> lines_;
  std::map<QubitLabel, size_t> index_;
};

// XOR of the logical bits named by the label. Throws std::out_of_range naming
// the first index not covered by `logical_bits`.
uint8_t label_parity(const QubitLabel& label, const Bits& logical_bits);

// Physical basis state (ordered like layout.qubits()) encoding a logical one.
Bits code_basis_image(const ParityLayout& layout, const Bits& logical_bits);

// `state` is ordered like layout.qubits().
bool constraint_satisfied(const ParityLayout& layout, const Bits& state, const Constraint& c);

// Empty iff every layout invariant holds.
std::vector<std::string> validate_layout(const ParityLayout& layout);

// All valid constraints whose members sit in one unit square of the grid.
// Four present corners give a four-body constraint when valid; otherwise every
// valid three-corner subset is returned.
std::vector<Constraint> find_plaquette_constraints(const std::vector<QubitLabel>& qubits,
                                                   const std::vector<GridPos>& positions);

}  // namespace parity
