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

#include <stdexcept>

#include "parity/code.hpp"
#include "parity/layouts.hpp"

using namespace parity;

namespace {

bool any_contains(const std::vector<std::string>& items, const std::string& needle) {
  for (const auto& s : items)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

Bits bits_of(uint64_t index, int n) {
  Bits b(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) b[static_cast<size_t>(i)] = (index >> i) & 1;
  return b;
}

}  // namespace

TEST(QubitLabel, SortsAndNames) {
  QubitLabel q{2, 0};
  EXPECT_EQ(q.indices(), (std::vector<int>{0, 2}));
  EXPECT_EQ(q.str(), "(0,2)");
  EXPECT_FALSE(q.is_data());
  EXPECT_TRUE(QubitLabel{3}.is_data());
  EXPECT_TRUE(q.contains(2));
  EXPECT_FALSE(q.contains(1));
}

TEST(QubitLabel, RejectsBadIndices) {
  EXPECT_THROW(QubitLabel(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW((QubitLabel{1, 1}), std::invalid_argument);
  EXPECT_THROW((QubitLabel{-1}), std::invalid_argument);
}

TEST(LabelParity, Examples) {
  EXPECT_EQ(label_parity(QubitLabel{1, 2}, Bits{0, 0, 1}), 1);
  EXPECT_EQ(label_parity(QubitLabel{3}, Bits{0, 0, 0, 1}), 1);
  EXPECT_EQ(label_parity(QubitLabel{0, 1, 2}, Bits{1, 1, 1}), 1);
}

TEST(LabelParity, MissingIndexIsNamed) {
  try {
    label_parity(QubitLabel{0, 5}, Bits{1, 0});
    FAIL() << "expected an exception";
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
  }
}

TEST(LabelParity, LinearUnderXor) {
  QubitLabel q{0, 2, 3};
  for (uint64_t a = 0; a < 16; a++) {
    for (uint64_t b = 0; b < 16; b++) {
      EXPECT_EQ(label_parity(q, bits_of(a ^ b, 4)), label_parity(q, bits_of(a, 4)) ^ label_parity(q, bits_of(b, 4)));
    }
  }
}

TEST(CodeBasisImage, Examples) {
  ParityLayout two = lhz_layout(2);
  // Register order (0), (1), (0,1).
  EXPECT_EQ(code_basis_image(two, Bits{0, 1}), (Bits{0, 1, 1}));
  EXPECT_EQ(code_basis_image(two, Bits{0, 0}), (Bits{0, 0, 0}));

  ParityLayout three = lhz_layout(3);
  Bits img = code_basis_image(three, Bits{1, 1, 0});
  EXPECT_EQ(img[three.index_of({0})], 1);
  EXPECT_EQ(img[three.index_of({1})], 1);
  EXPECT_EQ(img[three.index_of({2})], 0);
  EXPECT_EQ(img[three.index_of({0, 1})], 0);
  EXPECT_EQ(img[three.index_of({0, 2})], 1);
  EXPECT_EQ(img[three.index_of({1, 2})], 1);
}

TEST(CodeBasisImage, SatisfiesAllConstraints) {
  for (int n = 2; n <= 4; n++) {
    ParityLayout layout = lhz_layout(n);
    for (uint64_t s = 0; s < (uint64_t{1} << n); s++) {
      Bits img = code_basis_image(layout, bits_of(s, n));
      for (const auto& c : layout.constraints()) EXPECT_TRUE(constraint_satisfied(layout, img, c));
    }
  }
}

TEST(ConstraintSatisfied, OddParityFails) {
  ParityLayout layout = lhz_layout(4);
  const Constraint* four = nullptr;
  for (const auto& c : layout.constraints())
    if (c.members.size() == 4) four = &c;
  ASSERT_NE(four, nullptr);
  Bits state(layout.num_qubits(), 0);
  EXPECT_TRUE(constraint_satisfied(layout, state, *four));
  state[layout.index_of(four->members[0])] = 1;
  state[layout.index_of(four->members[1])] = 1;
  state[layout.index_of(four->members[3])] = 1;
  EXPECT_FALSE(constraint_satisfied(layout, state, *four));
}

TEST(OddIndices, DetectsUnevenConstraint) {
  EXPECT_TRUE(odd_indices({{{0, 1}, {1, 2}, {0, 2}}}).empty());
  EXPECT_EQ(odd_indices({{{0, 1}, {1, 2}, {0}}}), (std::vector<int>{2}));
}

TEST(ValidateLayout, BuilderOutputIsClean) { EXPECT_TRUE(validate_layout(lhz_layout(4)).empty()); }

TEST(ValidateLayout, DuplicateDataQubit) {
  ParityLayout base = lhz_layout(2);
  std::vector<QubitLabel> qubits{{0}, {1}, {0, 1}, {0}};
  std::vector<GridPos> pos{{0, 0}, {1, 1}, {1, 0}, {5, 5}};
  ParityLayout bad(2, qubits, pos, {}, base.lines());
  EXPECT_TRUE(any_contains(validate_layout(bad), "duplicate data qubit 0"));
}

TEST(ValidateLayout, OddConstraintIndex) {
  ParityLayout base = lhz_layout(3);
  std::vector<Constraint> constraints{{{{0, 1}, {1}, {1, 2}}}};
  ParityLayout bad(3, base.qubits(), base.positions(), constraints, base.lines());
  auto v = validate_layout(bad);
  EXPECT_TRUE(any_contains(v, "index 2"));
  EXPECT_TRUE(any_contains(v, "even number of times"));
}

TEST(ValidateLayout, BrokenLine) {
  ParityLayout base = lhz_layout(3);
  auto lines = base.lines();
  std::swap(lines[0][0], lines[0][1]);
  ParityLayout bad(3, base.qubits(), base.positions(), base.constraints(), lines);
  EXPECT_FALSE(validate_layout(bad).empty());
}

TEST(ValidateLayout, SharedPosition) {
  ParityLayout base = lhz_layout(2);
  auto pos = base.positions();
  pos[1] = pos[0];
  ParityLayout bad(2, base.qubits(), pos, {}, base.lines());
  EXPECT_FALSE(validate_layout(bad).empty());
}

TEST(Grid, AdjacencyAndDiagonal) {
  EXPECT_TRUE(grid_adjacent({0, 0}, {0, 1}));
  EXPECT_FALSE(grid_adjacent({0, 0}, {1, 1}));
  EXPECT_TRUE(grid_diagonal({0, 0}, {1, 1}));
  EXPECT_FALSE(grid_diagonal({0, 0}, {2, 0}));
}

TEST(PlaquetteConstraints, InvalidSquareFallsBackToTriangles) {
  std::vector<QubitLabel> qubits{{0, 1}, {0, 2}, {1, 2}, {1, 3}};
  std::vector<GridPos> pos{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto found = find_plaquette_constraints(qubits, pos);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].members.size(), 3u);
}

TEST(PlaquetteConstraints, ValidSquareIsFourBody) {
  std::vector<QubitLabel> qubits{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  std::vector<GridPos> pos{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto found = find_plaquette_constraints(qubits, pos);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].members.size(), 4u);
}
