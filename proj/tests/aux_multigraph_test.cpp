// Copyright 2026 The lbpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lbpart/aux_multigraph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lbpart/generators.hpp"
#include "test_support.hpp"

namespace lbpart {
namespace {

struct Fixture {
  RootedDecomposition first;
  RootedDecomposition second;
  AuxBipartiteMultigraph h;
};

Fixture tightness_fixture() {
  const ForestPair pair = tightness_example();
  Fixture f{decompose(pair.g1), decompose(pair.g2), {}};
  f.h = build_aux(f.first, f.second);
  return f;
}

TEST(BuildAux, TightnessExampleFixture) {
  // Left groups {0},{1},{2},{3},{4}; right groups {0},{1,4},{2},{3}.
  const auto f = tightness_fixture();
  ASSERT_EQ(f.h.left_count(), 5u);
  ASSERT_EQ(f.h.right_count(), 4u);
  const std::vector<BipartiteEdge> expected{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 1}};
  EXPECT_EQ(std::vector<BipartiteEdge>(f.h.edges().begin(), f.h.edges().end()), expected);
  EXPECT_EQ(node_degree(f.h, Side::Right, 1), 2u);
  for (std::size_t g : {0u, 2u, 3u}) EXPECT_EQ(node_degree(f.h, Side::Right, g), 1u);
  for (std::size_t g = 0; g < 5; ++g) EXPECT_EQ(node_degree(f.h, Side::Left, g), 1u);
  const auto inc = f.h.incidence(Side::Right, 1);
  EXPECT_EQ(std::vector<std::size_t>(inc.begin(), inc.end()), (std::vector<std::size_t>{1, 4}));
}

TEST(BuildAux, IdenticalSingleEdges) {
  const Forest g = build_forest(2, {{0, 1}});
  const auto d = decompose(g);
  const auto h = build_aux(d, d);
  EXPECT_EQ(h.left_count(), 2u);
  EXPECT_EQ(h.right_count(), 2u);
  EXPECT_EQ(h.edge_count(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(h.degree(Side::Left, i), 1u);
    EXPECT_EQ(h.degree(Side::Right, i), 1u);
  }
}

TEST(BuildAux, SingleVertex) {
  const auto d = decompose(build_forest(1, {}));
  const auto h = build_aux(d, d);
  ASSERT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(h.edges()[0], (BipartiteEdge{0, 0}));
  EXPECT_EQ(node_degree(h, Side::Left, 0), 1u);
  EXPECT_EQ(node_degree(h, Side::Right, 0), 1u);
}

TEST(BuildAux, Errors) {
  const auto d2 = decompose(build_forest(2, {}));
  const auto d3 = decompose(build_forest(3, {}));
  EXPECT_EQ(testing::error_kind([&] { build_aux(d2, d3); }), ErrorKind::VertexCountMismatch);
  const auto h = build_aux(d2, d2);
  EXPECT_EQ(testing::error_kind([&] { node_degree(h, Side::Left, 2); }),
            ErrorKind::NodeOutOfRange);
}

TEST(BuildAux, DotNamesNodesByMembers) {
  const auto f = tightness_fixture();
  const std::string dot = aux_to_dot(f.h, f.first, f.second);
  EXPECT_NE(dot.find("R1 [label=\"{1,4}\"]"), std::string::npos);
  EXPECT_NE(dot.find("L4 -- R1 [label=\"4\"]"), std::string::npos);
}

TEST(AuxProperty, BijectionAndDegrees) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = 1 + rng() % 80;
    const ForestPair pair = testing::random_pair(n, rng);
    const auto d1 = decompose(pair.g1, RootStrategy::seeded(rng()));
    const auto d2 = decompose(pair.g2);
    const auto h = build_aux(d1, d2);
    ASSERT_EQ(h.edge_count(), n);
    for (VertexId v = 0; v < n; ++v) {
      const auto& e = h.edges()[v];
      const auto left = d1.group(e.left);
      const auto right = d2.group(e.right);
      ASSERT_NE(std::find(left.begin(), left.end(), v), left.end());
      ASSERT_NE(std::find(right.begin(), right.end(), v), right.end());
    }
    std::size_t left_sum = 0, right_sum = 0;
    for (std::size_t g = 0; g < h.left_count(); ++g) {
      ASSERT_EQ(h.degree(Side::Left, g), d1.group(g).size());
      ASSERT_GT(h.degree(Side::Left, g), 0u);
      left_sum += h.degree(Side::Left, g);
    }
    for (std::size_t g = 0; g < h.right_count(); ++g) {
      ASSERT_EQ(h.degree(Side::Right, g), d2.group(g).size());
      right_sum += h.degree(Side::Right, g);
    }
    ASSERT_EQ(left_sum, n);
    ASSERT_EQ(right_sum, n);
  }
}

}  // namespace
}  // namespace lbpart
