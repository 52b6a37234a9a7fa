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

#include "lbpart/balanced_coloring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lbpart/generators.hpp"
#include "test_support.hpp"

namespace lbpart {
namespace {

EdgeListMultigraph graph(std::size_t lefts, std::size_t rights,
                         std::vector<BipartiteEdge> edges) {
  return {lefts, rights, std::move(edges)};
}

AuxBipartiteMultigraph tightness_aux() {
  const ForestPair pair = tightness_example();
  return build_aux(decompose(pair.g1), decompose(pair.g2));
}

// Node ids: left l -> l, right r -> lefts + r.
bool is_closed_walk(const BipartiteMultigraph auto& g, const Circuit& c) {
  if (c.empty()) return false;
  const auto edges = g.edges();
  const std::size_t lefts = g.left_count();
  auto ends = [&](std::size_t e) {
    return std::pair{edges[e].left, lefts + edges[e].right};
  };
  for (std::size_t start : {ends(c[0]).first, ends(c[0]).second}) {
    std::size_t cur = start;
    bool ok = true;
    for (std::size_t e : c) {
      const auto [a, b] = ends(e);
      if (cur == a) {
        cur = b;
      } else if (cur == b) {
        cur = a;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && cur == start) return true;
  }
  return false;
}

void expect_parity_law(const BipartiteMultigraph auto& g, const EdgeColoring& colors) {
  ASSERT_EQ(colors.size(), g.edges().size());
  std::vector<long> left(g.left_count(), 0), right(g.right_count(), 0);
  std::vector<long> left_deg(g.left_count(), 0), right_deg(g.right_count(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    ASSERT_LE(colors[i], 1);
    const long s = colors[i] ? 1 : -1;
    left[g.edges()[i].left] += s;
    right[g.edges()[i].right] += s;
    ++left_deg[g.edges()[i].left];
    ++right_deg[g.edges()[i].right];
  }
  for (std::size_t v = 0; v < left.size(); ++v) ASSERT_EQ(std::labs(left[v]), left_deg[v] % 2);
  for (std::size_t v = 0; v < right.size(); ++v) ASSERT_EQ(std::labs(right[v]), right_deg[v] % 2);
}

TEST(AugmentEven, EvenGraphIsUnchanged) {
  const auto g = graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto a = augment_even(g);
  EXPECT_EQ(a.left_count(), 2u);
  EXPECT_EQ(a.right_count(), 2u);
  EXPECT_EQ(a.dummy_edge_count(), 0u);
  EXPECT_FALSE(a.left_dummy.has_value());
  EXPECT_FALSE(a.right_dummy.has_value());
}

TEST(AugmentEven, TightnessAuxGraph) {
  // Odd nodes: all five left singletons, right groups {0},{2},{3}. The right
  // dummy takes 5 edges, the left dummy 3, and one dummy-dummy edge evens both.
  const auto a = augment_even(tightness_aux());
  EXPECT_EQ(a.original_edge_count, 5u);
  EXPECT_EQ(a.dummy_edge_count(), 9u);
  ASSERT_TRUE(a.left_dummy && a.right_dummy);
  EXPECT_EQ(a.degree(Side::Left, *a.left_dummy), 4u);
  EXPECT_EQ(a.degree(Side::Right, *a.right_dummy), 6u);
  EXPECT_EQ(a.edge_list.back(), (BipartiteEdge{*a.left_dummy, *a.right_dummy}));
}

TEST(AugmentEven, SingleEdge) {
  const auto a = augment_even(graph(1, 1, {{0, 0}}));
  EXPECT_EQ(a.dummy_edge_count(), 3u);
  for (std::size_t l = 0; l < a.left_count(); ++l) EXPECT_EQ(a.degree(Side::Left, l) % 2, 0u);
  for (std::size_t r = 0; r < a.right_count(); ++r) EXPECT_EQ(a.degree(Side::Right, r) % 2, 0u);
}

TEST(AugmentEven, OddOnOneSideOnly) {
  // Left nodes 0 and 1 odd, right node 0 has degree 2.
  const auto a = augment_even(graph(2, 1, {{0, 0}, {1, 0}}));
  EXPECT_TRUE(a.right_dummy.has_value());
  EXPECT_FALSE(a.left_dummy.has_value());
  EXPECT_EQ(a.dummy_edge_count(), 2u);
}

TEST(AugmentEven, RejectsDanglingEdge) {
  EXPECT_EQ(testing::error_kind([] { augment_even(graph(1, 1, {{0, 1}})); }),
            ErrorKind::NodeOutOfRange);
}

TEST(EulerCircuits, ParallelPair) {
  const auto circuits = euler_circuits(graph(1, 1, {{0, 0}, {0, 0}}));
  ASSERT_EQ(circuits.size(), 1u);
  EXPECT_EQ(circuits[0], (Circuit{0, 1}));
}

TEST(EulerCircuits, FourCycle) {
  const auto g = graph(2, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto circuits = euler_circuits(g);
  ASSERT_EQ(circuits.size(), 1u);
  EXPECT_EQ(circuits[0].size(), 4u);
  EXPECT_TRUE(is_closed_walk(g, circuits[0]));
}

TEST(EulerCircuits, Edgeless) {
  EXPECT_TRUE(euler_circuits(graph(3, 2, {})).empty());
}

TEST(EulerCircuits, OneCircuitPerComponent) {
  const auto g = graph(2, 2, {{1, 1}, {0, 0}, {1, 1}, {0, 0}});
  const auto circuits = euler_circuits(g);
  ASSERT_EQ(circuits.size(), 2u);
  EXPECT_EQ(circuits[0], (Circuit{1, 3}));
  EXPECT_EQ(circuits[1], (Circuit{0, 2}));
}

TEST(EulerCircuits, RejectsOddDegree) {
  EXPECT_EQ(testing::error_kind([] { euler_circuits(graph(1, 1, {{0, 0}})); }),
            ErrorKind::OddDegree);
}

TEST(AlternateColors, Examples) {
  const std::vector<Circuit> pair{{0, 1}};
  EXPECT_EQ(alternate_colors(pair, 2), EdgeColoring({1, 0}));
  const std::vector<Circuit> four{{2, 0, 3, 1}};
  EXPECT_EQ(alternate_colors(four, 4), EdgeColoring({0, 0, 1, 1}));
  const std::vector<Circuit> two{{0, 1}, {2, 3}};
  EXPECT_EQ(alternate_colors(two, 4), EdgeColoring({1, 0, 1, 0}));
}

TEST(AlternateColors, RejectsOddCircuit) {
  const std::vector<Circuit> odd{{0, 1, 2}};
  EXPECT_EQ(testing::error_kind([&] { alternate_colors(odd, 3); }),
            ErrorKind::OddCircuitLength);
}

TEST(BalancedTwoColoring, DegreeTwoNodeSplits) {
  const auto colors = balanced_two_coloring(graph(1, 2, {{0, 0}, {0, 1}}));
  EXPECT_NE(colors[0], colors[1]);
}

TEST(BalancedTwoColoring, TightnessAuxGolden) {
  // Hand trace of the pipeline: augmented circuit
  // e0 e10 e11 e2 e7 e6 e1 e4 e9 e8 e3 e12 e13 e5, colored 1,0,1,0,...
  const auto h = tightness_aux();
  const auto colors = balanced_two_coloring(h);
  EXPECT_EQ(colors, EdgeColoring({1, 1, 0, 1, 0}));
  EXPECT_NE(colors[1], colors[4]);  // the two members of right group {1,4}
}

TEST(BalancedTwoColoring, Edgeless) {
  EXPECT_EQ(balanced_two_coloring(graph(2, 2, {})).size(), 0u);
}

TEST(BalancedTwoColoringProperty, ParityLawOnRandomMultigraphs) {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t lefts = 1 + rng() % 100;
    const std::size_t rights = 1 + rng() % 100;
    const std::size_t m = rng() % 2001;
    // Skewed picks produce heavy nodes and many parallel edges.
    auto pick = [&](std::size_t k) {
      return rng() % 4 == 0 ? rng() % std::min<std::size_t>(k, 3) : rng() % k;
    };
    std::vector<BipartiteEdge> edges(m);
    for (auto& e : edges) e = {pick(lefts), pick(rights)};
    const auto g = graph(lefts, rights, std::move(edges));

    const auto colors = balanced_two_coloring(g);
    expect_parity_law(g, colors);
    ASSERT_EQ(balanced_two_coloring(g), colors);

    const auto augmented = augment_even(g);
    const auto circuits = euler_circuits(augmented);
    std::vector<int> used(augmented.edge_list.size(), 0);
    for (const auto& c : circuits) {
      ASSERT_TRUE(is_closed_walk(augmented, c));
      ASSERT_EQ(c.size() % 2, 0u);
      for (auto e : c) ++used[e];
    }
    for (int u : used) ASSERT_EQ(u, 1);
  }
}

TEST(BalancedTwoColoringProperty, ComplementIsAlsoBalanced) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<BipartiteEdge> edges(rng() % 300);
    for (auto& e : edges) e = {rng() % 20, rng() % 20};
    const auto g = graph(20, 20, std::move(edges));
    const auto colors = balanced_two_coloring(g);
    std::vector<std::uint8_t> flipped(colors.bits().begin(), colors.bits().end());
    for (auto& b : flipped) b ^= 1;
    expect_parity_law(g, EdgeColoring(flipped));
  }
}

}  // namespace
}  // namespace lbpart
