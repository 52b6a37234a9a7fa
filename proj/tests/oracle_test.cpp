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

#include "lbpart/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lbpart/generators.hpp"
#include "lbpart/solver.hpp"
#include "test_support.hpp"

namespace lbpart {
namespace {

TEST(Oracle, TightnessExampleNeedsTwo) {
  const ForestPair pair = tightness_example();
  const auto result = oracle_min_k(pair);
  EXPECT_EQ(result.k_min, 2u);
  EXPECT_EQ(result.enumerated, 16u);
  // All-zero already reaches 2 and is first in lexicographic order.
  EXPECT_EQ(result.witness, VertexPartition(5));
  EXPECT_EQ(verify(pair, result.witness).achieved_k, 2u);
}

TEST(Oracle, SharedSingleEdge) {
  const ForestPair pair(build_forest(2, {{0, 1}}), build_forest(2, {{0, 1}}));
  EXPECT_EQ(oracle_min_k(pair).k_min, 1u);
}

TEST(Oracle, EdgelessForests) {
  const ForestPair pair(build_forest(4, {}), build_forest(4, {}));
  const auto result = oracle_min_k(pair);
  EXPECT_EQ(result.k_min, 0u);
  EXPECT_EQ(result.enumerated, 8u);
}

TEST(Oracle, TooLarge) {
  const ForestPair big(build_forest(25, {}), build_forest(25, {}));
  EXPECT_EQ(testing::error_kind([&] { oracle_min_k(big); }), ErrorKind::TooLarge);
  EXPECT_EQ(testing::error_kind([] { oracle_min_k(tightness_example(), 4); }),
            ErrorKind::TooLarge);
}

// First optimal bit vector with bit 0 fixed to 0, in lexicographic order.
std::vector<int> lexicographic_first_optimum(const ForestPair& pair, std::size_t k) {
  const std::size_t n = pair.vertex_count();
  const auto e1 = edge_pairs(pair.g1);
  const auto e2 = edge_pairs(pair.g2);
  std::vector<int> bits(n, 0);
  // Odometer increment from the last position gives lexicographic order.
  while (true) {
    if (testing::max_discrepancy(n, e1, e2, bits) == k) return bits;
    std::size_t i = n;
    while (i > 1 && bits[i - 1] == 1) bits[--i] = 0;
    if (i <= 1) return {};
    bits[i - 1] = 1;
  }
}

TEST(OracleProperty, AgreesWithUnprunedEnumeration) {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = 1 + rng() % 10;
    const ForestPair pair = testing::random_pair(n, rng);
    const auto result = oracle_min_k(pair);
    ASSERT_EQ(result.k_min, testing::brute_force_min_k(pair));
    ASSERT_EQ(result.enumerated, std::uint64_t{1} << (n - 1));
    ASSERT_EQ(result.witness[0], 0);
    ASSERT_EQ(verify(pair, result.witness).achieved_k, result.k_min);
    const auto achieved = solve(pair).report.achieved_k;
    ASSERT_LE(result.k_min, achieved);
    ASSERT_LE(achieved, 2u);
    if (n <= 8) {
      const auto first = lexicographic_first_optimum(pair, result.k_min);
      ASSERT_EQ(std::vector<std::uint8_t>(first.begin(), first.end()),
                std::vector<std::uint8_t>(result.witness.bits().begin(),
                                          result.witness.bits().end()));
    }
  }
}

}  // namespace
}  // namespace lbpart
