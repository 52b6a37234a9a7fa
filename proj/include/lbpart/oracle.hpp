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

// Exhaustive minimum-k search for small instances.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"

namespace lbpart {

inline constexpr std::size_t kDefaultOracleLimit = 24;
inline constexpr std::size_t kOracleHardLimit = 63;

struct OracleResult {
  std::size_t k_min = 0;
  VertexPartition witness;
  std::uint64_t enumerated = 0;
};

/// Smallest achievable max neighborhood discrepancy over both forests.
///
/// Complementing a partition leaves every discrepancy unchanged, so vertex 0
/// is pinned to part 0 and only 2^(n-1) partitions are scanned. Bit vectors
/// are visited in lexicographic order (vertex 0 most significant), and the
/// first optimum found is returned as the witness.
inline OracleResult oracle_min_k(const ForestPair& pair,
                                 std::size_t n_limit = kDefaultOracleLimit) {
  const std::size_t n = pair.vertex_count();
  if (n > n_limit || n > kOracleHardLimit) {
    throw Error(ErrorKind::TooLarge,
                "oracle limited to n <= " + std::to_string(std::min(n_limit, kOracleHardLimit)) +
                    ", got n = " + std::to_string(n));
  }
  OracleResult result;
  if (n == 0) {
    result.enumerated = 1;
    return result;
  }

  // Vertex v sits at bit (n-1-v), so counting upward is lexicographic order.
  auto bit_of = [n](VertexId v) { return std::uint64_t{1} << (n - 1 - v); };
  std::vector<std::uint64_t> masks;
  std::vector<int> degrees;
  masks.reserve(2 * n);
  for (const Forest* g : {&pair.g1, &pair.g2}) {
    for (VertexId v = 0; v < n; ++v) {
      std::uint64_t m = 0;
      for (VertexId w : g->neighbors(v)) m |= bit_of(w);
      if (m == 0) continue;
      masks.push_back(m);
      degrees.push_back(std::popcount(m));
    }
  }

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_assignment = 0;
  for (std::uint64_t x = 0; x < count; ++x) {
    std::size_t worst = 0;
    for (std::size_t i = 0; i < masks.size() && worst < best; ++i) {
      const int ones = std::popcount(masks[i] & x);
      const int diff = 2 * ones - degrees[i];
      worst = std::max(worst, static_cast<std::size_t>(diff < 0 ? -diff : diff));
    }
    if (worst < best) {
      best = worst;
      best_assignment = x;
    }
  }

  result.k_min = best;
  result.enumerated = count;
  result.witness = VertexPartition(n);
  for (VertexId v = 0; v < n; ++v) result.witness.set(v, (best_assignment & bit_of(v)) != 0);
  return result;
}

}  // namespace lbpart
