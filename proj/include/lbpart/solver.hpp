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

// Simultaneous locally-balanced 2-partition of two forests.
//
// Both forests are decomposed into sibling groups, the groups become the two
// sides of a bipartite multigraph with one edge per vertex, and a balanced
// edge coloring of that multigraph is read back as a vertex partition. Every
// group then has discrepancy at most 1, and every neighborhood is a group
// plus at most one parent, which bounds each neighborhood by 2.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lbpart/aux_multigraph.hpp"
#include "lbpart/balanced_coloring.hpp"
#include "lbpart/decomposition.hpp"
#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/random.hpp"

namespace lbpart {

/// Largest neighborhood discrepancy the construction can produce.
inline constexpr std::size_t kGuaranteedBound = 2;

enum class ForestIndex { First = 1, Second = 2 };

struct BalanceReport {
  std::vector<std::size_t> per_vertex_b1;
  std::vector<std::size_t> per_vertex_b2;
  std::size_t max_b1 = 0;
  std::size_t max_b2 = 0;
  std::size_t achieved_k = 0;

  friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

struct SolveConfig {
  RootStrategy roots;
};

struct SolveResult {
  VertexPartition partition;
  BalanceReport report;
  RootedDecomposition first;
  RootedDecomposition second;
};

struct Certificate {
  VertexId vertex = 0;
  ForestIndex forest = ForestIndex::First;
  std::optional<std::size_t> children_group_b;
  std::optional<VertexId> parent;
  std::size_t neighborhood_b = 0;

  bool holds() const noexcept {
    const std::size_t cap = children_group_b ? *children_group_b + 1 : 1;
    return neighborhood_b <= cap && neighborhood_b <= kGuaranteedBound &&
           (!children_group_b || *children_group_b <= 1);
  }
};

namespace detail {

inline BalanceReport finish_report(std::vector<std::size_t> b1, std::vector<std::size_t> b2) {
  BalanceReport r;
  r.max_b1 = b1.empty() ? 0 : *std::max_element(b1.begin(), b1.end());
  r.max_b2 = b2.empty() ? 0 : *std::max_element(b2.begin(), b2.end());
  r.achieved_k = std::max(r.max_b1, r.max_b2);
  r.per_vertex_b1 = std::move(b1);
  r.per_vertex_b2 = std::move(b2);
  return r;
}

// Neighborhood discrepancy assembled from the decomposition: the children
// group of v plus its parent. Deliberately not using forest adjacency.
inline std::size_t group_route_discrepancy(const RootedDecomposition& d,
                                           const VertexPartition& f, VertexId v,
                                           std::optional<std::size_t>* group_b = nullptr) {
  std::ptrdiff_t balance = 0;
  if (auto g = d.children_group(v)) {
    const std::size_t b = discrepancy(f, d.group(*g));
    if (group_b) *group_b = b;
    for (VertexId w : d.group(*g)) balance += f[w] ? 1 : -1;
  } else if (group_b) {
    group_b->reset();
  }
  if (auto p = d.parent(v)) balance += f[*p] ? 1 : -1;
  return static_cast<std::size_t>(balance < 0 ? -balance : balance);
}

}  // namespace detail

inline SolveResult solve(const ForestPair& pair, const SolveConfig& config = {}) {
  RootStrategy s1 = config.roots;
  RootStrategy s2 = config.roots;
  if (config.roots.kind == RootStrategy::Kind::Seeded) {
    s1.seed = derive_seed(config.roots.seed, 1);
    s2.seed = derive_seed(config.roots.seed, 2);
  }

  SolveResult result;
  result.first = decompose(pair.g1, s1);
  result.second = decompose(pair.g2, s2);
  const auto h = build_aux(result.first, result.second);
  const EdgeColoring phi = balanced_two_coloring(h);

  const std::size_t n = pair.vertex_count();
  std::vector<std::uint8_t> bits(n);
  for (std::size_t v = 0; v < n; ++v) bits[v] = phi[v];
  result.partition = VertexPartition(std::move(bits));

  std::vector<std::size_t> b1(n), b2(n);
  for (VertexId v = 0; v < n; ++v) {
    b1[v] = detail::group_route_discrepancy(result.first, result.partition, v);
    b2[v] = detail::group_route_discrepancy(result.second, result.partition, v);
  }
  result.report = detail::finish_report(std::move(b1), std::move(b2));
  if (result.report.achieved_k > kGuaranteedBound) {
    throw Error(ErrorKind::InvariantViolation,
                "internal invariant failure: achieved k = " +
                    std::to_string(result.report.achieved_k) + " exceeds 2");
  }
  return result;
}

/// Recomputes every neighborhood discrepancy directly from the forests.
inline BalanceReport verify(const ForestPair& pair, const VertexPartition& partition) {
  const std::size_t n = pair.vertex_count();
  if (partition.size() != n) {
    throw Error(ErrorKind::LengthMismatch,
                "partition has " + std::to_string(partition.size()) + " entries, expected " +
                    std::to_string(n));
  }
  std::vector<std::size_t> b1(n), b2(n);
  for (VertexId v = 0; v < n; ++v) {
    b1[v] = discrepancy(partition, neighbors(pair.g1, v));
    b2[v] = discrepancy(partition, neighbors(pair.g2, v));
  }
  return detail::finish_report(std::move(b1), std::move(b2));
}

/// Per-vertex evidence that the neighborhood of `v` in one forest stays
/// within one of its children group's discrepancy. Throws
/// InvariantViolation when the chain does not hold.
inline Certificate certificate(const SolveResult& solved, VertexId v, ForestIndex forest) {
  const RootedDecomposition& d = forest == ForestIndex::First ? solved.first : solved.second;
  Certificate c;
  c.vertex = v;
  c.forest = forest;
  c.parent = d.parent(v);
  c.neighborhood_b = detail::group_route_discrepancy(d, solved.partition, v, &c.children_group_b);
  if (!c.holds()) {
    throw Error(ErrorKind::InvariantViolation,
                "certificate chain fails at vertex " + std::to_string(v));
  }
  return c;
}

}  // namespace lbpart
