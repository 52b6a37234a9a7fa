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

// Vertex-set primitives shared by every stage: validated forests, vertex
// 2-partitions and the subset discrepancy |#ones - #zeros|.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lbpart/error.hpp"

namespace lbpart {

using VertexId = std::uint32_t;

/// Undirected edge, normalized so that `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when both elements were already in the same set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

inline std::string edge_text(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

class Forest;
Forest build_forest(std::size_t vertex_count,
                    std::span<const std::pair<VertexId, VertexId>> edges);

/// Loopless acyclic undirected graph on vertices 0..n-1.
///
/// Edges are kept normalized and sorted; adjacency is stored in compressed
/// rows with each row sorted ascending. Instances are immutable and only
/// produced by `build_forest`, so every Forest in circulation is valid.
class Forest {
 public:
  Forest() = default;

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t component_count() const noexcept { return components_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.offsets_ == b.offsets_ && a.edges_ == b.edges_;
  }

 private:
  friend Forest build_forest(std::size_t,
                             std::span<const std::pair<VertexId, VertexId>>);

  void check(VertexId v) const {
    if (v >= vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(vertex_count()) + ")");
    }
  }

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::size_t components_ = 0;
};

/// Validates `edges` as a forest on `vertex_count` vertices.
///
/// Checks run in this order: id range and loops (input order), duplicates
/// (after normalization), then acyclicity via union-find.
inline Forest build_forest(std::size_t vertex_count,
                           std::span<const std::pair<VertexId, VertexId>> edges) {
  Forest forest;
  forest.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + detail::edge_text(a, b) + " has an id outside [0, " +
                      std::to_string(vertex_count) + ")");
    }
    if (a == b) {
      throw Error(ErrorKind::LoopEdge, "loop edge " + detail::edge_text(a, b));
    }
    forest.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(forest.edges_.begin(), forest.edges_.end());
  if (auto dup = std::adjacent_find(forest.edges_.begin(), forest.edges_.end());
      dup != forest.edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge " + detail::edge_text(dup->u, dup->v));
  }

  detail::DisjointSets sets(vertex_count);
  for (const auto& [a, b] : edges) {
    if (!sets.unite(a, b)) {
      throw Error(ErrorKind::CycleDetected,
                  "edge " + detail::edge_text(a, b) + " closes a cycle");
    }
  }
  forest.components_ = vertex_count - forest.edges_.size();

  forest.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : forest.edges_) {
    ++forest.offsets_[e.u + 1];
    ++forest.offsets_[e.v + 1];
  }
  std::partial_sum(forest.offsets_.begin(), forest.offsets_.end(),
                   forest.offsets_.begin());
  forest.adjacency_.resize(2 * forest.edges_.size());
  std::vector<std::size_t> fill(forest.offsets_.begin(), forest.offsets_.end() - 1);
  // Edges are sorted by (u, v): row u receives its larger neighbors in
  // ascending order, row v its smaller ones. Two passes keep rows sorted.
  for (const Edge& e : forest.edges_) forest.adjacency_[fill[e.v]++] = e.u;
  for (const Edge& e : forest.edges_) forest.adjacency_[fill[e.u]++] = e.v;
  return forest;
}

inline Forest build_forest(
    std::size_t vertex_count,
    std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build_forest(vertex_count,
                      std::span<const std::pair<VertexId, VertexId>>(
                          edges.begin(), edges.size()));
}

inline Forest build_forest(std::size_t vertex_count,
                           const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return build_forest(
      vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges));
}

/// γ(v): the sorted neighbor ids of `v`.
inline std::span<const VertexId> neighbors(const Forest& forest, VertexId v) {
  return forest.neighbors(v);
}

/// Edge list as plain id pairs, in the forest's normalized order.
inline std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Forest& forest) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(forest.edge_count());
  for (const Edge& e : forest.edges()) out.emplace_back(e.u, e.v);
  return out;
}

/// Two forests over the same vertex set.
struct ForestPair {
  Forest g1;
  Forest g2;

  ForestPair() = default;
  ForestPair(Forest first, Forest second) : g1(std::move(first)), g2(std::move(second)) {
    if (g1.vertex_count() != g2.vertex_count()) {
      throw Error(ErrorKind::VertexCountMismatch,
                  "forests have " + std::to_string(g1.vertex_count()) + " and " +
                      std::to_string(g2.vertex_count()) + " vertices");
    }
  }

  std::size_t vertex_count() const noexcept { return g1.vertex_count(); }

  friend bool operator==(const ForestPair&, const ForestPair&) = default;
};

/// A 2-partition of the vertex set: one bit per vertex.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::size_t n) : bits_(n, 0) {}
  explicit VertexPartition(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw Error(ErrorKind::InvalidConfig, "partition bits must be 0 or 1");
    }
  }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t v) const { return bits_[v]; }
  void set(std::size_t v, bool one) { bits_.at(v) = one ? 1 : 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  VertexPartition flipped() const {
    VertexPartition out = *this;
    for (auto& b : out.bits_) b ^= 1;
    return out;
  }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// b_f(subset) = |#{v in subset : f(v)=1} - #{v in subset : f(v)=0}|.
template <typename Range>
std::size_t discrepancy(const VertexPartition& partition, const Range& subset) {
  std::ptrdiff_t balance = 0;
  for (auto v : subset) {
    if (static_cast<std::size_t>(v) >= partition.size()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside partition of size " +
                      std::to_string(partition.size()));
    }
    balance += partition[static_cast<std::size_t>(v)] ? 1 : -1;
  }
  return static_cast<std::size_t>(balance < 0 ? -balance : balance);
}

inline std::size_t discrepancy(const VertexPartition& partition,
                               std::initializer_list<VertexId> subset) {
  return discrepancy<std::initializer_list<VertexId>>(partition, subset);
}

}  // namespace lbpart
