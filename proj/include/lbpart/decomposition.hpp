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

// Rooted level decomposition of a forest.
//
// Each tree is rooted and explored breadth-first. The children of a vertex u
// form one sibling group; together with the root singletons these groups
// partition the vertex set. For every vertex v, its neighborhood is its own
// children group plus at most one extra vertex (its parent), which is the
// property the balanced partition builds on.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/random.hpp"

namespace lbpart {

struct RootStrategy {
  enum class Kind { MinId, Seeded };

  Kind kind = Kind::MinId;
  std::uint64_t seed = 0;

  static RootStrategy min_id() { return {}; }
  static RootStrategy seeded(std::uint64_t s) { return {Kind::Seeded, s}; }

  friend bool operator==(const RootStrategy&, const RootStrategy&) = default;
};

inline std::string to_string(const RootStrategy& strategy) {
  return strategy.kind == RootStrategy::Kind::MinId ? "min-id" : "seeded";
}

using GroupIndex = std::size_t;

class RootedDecomposition {
 public:
  static constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();
  static constexpr GroupIndex kNoGroup = std::numeric_limits<GroupIndex>::max();

  std::size_t vertex_count() const noexcept { return level_.size(); }
  std::size_t component_count() const noexcept { return roots_.size(); }
  std::span<const VertexId> roots() const noexcept { return roots_; }

  std::optional<VertexId> parent(VertexId v) const {
    check(v);
    if (parent_[v] == kNoParent) return std::nullopt;
    return parent_[v];
  }
  std::size_t level(VertexId v) const {
    check(v);
    return level_[v];
  }
  /// Greatest level per component, in root order.
  std::span<const std::size_t> max_levels() const noexcept { return max_level_; }

  std::size_t group_count() const noexcept { return group_offsets_.size() - 1; }
  std::span<const VertexId> group(GroupIndex g) const {
    if (g >= group_count()) {
      throw Error(ErrorKind::NodeOutOfRange, "group " + std::to_string(g) + " out of range");
    }
    return {group_members_.data() + group_offsets_[g],
            group_members_.data() + group_offsets_[g + 1]};
  }
  GroupIndex group_of(VertexId v) const {
    check(v);
    return group_of_[v];
  }

  /// Group made of the children of `v`, absent for leaves and isolated roots.
  std::optional<GroupIndex> children_group(VertexId v) const {
    check(v);
    if (children_group_[v] == kNoGroup) return std::nullopt;
    return children_group_[v];
  }

 private:
  friend RootedDecomposition decompose(const Forest&, std::span<const VertexId>);

  void check(VertexId v) const {
    if (v >= vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(vertex_count()) + ")");
    }
  }

  std::vector<VertexId> roots_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> max_level_;
  // Groups in CSR form: members of group g are
  // group_members_[group_offsets_[g] .. group_offsets_[g+1]).
  std::vector<std::size_t> group_offsets_{0};
  std::vector<VertexId> group_members_;
  std::vector<GroupIndex> group_of_;
  std::vector<GroupIndex> children_group_;
};

/// Component representatives ordered by each component's least vertex.
inline std::vector<std::vector<VertexId>> components(const Forest& forest) {
  const std::size_t n = forest.vertex_count();
  std::vector<std::vector<VertexId>> out;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& members = out.emplace_back();
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (VertexId w : forest.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

/// One root per component, components ordered by least vertex id.
/// `seeded` picks a uniform member per component from one engine stream.
inline std::vector<VertexId> choose_roots(const Forest& forest,
                                          const RootStrategy& strategy = {}) {
  std::vector<VertexId> roots;
  if (strategy.kind == RootStrategy::Kind::MinId) {
    // Smallest id of each component is the first unvisited id in a scan.
    std::vector<std::uint8_t> seen(forest.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < forest.vertex_count(); ++start) {
      if (seen[start]) continue;
      roots.push_back(start);
      seen[start] = 1;
      stack.push_back(start);
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : forest.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    return roots;
  }
  Engine engine(strategy.seed);
  for (const auto& members : components(forest)) {
    roots.push_back(members[uniform_below(engine, members.size())]);
  }
  return roots;
}

/// Breadth-first decomposition from the given roots, one per component.
///
/// Neighbors are enqueued in ascending id order. Group indices are stable:
/// for each component in root order, the root singleton comes first, then
/// the children groups in the order their parents leave the queue.
inline RootedDecomposition decompose(const Forest& forest,
                                     std::span<const VertexId> roots) {
  const std::size_t n = forest.vertex_count();
  if (roots.size() != forest.component_count()) {
    throw Error(ErrorKind::InvalidRoots,
                "expected " + std::to_string(forest.component_count()) +
                    " roots, got " + std::to_string(roots.size()));
  }

  RootedDecomposition d;
  d.roots_.assign(roots.begin(), roots.end());
  d.parent_.assign(n, RootedDecomposition::kNoParent);
  d.level_.assign(n, 0);
  d.group_of_.assign(n, RootedDecomposition::kNoGroup);
  d.children_group_.assign(n, RootedDecomposition::kNoGroup);
  d.max_level_.reserve(roots.size());
  d.group_offsets_.reserve(n + 1);
  d.group_members_.reserve(n);

  std::vector<std::uint8_t> visited(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);

  auto close_group = [&d] {
    const GroupIndex g = d.group_offsets_.size() - 1;
    for (std::size_t i = d.group_offsets_.back(); i < d.group_members_.size(); ++i) {
      d.group_of_[d.group_members_[i]] = g;
    }
    d.group_offsets_.push_back(d.group_members_.size());
    return g;
  };

  for (VertexId root : roots) {
    if (root >= n) {
      throw Error(ErrorKind::InvalidRoots, "root " + std::to_string(root) + " out of range");
    }
    if (visited[root]) {
      throw Error(ErrorKind::InvalidRoots,
                  "root " + std::to_string(root) + " lies in an already rooted component");
    }
    visited[root] = 1;
    d.group_members_.push_back(root);
    close_group();

    std::size_t head = queue.size();
    queue.push_back(root);
    std::size_t deepest = 0;
    while (head < queue.size()) {
      const VertexId u = queue[head++];
      deepest = d.level_[u];
      const std::size_t before = d.group_members_.size();
      for (VertexId w : forest.neighbors(u)) {
        if (visited[w]) continue;
        visited[w] = 1;
        d.parent_[w] = u;
        d.level_[w] = d.level_[u] + 1;
        d.group_members_.push_back(w);
        queue.push_back(w);
      }
      if (d.group_members_.size() > before) d.children_group_[u] = close_group();
    }
    d.max_level_.push_back(deepest);
  }
  return d;
}

inline RootedDecomposition decompose(const Forest& forest,
                                     const RootStrategy& strategy = {}) {
  const auto roots = choose_roots(forest, strategy);
  return decompose(forest, roots);
}

inline std::optional<GroupIndex> children_group(const RootedDecomposition& d, VertexId v) {
  return d.children_group(v);
}

}  // namespace lbpart
