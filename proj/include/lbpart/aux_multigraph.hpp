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

#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lbpart/decomposition.hpp"
#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"

namespace lbpart {

enum class Side { Left, Right };

struct BipartiteEdge {
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

/// Bipartite multigraph whose left nodes are the groups of the first
/// decomposition, right nodes the groups of the second, with one edge per
/// shared vertex. Edge index == vertex id, so the vertex/edge bijection and
/// its inverse are both the identity on indices. Parallel edges are kept.
class AuxBipartiteMultigraph {
 public:
  std::size_t left_count() const noexcept { return left_offsets_.size() - 1; }
  std::size_t right_count() const noexcept { return right_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const BipartiteEdge> edges() const noexcept { return edges_; }

  /// Incident edge indices of a node, ascending.
  std::span<const std::size_t> incidence(Side side, std::size_t node) const {
    const auto& offsets = side == Side::Left ? left_offsets_ : right_offsets_;
    const auto& lists = side == Side::Left ? left_incidence_ : right_incidence_;
    if (node + 1 >= offsets.size()) {
      throw Error(ErrorKind::NodeOutOfRange,
                  std::string(side == Side::Left ? "left" : "right") + " node " +
                      std::to_string(node) + " out of range");
    }
    return {lists.data() + offsets[node], lists.data() + offsets[node + 1]};
  }

  std::size_t degree(Side side, std::size_t node) const {
    return incidence(side, node).size();
  }

 private:
  friend AuxBipartiteMultigraph build_aux(const RootedDecomposition&,
                                          const RootedDecomposition&);

  std::vector<BipartiteEdge> edges_;
  std::vector<std::size_t> left_offsets_{0};
  std::vector<std::size_t> right_offsets_{0};
  std::vector<std::size_t> left_incidence_;
  std::vector<std::size_t> right_incidence_;
};

namespace detail {

inline void bucket_incidence(std::size_t node_count, std::span<const BipartiteEdge> edges,
                             bool left, std::vector<std::size_t>& offsets,
                             std::vector<std::size_t>& lists) {
  offsets.assign(node_count + 1, 0);
  for (const auto& e : edges) ++offsets[(left ? e.left : e.right) + 1];
  for (std::size_t i = 0; i < node_count; ++i) offsets[i + 1] += offsets[i];
  lists.resize(edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    lists[fill[left ? edges[i].left : edges[i].right]++] = i;
  }
}

}  // namespace detail

inline AuxBipartiteMultigraph build_aux(const RootedDecomposition& first,
                                        const RootedDecomposition& second) {
  const std::size_t n = first.vertex_count();
  if (second.vertex_count() != n) {
    throw Error(ErrorKind::VertexCountMismatch,
                "decompositions cover " + std::to_string(n) + " and " +
                    std::to_string(second.vertex_count()) + " vertices");
  }
  AuxBipartiteMultigraph h;
  h.edges_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    h.edges_.push_back({first.group_of(v), second.group_of(v)});
  }
  detail::bucket_incidence(first.group_count(), h.edges_, true, h.left_offsets_,
                           h.left_incidence_);
  detail::bucket_incidence(second.group_count(), h.edges_, false, h.right_offsets_,
                           h.right_incidence_);
  return h;
}

inline std::size_t node_degree(const AuxBipartiteMultigraph& h, Side side,
                               std::size_t node) {
  return h.degree(side, node);
}

/// Graphviz dump of the multigraph. Nodes are named by their member lists,
/// edges labeled by the vertex they stand for.
inline std::string aux_to_dot(const AuxBipartiteMultigraph& h,
                              const RootedDecomposition& first,
                              const RootedDecomposition& second) {
  auto members = [](std::span<const VertexId> group) {
    std::string s = "{";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(group[i]);
    }
    return s + "}";
  };
  std::ostringstream out;
  out << "graph aux {\n  rankdir=LR;\n";
  for (std::size_t g = 0; g < h.left_count(); ++g) {
    out << "  L" << g << " [label=\"" << members(first.group(g)) << "\"];\n";
  }
  for (std::size_t g = 0; g < h.right_count(); ++g) {
    out << "  R" << g << " [label=\"" << members(second.group(g)) << "\"];\n";
  }
  for (std::size_t v = 0; v < h.edge_count(); ++v) {
    const auto& e = h.edges()[v];
    out << "  L" << e.left << " -- R" << e.right << " [label=\"" << v << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lbpart
