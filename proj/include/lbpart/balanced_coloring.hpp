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

// Balanced 2-coloring of the edges of a bipartite multigraph.
//
// Construction: pad the graph with one dummy node per side so that every
// degree is even, split each component into an Eulerian circuit, and color
// the circuit edges alternately. A bipartite circuit has even length, so
// each visit to a node contributes one edge of each color. After dropping
// the dummy edges, every node ends up with |#1 - #0| == deg mod 2.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbpart/aux_multigraph.hpp"
#include "lbpart/error.hpp"

namespace lbpart {

template <typename G>
concept BipartiteMultigraph = requires(const G& g) {
  { g.left_count() } -> std::convertible_to<std::size_t>;
  { g.right_count() } -> std::convertible_to<std::size_t>;
  { g.edges()[0].left } -> std::convertible_to<std::size_t>;
  { g.edges()[0].right } -> std::convertible_to<std::size_t>;
  { g.edges().size() } -> std::convertible_to<std::size_t>;
};

/// Plain edge-list bipartite multigraph.
struct EdgeListMultigraph {
  std::size_t lefts = 0;
  std::size_t rights = 0;
  std::vector<BipartiteEdge> edge_list;

  std::size_t left_count() const noexcept { return lefts; }
  std::size_t right_count() const noexcept { return rights; }
  std::span<const BipartiteEdge> edges() const noexcept { return edge_list; }
};

/// Input graph plus at most one dummy node per side. Original edges keep
/// their indices; dummy edges follow them.
struct AugmentedMultigraph {
  std::size_t lefts = 0;   // including the left dummy, when present
  std::size_t rights = 0;  // including the right dummy, when present
  std::size_t original_edge_count = 0;
  std::optional<std::size_t> left_dummy;   // joined to odd right nodes
  std::optional<std::size_t> right_dummy;  // joined to odd left nodes
  std::vector<BipartiteEdge> edge_list;

  std::size_t left_count() const noexcept { return lefts; }
  std::size_t right_count() const noexcept { return rights; }
  std::span<const BipartiteEdge> edges() const noexcept { return edge_list; }
  std::size_t dummy_edge_count() const noexcept {
    return edge_list.size() - original_edge_count;
  }
  bool is_dummy(std::size_t edge) const noexcept { return edge >= original_edge_count; }

  std::size_t degree(Side side, std::size_t node) const {
    std::size_t d = 0;
    for (const auto& e : edge_list) d += (side == Side::Left ? e.left : e.right) == node;
    return d;
  }
};

using Circuit = std::vector<std::size_t>;

class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t e) const { return bits_[e]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

template <BipartiteMultigraph G>
AugmentedMultigraph augment_even(const G& g) {
  AugmentedMultigraph a;
  a.lefts = g.left_count();
  a.rights = g.right_count();
  const auto edges = g.edges();
  a.original_edge_count = edges.size();
  a.edge_list.reserve(edges.size());

  std::vector<std::uint8_t> left_odd(a.lefts, 0);
  std::vector<std::uint8_t> right_odd(a.rights, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t l = edges[i].left;
    const std::size_t r = edges[i].right;
    if (l >= a.lefts || r >= a.rights) {
      throw Error(ErrorKind::NodeOutOfRange,
                  "edge " + std::to_string(i) + " references a missing node");
    }
    a.edge_list.push_back({l, r});
    left_odd[l] ^= 1;
    right_odd[r] ^= 1;
  }

  const auto odd_lefts = static_cast<std::size_t>(std::count(left_odd.begin(), left_odd.end(), 1));
  const auto odd_rights =
      static_cast<std::size_t>(std::count(right_odd.begin(), right_odd.end(), 1));
  if (odd_lefts == 0 && odd_rights == 0) return a;

  // Both counts share the parity of the edge count.
  const std::size_t original_lefts = a.lefts;
  const std::size_t original_rights = a.rights;
  if (odd_lefts > 0) a.right_dummy = a.rights++;
  if (odd_rights > 0) a.left_dummy = a.lefts++;
  for (std::size_t l = 0; l < original_lefts; ++l) {
    if (left_odd[l]) a.edge_list.push_back({l, *a.right_dummy});
  }
  for (std::size_t r = 0; r < original_rights; ++r) {
    if (right_odd[r]) a.edge_list.push_back({*a.left_dummy, r});
  }
  if (odd_lefts % 2 == 1) a.edge_list.push_back({*a.left_dummy, *a.right_dummy});
  return a;
}

/// Hierholzer's algorithm, iterative. Nodes are scanned in ascending order
/// (left nodes, then right nodes); the first node of each component with an
/// unused edge starts that component's circuit, and unused edges at a node
/// are taken in ascending index order.
template <BipartiteMultigraph G>
std::vector<Circuit> euler_circuits(const G& g) {
  const std::size_t lefts = g.left_count();
  const std::size_t nodes = lefts + g.right_count();
  const auto edges = g.edges();
  const std::size_t m = edges.size();

  auto right_node = [lefts](std::size_t r) { return lefts + r; };

  std::vector<std::size_t> offsets(nodes + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    ++offsets[edges[i].left + 1];
    ++offsets[right_node(edges[i].right) + 1];
  }
  for (std::size_t v = 0; v < nodes; ++v) {
    if ((offsets[v + 1] & 1U) != 0) {
      throw Error(ErrorKind::OddDegree, "node " + std::to_string(v) + " has odd degree");
    }
    offsets[v + 1] += offsets[v];
  }
  std::vector<std::size_t> incidence(2 * m);
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
      incidence[fill[edges[i].left]++] = i;
      incidence[fill[right_node(edges[i].right)]++] = i;
    }
  }

  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<std::uint8_t> used(m, 0);
  std::vector<Circuit> circuits;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Frame {
    std::size_t node;
    std::size_t via;  // edge used to arrive, kNone at the start
  };
  std::vector<Frame> stack;

  for (std::size_t start = 0; start < nodes; ++start) {
    while (cursor[start] < offsets[start + 1] && used[incidence[cursor[start]]]) ++cursor[start];
    if (cursor[start] == offsets[start + 1]) continue;

    Circuit circuit;
    stack.push_back({start, kNone});
    while (!stack.empty()) {
      const std::size_t v = stack.back().node;
      std::size_t& c = cursor[v];
      while (c < offsets[v + 1] && used[incidence[c]]) ++c;
      if (c < offsets[v + 1]) {
        const std::size_t e = incidence[c++];
        used[e] = 1;
        const std::size_t l = edges[e].left;
        const std::size_t r = right_node(edges[e].right);
        stack.push_back({v == l ? r : l, e});
      } else {
        if (stack.back().via != kNone) circuit.push_back(stack.back().via);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

/// Colors each circuit 1,0,1,0,... in traversal order.
inline EdgeColoring alternate_colors(std::span<const Circuit> circuits,
                                     std::size_t edge_count) {
  std::vector<std::uint8_t> bits(edge_count, 0);
  std::vector<std::uint8_t> seen(edge_count, 0);
  for (const auto& circuit : circuits) {
    if (circuit.size() % 2 != 0) {
      throw Error(ErrorKind::OddCircuitLength,
                  "circuit of length " + std::to_string(circuit.size()) +
                      " cannot alternate; input is not bipartite");
    }
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      const std::size_t e = circuit[i];
      if (e >= edge_count || seen[e]) {
        throw Error(ErrorKind::InvalidConfig,
                    "circuits do not partition the edge set (edge " + std::to_string(e) + ")");
      }
      seen[e] = 1;
      bits[e] = i % 2 == 0 ? 1 : 0;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::InvalidConfig, "circuits do not cover every edge");
  }
  return EdgeColoring(std::move(bits));
}

/// Edge 2-coloring where every node v has |#1 - #0| == deg(v) mod 2.
template <BipartiteMultigraph G>
EdgeColoring balanced_two_coloring(const G& g) {
  const AugmentedMultigraph augmented = augment_even(g);
  const auto circuits = euler_circuits(augmented);
  const EdgeColoring full = alternate_colors(circuits, augmented.edge_list.size());
  const auto bits = full.bits();
  return EdgeColoring(std::vector<std::uint8_t>(
      bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(augmented.original_edge_count)));
}

}  // namespace lbpart
