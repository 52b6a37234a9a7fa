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
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/random.hpp"

namespace lbpart {

enum class ForestModel { PruferTree, UniformForest, Path, Star };

/// Edge deletion probability of the uniform-forest model.
inline constexpr double kForestEdgeDropProbability = 0.2;

inline std::string_view to_string(ForestModel model) noexcept {
  switch (model) {
    case ForestModel::PruferTree: return "prufer-tree";
    case ForestModel::UniformForest: return "uniform-forest";
    case ForestModel::Path: return "path";
    case ForestModel::Star: return "star";
  }
  return "?";
}

inline ForestModel parse_model(std::string_view name) {
  for (auto m : {ForestModel::PruferTree, ForestModel::UniformForest, ForestModel::Path,
                 ForestModel::Star}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown forest model '" + std::string(name) + "'");
}

struct GenConfig {
  std::size_t n = 1;
  std::optional<std::size_t> component_count;  // unset: model decides
  std::uint64_t seed = 0;
  ForestModel model = ForestModel::PruferTree;
};

/// Decodes a Prüfer sequence over [0, n) into the edges of a labeled tree on
/// n = seq.size() + 2 vertices. Linear time.
inline std::vector<std::pair<VertexId, VertexId>> prufer_decode(
    std::span<const VertexId> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : seq) {
    if (x >= n) throw Error(ErrorKind::InvalidConfig, "Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId x : seq) {
    edges.emplace_back(static_cast<VertexId>(leaf), x);
    degree[leaf] = 0;
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1));
  return edges;
}

namespace detail {

inline std::vector<std::pair<VertexId, VertexId>> random_tree_edges(std::size_t n,
                                                                    Engine& engine) {
  if (n < 2) return {};
  std::vector<VertexId> seq(n - 2);
  for (auto& x : seq) x = static_cast<VertexId>(uniform_below(engine, n));
  return prufer_decode(seq);
}

}  // namespace detail

/// Random or fixed-shape forest. The same config always yields the same
/// forest.
///
/// - prufer-tree: uniform labeled tree from a uniform Prüfer sequence.
/// - uniform-forest: a prufer-tree whose edges are then dropped, each with
///   probability 0.2; with `component_count = C`, exactly C - 1 distinct
///   uniformly chosen edges are dropped instead.
/// - path: 0-1-...-(n-1).  star: center 0.
inline Forest gen_forest(const GenConfig& config) {
  const std::size_t n = config.n;
  if (n < 1) throw Error(ErrorKind::InvalidConfig, "n must be at least 1");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorKind::InvalidConfig, "n too large");
  }
  if (config.component_count &&
      (*config.component_count < 1 || *config.component_count > n)) {
    throw Error(ErrorKind::InvalidConfig, "component count must lie in [1, n]");
  }
  if (config.component_count && *config.component_count != 1 &&
      config.model != ForestModel::UniformForest) {
    throw Error(ErrorKind::InvalidConfig,
                std::string(to_string(config.model)) + " always has one component");
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  switch (config.model) {
    case ForestModel::Path:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case ForestModel::Star:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case ForestModel::PruferTree: {
      Engine engine(config.seed);
      edges = detail::random_tree_edges(n, engine);
      break;
    }
    case ForestModel::UniformForest: {
      Engine engine(config.seed);
      auto tree = detail::random_tree_edges(n, engine);
      if (config.component_count) {
        const std::size_t drop = *config.component_count - 1;
        for (std::size_t i = 0; i < drop; ++i) {
          const auto j = i + uniform_below(engine, tree.size() - i);
          std::swap(tree[i], tree[j]);
        }
        edges.assign(tree.begin() + static_cast<std::ptrdiff_t>(drop), tree.end());
      } else {
        for (const auto& e : tree) {
          if (!bernoulli(engine, kForestEdgeDropProbability)) edges.push_back(e);
        }
      }
      break;
    }
  }
  return build_forest(n, edges);
}

/// Two 5-vertex paths on which every 2-partition has some neighborhood of
/// discrepancy 2: 0-1-2-3-4 and 2-1-0-4-3.
inline ForestPair tightness_example() {
  return ForestPair(build_forest(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                    build_forest(5, {{0, 4}, {4, 3}, {2, 1}, {1, 0}}));
}

/// Pair of forests drawn from two independent streams of `seed`.
inline ForestPair gen_pair(const GenConfig& config) {
  GenConfig c1 = config;
  GenConfig c2 = config;
  c1.seed = derive_seed(config.seed, 1);
  c2.seed = derive_seed(config.seed, 2);
  return ForestPair(gen_forest(c1), gen_forest(c2));
}

}  // namespace lbpart
