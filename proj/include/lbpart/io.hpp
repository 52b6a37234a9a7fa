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

// Instance and solution documents (JSON) and DOT rendering.
//
// Instance: {"n": <int >= 1>, "g1": [[u,v], ...], "g2": [[u,v], ...]}
// Solution: {"assignment": [...], "report": {"per_vertex_b1": [...],
//            "per_vertex_b2": [...], "achieved_k": k},
//            "meta": {"root_strategy": ..., "seed": ..., "tool_version": ...}}

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lbpart/decomposition.hpp"
#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/solver.hpp"

namespace lbpart {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Largest vertex count accepted from a document.
inline constexpr std::size_t kMaxDocumentVertices = std::size_t{1} << 31;

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // `byte` counts consumed characters; the offending one is the last.
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, column] = line_column(text, offset);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw SyntaxError(line, column, what);
  }
}

inline void require_keys(const ordered_json& doc, std::initializer_list<std::string_view> keys,
                         const std::string& where) {
  if (!doc.is_object()) {
    throw ValidationError(where, ErrorKind::InvalidConfig, "expected a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ValidationError(where, ErrorKind::InvalidConfig, "unexpected key '" + key + "'");
    }
  }
  for (auto key : keys) {
    if (!doc.contains(key)) {
      throw ValidationError(where, ErrorKind::InvalidConfig,
                            "missing key '" + std::string(key) + "'");
    }
  }
}

inline std::uint64_t unsigned_value(const ordered_json& value, const std::string& where,
                                    ErrorKind rule) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    throw ValidationError(where, rule, "negative value " + value.dump());
  }
  throw ValidationError(where, ErrorKind::InvalidConfig, "expected an integer, got " + value.dump());
}

inline Forest parse_forest(const ordered_json& list, std::size_t n, const std::string& where) {
  if (!list.is_array()) {
    throw ValidationError(where, ErrorKind::InvalidConfig, "expected an array of edges");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(list.size());
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2) {
      throw ValidationError(where, ErrorKind::InvalidConfig,
                            "edge must be a 2-element array, got " + item.dump());
    }
    const auto a = unsigned_value(item[0], where, ErrorKind::VertexOutOfRange);
    const auto b = unsigned_value(item[1], where, ErrorKind::VertexOutOfRange);
    if (a >= n || b >= n) {
      throw ValidationError(where, ErrorKind::VertexOutOfRange,
                            "edge " + item.dump() + " has an id outside [0, " +
                                std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  try {
    return build_forest(n, edges);
  } catch (const Error& e) {
    throw ValidationError(where, e.kind(), e.what());
  }
}

template <typename Sequence>
ordered_json json_array(const Sequence& values) {
  ordered_json out = ordered_json::array();
  for (auto v : values) out.push_back(static_cast<std::uint64_t>(v));
  return out;
}

inline ordered_json forest_json(const Forest& forest) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : forest.edges()) out.push_back({e.u, e.v});
  return out;
}

}  // namespace detail

/// Strict parse of an instance document into a validated forest pair.
inline ForestPair parse_instance(std::string_view text) {
  const ordered_json doc = detail::parse_json(text);
  detail::require_keys(doc, {"n", "g1", "g2"}, "document");
  const auto n = detail::unsigned_value(doc["n"], "n", ErrorKind::InvalidConfig);
  if (n < 1 || n > kMaxDocumentVertices) {
    throw ValidationError("n", ErrorKind::InvalidConfig,
                          "n must lie in [1, " + std::to_string(kMaxDocumentVertices) + "]");
  }
  Forest g1 = detail::parse_forest(doc["g1"], n, "g1");
  Forest g2 = detail::parse_forest(doc["g2"], n, "g2");
  return ForestPair(std::move(g1), std::move(g2));
}

/// Compact instance document with normalized edge lists, newline-terminated.
inline std::string format_instance(const ForestPair& pair) {
  ordered_json doc;
  doc["n"] = pair.vertex_count();
  doc["g1"] = detail::forest_json(pair.g1);
  doc["g2"] = detail::forest_json(pair.g2);
  return doc.dump() + "\n";
}

struct SolutionMeta {
  RootStrategy roots;
  std::string tool_version{kToolVersion};
};

inline ordered_json report_json(const BalanceReport& report) {
  ordered_json out;
  out["per_vertex_b1"] = detail::json_array(report.per_vertex_b1);
  out["per_vertex_b2"] = detail::json_array(report.per_vertex_b2);
  out["achieved_k"] = report.achieved_k;
  return out;
}

inline std::string format_solution(const VertexPartition& partition, const BalanceReport& report,
                                   const SolutionMeta& meta) {
  ordered_json doc;
  doc["assignment"] = detail::json_array(partition.bits());
  doc["report"] = report_json(report);
  ordered_json m;
  m["root_strategy"] = to_string(meta.roots);
  if (meta.roots.kind == RootStrategy::Kind::Seeded) {
    m["seed"] = meta.roots.seed;
  } else {
    m["seed"] = nullptr;
  }
  m["tool_version"] = meta.tool_version;
  doc["meta"] = std::move(m);
  return doc.dump() + "\n";
}

struct SolutionDocument {
  VertexPartition assignment;
  std::optional<BalanceReport> report;  // absent for a bare assignment array
};

/// Accepts a full solution document or a bare 0/1 array.
inline SolutionDocument parse_solution(std::string_view text) {
  const ordered_json doc = detail::parse_json(text);
  auto bits_of = [](const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw ValidationError(where, ErrorKind::InvalidConfig, "expected an array");
    std::vector<std::uint8_t> bits;
    bits.reserve(arr.size());
    for (const auto& b : arr) {
      const auto value = detail::unsigned_value(b, where, ErrorKind::InvalidConfig);
      if (value > 1) throw ValidationError(where, ErrorKind::InvalidConfig, "bits must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(value));
    }
    return VertexPartition(std::move(bits));
  };
  auto counts_of = [](const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw ValidationError(where, ErrorKind::InvalidConfig, "expected an array");
    std::vector<std::size_t> out;
    out.reserve(arr.size());
    for (const auto& b : arr) out.push_back(detail::unsigned_value(b, where, ErrorKind::InvalidConfig));
    return out;
  };

  SolutionDocument out;
  if (doc.is_array()) {
    out.assignment = bits_of(doc, "assignment");
    return out;
  }
  detail::require_keys(doc, {"assignment", "report", "meta"}, "solution");
  out.assignment = bits_of(doc["assignment"], "assignment");
  const auto& r = doc["report"];
  detail::require_keys(r, {"per_vertex_b1", "per_vertex_b2", "achieved_k"}, "report");
  BalanceReport report;
  report.per_vertex_b1 = counts_of(r["per_vertex_b1"], "report.per_vertex_b1");
  report.per_vertex_b2 = counts_of(r["per_vertex_b2"], "report.per_vertex_b2");
  report.achieved_k = detail::unsigned_value(r["achieved_k"], "report.achieved_k",
                                             ErrorKind::InvalidConfig);
  auto max_of = [](const std::vector<std::size_t>& v) {
    return v.empty() ? std::size_t{0} : *std::max_element(v.begin(), v.end());
  };
  report.max_b1 = max_of(report.per_vertex_b1);
  report.max_b2 = max_of(report.per_vertex_b2);
  out.report = std::move(report);
  return out;
}

/// Both forests as DOT clusters "G1" and "G2"; part-1 vertices are filled.
inline std::string emit_dot(const ForestPair& pair, const VertexPartition& partition) {
  const std::size_t n = pair.vertex_count();
  if (partition.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "partition length does not match the instance");
  }
  std::ostringstream out;
  out << "graph forests {\n";
  auto cluster = [&](const Forest& g, const char* name, const std::string& id) {
    const std::string prefix = id + "_";
    out << "  subgraph cluster_" << id << " {\n";
    out << "    label=\"" << name << "\";\n";
    for (std::size_t v = 0; v < n; ++v) {
      out << "    " << prefix << v << " [label=\"" << v << "\"";
      if (partition[v]) out << ", style=filled, fillcolor=gray";
      out << "];\n";
    }
    for (const Edge& e : g.edges()) {
      out << "    " << prefix << e.u << " -- " << prefix << e.v << ";\n";
    }
    out << "  }\n";
  };
  cluster(pair.g1, "G1", "g1");
  cluster(pair.g2, "G2", "g2");
  out << "}\n";
  return out.str();
}

}  // namespace lbpart
