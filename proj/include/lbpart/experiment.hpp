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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lbpart/error.hpp"
#include "lbpart/forest.hpp"
#include "lbpart/generators.hpp"
#include "lbpart/oracle.hpp"
#include "lbpart/random.hpp"
#include "lbpart/solver.hpp"

namespace lbpart {

struct ExperimentBatch {
  std::size_t count = 0;
  std::uint64_t seed = 0;  // instance i uses seed + i
  GenConfig first;         // seed field ignored
  GenConfig second;        // seed field ignored
  bool with_oracle = false;
  unsigned threads = 0;    // 0: hardware concurrency
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t achieved_k = 0;
  std::optional<std::size_t> k_min;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct ExperimentSummary {
  std::map<std::size_t, std::size_t> achieved_k_histogram;
  std::map<std::size_t, std::size_t> k_min_histogram;
  std::size_t above_optimum = 0;  // rows with achieved_k > k_min
};

/// Forest pair of instance `seed`: each forest gets its own derived stream.
inline ForestPair experiment_instance(const ExperimentBatch& batch, std::uint64_t seed) {
  GenConfig c1 = batch.first;
  GenConfig c2 = batch.second;
  c1.seed = derive_seed(seed, 1);
  c2.seed = derive_seed(seed, 2);
  return ForestPair(gen_forest(c1), gen_forest(c2));
}

inline ExperimentRow run_instance(const ForestPair& pair, std::uint64_t seed, bool with_oracle) {
  ExperimentRow row;
  row.seed = seed;
  row.n = pair.vertex_count();
  row.achieved_k = solve(pair).report.achieved_k;
  if (with_oracle) row.k_min = oracle_min_k(pair).k_min;
  return row;
}

/// Runs the batch on worker threads. Rows come back in seed order.
inline std::vector<ExperimentRow> experiment(const ExperimentBatch& batch) {
  if (batch.with_oracle &&
      std::max(batch.first.n, batch.second.n) > kDefaultOracleLimit) {
    throw Error(ErrorKind::TooLarge, "oracle runs require n <= 24");
  }
  std::vector<ExperimentRow> rows(batch.count);
  std::vector<std::exception_ptr> failures(batch.count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < batch.count; i = next++) {
      try {
        const std::uint64_t seed = batch.seed + i;
        rows[i] = run_instance(experiment_instance(batch, seed), seed, batch.with_oracle);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = batch.threads ? batch.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(batch.count, 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

inline ExperimentSummary summarize(const std::vector<ExperimentRow>& rows) {
  ExperimentSummary s;
  for (const auto& row : rows) {
    ++s.achieved_k_histogram[row.achieved_k];
    if (row.k_min) {
      ++s.k_min_histogram[*row.k_min];
      if (row.achieved_k > *row.k_min) ++s.above_optimum;
    }
  }
  return s;
}

/// CSV with header `seed,n,achieved_k,k_min`; k_min blank when not computed.
inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "seed,n,achieved_k,k_min\n";
  for (const auto& row : rows) {
    out << row.seed << ',' << row.n << ',' << row.achieved_k << ',';
    if (row.k_min) out << *row.k_min;
    out << '\n';
  }
}

inline void write_summary(std::ostream& out, const ExperimentSummary& s) {
  auto histogram = [&out](const char* name, const std::map<std::size_t, std::size_t>& h) {
    out << name << ':';
    for (const auto& [k, c] : h) out << ' ' << k << '=' << c;
    out << '\n';
  };
  histogram("achieved_k", s.achieved_k_histogram);
  histogram("k_min", s.k_min_histogram);
  out << "achieved_k>k_min: " << s.above_optimum << '\n';
}

}  // namespace lbpart
