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

// Command-line front end. Exit codes: 0 success, 1 validation or data
// error, 2 usage error.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lbpart/error.hpp"
#include "lbpart/experiment.hpp"
#include "lbpart/generators.hpp"
#include "lbpart/io.hpp"
#include "lbpart/oracle.hpp"
#include "lbpart/solver.hpp"

namespace lbpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  return text;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
}

// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous locally-balanced 2-partitions of two forests", "lbpart"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  const std::vector<std::string> models{"prufer-tree", "uniform-forest", "path", "star"};

  std::string solve_in, solve_out, solve_dot, solve_strategy = "min-id";
  std::uint64_t solve_seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a partition with k <= 2");
  solve_cmd->add_option("input", solve_in, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--out", solve_out, "Solution file (default stdout)");
  solve_cmd->add_option("--dot", solve_dot, "Write a DOT rendering of both forests");
  solve_cmd->add_option("--root-strategy", solve_strategy, "Root choice per component")
      ->check(CLI::IsMember({"min-id", "seeded"}));
  solve_cmd->add_option("--seed", solve_seed, "Seed for the seeded root strategy");

  std::string verify_in, verify_assignment;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute the balance report of an assignment");
  verify_cmd->add_option("input", verify_in, "Instance file")->required();
  verify_cmd->add_option("--assignment", verify_assignment,
                         "Solution document or bare 0/1 array")
      ->required();

  std::string oracle_in;
  std::size_t oracle_limit = kDefaultOracleLimit;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum k for small instances");
  oracle_cmd->add_option("input", oracle_in, "Instance file")->required();
  oracle_cmd->add_option("--limit", oracle_limit, "Largest n to enumerate");

  GenConfig gen;
  std::string gen_model = "prufer-tree", gen_out;
  std::optional<std::size_t> gen_components;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--model", gen_model, "Forest model")->check(CLI::IsMember(models));
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--components", gen_components, "Exact component count");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  ExperimentBatch batch;
  std::size_t exp_n = 8;
  std::string exp_model = "prufer-tree", exp_csv;
  auto* exp_cmd = app.add_subcommand("experiment", "Solve a batch of random instances");
  exp_cmd->add_option("--count", batch.count, "Number of instances")->required();
  exp_cmd->add_option("--n", exp_n, "Vertex count")->required();
  exp_cmd->add_option("--seed", batch.seed, "Base seed; instance i uses seed + i");
  exp_cmd->add_flag("--oracle", batch.with_oracle, "Also run the exhaustive oracle");
  exp_cmd->add_option("--model", exp_model, "Forest model")->check(CLI::IsMember(models));
  exp_cmd->add_option("--threads", batch.threads, "Worker threads (0: all cores)");
  exp_cmd->add_option("--csv", exp_csv, "CSV output file (default stdout)");

  auto* example_cmd = app.add_subcommand("example", "Print the 5-vertex tightness instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const ForestPair pair = parse_instance(read_file(solve_in));
      SolveConfig config;
      if (solve_strategy == "seeded") config.roots = RootStrategy::seeded(solve_seed);
      const SolveResult result = solve(pair, config);
      emit(solve_out, format_solution(result.partition, result.report, {config.roots}), out);
      if (!solve_dot.empty()) emit(solve_dot, emit_dot(pair, result.partition), out);
    } else if (*verify_cmd) {
      const ForestPair pair = parse_instance(read_file(verify_in));
      const SolutionDocument doc = parse_solution(read_file(verify_assignment));
      const BalanceReport report = verify(pair, doc.assignment);
      out << report_json(report).dump() << '\n';
      if (doc.report && *doc.report != report) {
        err << "lbpart: stored report does not match the recomputed one\n";
        return kExitDataError;
      }
    } else if (*oracle_cmd) {
      const ForestPair pair = parse_instance(read_file(oracle_in));
      const OracleResult result = oracle_min_k(pair, oracle_limit);
      out << "k_min=" << result.k_min << '\n';
      out << "witness=";
      for (std::size_t v = 0; v < result.witness.size(); ++v) {
        out << (v ? "," : "") << int{result.witness[v]};
      }
      out << "\nenumerated=" << result.enumerated << '\n';
    } else if (*gen_cmd) {
      gen.model = parse_model(gen_model);
      gen.component_count = gen_components;
      emit(gen_out, format_instance(gen_pair(gen)), out);
    } else if (*exp_cmd) {
      batch.first.n = batch.second.n = exp_n;
      batch.first.model = batch.second.model = parse_model(exp_model);
      const auto rows = experiment(batch);
      std::ostringstream csv;
      write_csv(csv, rows);
      emit(exp_csv, csv.str(), out);
      std::ostream& summary_stream = exp_csv.empty() || exp_csv == "-" ? err : out;
      write_summary(summary_stream, summarize(rows));
    } else if (*example_cmd) {
      out << format_instance(tightness_example());
    }
  } catch (const Error& e) {
    err << "lbpart: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace lbpart::cli
