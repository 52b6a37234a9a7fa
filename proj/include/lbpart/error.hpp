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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lbpart {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  CycleDetected,
  InvalidRoots,
  VertexCountMismatch,
  NodeOutOfRange,
  OddDegree,
  OddCircuitLength,
  LengthMismatch,
  TooLarge,
  InvalidConfig,
  SyntaxError,
  ValidationError,
  InvariantViolation,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::InvalidRoots: return "InvalidRoots";
    case ErrorKind::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorKind::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::OddCircuitLength: return "OddCircuitLength";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed document text, positioned at a 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              "syntax error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document whose content breaks a rule. `where` names the
/// offending part ("g1", "g2", "n", ...), `rule` the violated check.
class ValidationError : public Error {
 public:
  ValidationError(std::string where, ErrorKind rule, const std::string& detail)
      : Error(ErrorKind::ValidationError,
              where + ": " + std::string(to_string(rule)) + ": " + detail),
        where_(std::move(where)),
        rule_(rule) {}

  const std::string& where() const noexcept { return where_; }
  ErrorKind rule() const noexcept { return rule_; }

 private:
  std::string where_;
  ErrorKind rule_;
};

}  // namespace lbpart
