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

// Pinned pseudorandom helpers. Every random choice in the library goes
// through std::mt19937_64 (fully specified by the standard) and the draws
// below, so a seed reproduces the same output on any conforming platform.

#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace lbpart {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent sub-seed for stream `stream` of a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return splitmix64(base ^ splitmix64(stream));
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x = 0;
  do {
    x = engine();
  } while (x > limit);
  return x % bound;
}

/// True with probability p, using the top 53 bits of one draw.
inline bool bernoulli(Engine& engine, double p) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53 < p;
}

}  // namespace lbpart
