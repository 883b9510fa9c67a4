// Copyright 2026 The Gately Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATELY_GENERATORS_HPP
#define GATELY_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gately/game.hpp"

namespace gately {

// xorshift64* (Vigna). State update
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
// output x * 0x2545F4914F6CDD1D. The seed is passed through one splitmix64
// step so that small seeds give unrelated streams; a zero state is replaced
// by the splitmix64 increment.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  // Uniform on [0, bound) by rejection of the biased top range. bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class ClassTarget {
  kAny,
  kStandard,
  kRegular,
  kSemiRegular,
  kZeroNormalisedRegular,
  kKGame,
  kPartitionGame,
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 3;
  // Numerators are drawn from [-bound, bound * |S|], denominators from
  // [1, bound].
  int worth_bound = 10;
  ClassTarget class_target = ClassTarget::kAny;
  // Coalition size for kKGame; first block size for kPartitionGame.
  int k = 2;
  // Second block size for kPartitionGame.
  int m = 3;
  // kKGame only: draw strictly positive dividends.
  bool positive_dividends = false;
};

inline constexpr int kMaxGeneratorRetries = 10000;

// Deterministic in the config. Throws GameError (TargetUnreachable,
// InvalidParameter, TooManyPlayers).
Game generate(const GeneratorConfig& config);

struct BuiltinFixture {
  std::string name;
  std::string description;
  std::vector<std::string> labels;
  Game game;
};

// The worked examples, keyed by stable name.
std::map<std::string, BuiltinFixture> builtin_fixtures();

}  // namespace gately

#endif  // GATELY_GENERATORS_HPP
