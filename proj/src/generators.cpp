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

#include "gately/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"

namespace gately {
namespace {

constexpr std::uint64_t kSplitMixIncrement = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kSplitMixIncrement;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rational draw_rational(Xorshift64Star& rng, std::int64_t lo, std::int64_t hi,
                       int bound) {
  const auto num = rng.between(lo, hi);
  const auto den = rng.between(1, bound);
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational draw_nonzero(Xorshift64Star& rng, std::int64_t lo, std::int64_t hi,
                      int bound) {
  while (true) {
    Rational r = draw_rational(rng, lo, hi, bound);
    if (r != 0) return r;
  }
}

Game draw_worths(Xorshift64Star& rng, int n, int bound, bool zero_singletons) {
  std::vector<Rational> w(coalition_count(n), Rational(0));
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    const int size = std::popcount(mask);
    if (size == 1 && zero_singletons) continue;
    w[mask] = draw_rational(rng, -bound, static_cast<std::int64_t>(bound) * size,
                            bound);
  }
  return Game(n, std::move(w));
}

bool matches(const Game& g, ClassTarget target) {
  const auto c = classify(g);
  switch (target) {
    case ClassTarget::kAny: return true;
    case ClassTarget::kStandard: return c.standard;
    case ClassTarget::kRegular: return c.regular;
    case ClassTarget::kSemiRegular: return c.semi_regular;
    case ClassTarget::kZeroNormalisedRegular:
      return c.zero_normalised && c.regular;
    default: return false;
  }
}

std::vector<int> shuffled_players(Xorshift64Star& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return p;
}

std::vector<Coalition> random_partition(Xorshift64Star& rng, int n, int block) {
  const auto p = shuffled_players(rng, n);
  std::vector<Coalition> out;
  for (int start = 0; start < n; start += block) {
    out.push_back(Coalition::of(
        std::vector<int>(p.begin() + start, p.begin() + start + block)));
  }
  return out;
}

[[noreturn]] void unreachable(const std::string& what) {
  throw GameError(ErrorCode::kTargetUnreachable, what);
}

Game k_game(Xorshift64Star& rng, const GeneratorConfig& cfg) {
  const int n = cfg.n;
  if (cfg.k < 2 || cfg.k > n - 1) {
    unreachable("k-games need 2 <= k <= n - 1");
  }
  std::vector<Coalition> sized;
  for (std::uint32_t mask = 1; mask < coalition_count(n); ++mask) {
    if (std::popcount(mask) == cfg.k) sized.emplace_back(mask);
  }
  const std::int64_t b = cfg.worth_bound;
  for (int attempt = 0; attempt < kMaxGeneratorRetries; ++attempt) {
    std::map<Coalition, Rational> dividends;
    for (Coalition s : sized) {
      if (rng.below(2) == 0) continue;
      dividends.emplace(s, cfg.positive_dividends
                               ? draw_rational(rng, 1, b, cfg.worth_bound)
                               : draw_nonzero(rng, -b, b, cfg.worth_bound));
    }
    if (dividends.empty()) continue;
    Game g = from_dividends(dividends, n);
    if (kgame_structure(g).is_k_game) return g;
  }
  unreachable("no regular k-game found within the retry budget");
}

Game partition_game(Xorshift64Star& rng, const GeneratorConfig& cfg) {
  const int n = cfg.n;
  if (cfg.k < 1 || cfg.m < 1 || cfg.k == cfg.m || n % cfg.k != 0 ||
      n % cfg.m != 0) {
    unreachable("partition games need distinct block sizes dividing n");
  }
  const Rational delta = draw_rational(rng, 1, cfg.worth_bound, cfg.worth_bound);
  std::map<Coalition, Rational> dividends;
  for (Coalition s : random_partition(rng, n, cfg.k)) dividends.emplace(s, delta);
  for (Coalition s : random_partition(rng, n, cfg.m)) dividends.emplace(s, delta);
  return from_dividends(dividends, n);
}

Game from_table(int n, std::initializer_list<std::pair<Coalition, Rational>> t) {
  std::vector<Rational> w(coalition_count(n), Rational(0));
  for (const auto& [s, v] : t) w[s.mask()] = v;
  return Game(n, std::move(w));
}

Coalition c(std::initializer_list<int> one_based) {
  std::vector<int> players;
  for (int p : one_based) players.push_back(p - 1);
  return Coalition::of(players);
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = kSplitMixIncrement;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; draws above it are redrawn.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::int64_t Xorshift64Star::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Game generate(const GeneratorConfig& cfg) {
  if (cfg.n > kMaxPlayers) {
    throw GameError(ErrorCode::kTooManyPlayers,
                    "at most " + std::to_string(kMaxPlayers) + " players");
  }
  if (cfg.n < 2 || cfg.worth_bound < 1) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "generator needs n >= 2 and a positive worth bound");
  }
  Xorshift64Star rng(cfg.seed);
  switch (cfg.class_target) {
    case ClassTarget::kKGame: return k_game(rng, cfg);
    case ClassTarget::kPartitionGame: return partition_game(rng, cfg);
    default: break;
  }
  const bool zero = cfg.class_target == ClassTarget::kZeroNormalisedRegular;
  for (int attempt = 0; attempt < kMaxGeneratorRetries; ++attempt) {
    Game g = draw_worths(rng, cfg.n, cfg.worth_bound, zero);
    if (matches(g, cfg.class_target)) return g;
  }
  unreachable("no game of the requested class within the retry budget");
}

std::map<std::string, BuiltinFixture> builtin_fixtures() {
  std::map<std::string, BuiltinFixture> out;
  auto add = [&](std::string name, std::string description,
                 std::vector<std::string> labels, Game g) {
    out.emplace(name, BuiltinFixture{name, std::move(description),
                                   std::move(labels), std::move(g)});
  };

  add("trade", "Seller S and buyers B1, B2 trading one good",
      {"S", "B1", "B2"},
      from_table(3, {{c({1}), 1}, {c({1, 2}), 3}, {c({1, 3}), 2},
                     {c({1, 2, 3}), 3}}));
  add("continuum3",
      "Three players with M = (1,1,1) and v = (2,1,0); no unique Gately point",
      numbered(3),
      from_table(3, {{c({1}), 2}, {c({2}), 1}, {c({1, 2}), 4},
                     {c({1, 3}), 4}, {c({2, 3}), 4}, {c({1, 2, 3}), 5}}));
  add("emptycore3", "Three-player game with an empty Core", numbered(3),
      from_table(3, {{c({1}), 5}, {c({1, 2}), 1}, {c({1, 3}), 1},
                     {c({2, 3}), 5}, {c({1, 2, 3}), 6}}));
  add("alpha_interval3",
      "Zero-normalised three-player game probed for its Core alpha range",
      numbered(3),
      from_table(3, {{c({1, 2}), 12}, {c({1, 3}), 7}, {c({2, 3}), 7},
                     {c({1, 2, 3}), 16}}));
  add("singleton_core3",
      "Three-player game whose Core is the single point M(v) = (2,3,4)",
      numbered(3),
      from_table(3, {{c({1, 2}), 5}, {c({1, 3}), 6}, {c({2, 3}), 7},
                     {c({1, 2, 3}), 9}}));
  add("fourplayer_core_miss",
      "Four-player game with M(v) = (4,4,3,3) whose Gately value misses the "
      "Core at {1,2}",
      numbered(4),
      from_table(4, {{c({1, 2}), 8}, {c({1, 3}), 1}, {c({1, 4}), 1},
                     {c({2, 3}), 1}, {c({2, 4}), 1}, {c({3, 4}), 1},
                     {c({1, 2, 3}), 9}, {c({1, 2, 4}), 9},
                     {c({1, 3, 4}), 8}, {c({2, 3, 4}), 8},
                     {c({1, 2, 3, 4}), 12}}));
  add("topdom_nonsuper3",
      "Top dominant for every alpha but not superadditive", numbered(3),
      from_table(3, {{c({1, 2}), -1}, {c({1, 3}), -1}, {c({1, 2, 3}), 1}}));
  add("fiveplayer_unanimity", "u_{12} + 3 u_{345}", numbered(5),
      from_dividends({{c({1, 2}), 1}, {c({3, 4, 5}), 3}}, 5));
  add("kgame_demo", "u_{12} + u_{13} + u_{23}", numbered(3),
      from_dividends({{c({1, 2}), 1}, {c({1, 3}), 1}, {c({2, 3}), 1}}, 3));
  return out;
}

}  // namespace gately
