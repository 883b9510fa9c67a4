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

#include "gately/game.hpp"

#include <string>
#include <utility>

#include "gately/errors.hpp"

namespace gately {
namespace {

void check_player_count(int n) {
  if (n > kMaxPlayers) {
    throw GameError(ErrorCode::kTooManyPlayers,
                    "player count " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxPlayers));
  }
  if (n < 2) {
    throw GameError(ErrorCode::kInvalidGame,
                    "a game needs at least 2 players, got " +
                        std::to_string(n));
  }
}

}  // namespace

Game::Game(int n) : n_(n) {
  check_player_count(n);
  worths_.assign(coalition_count(n), Rational(0));
}

Game::Game(int n, std::vector<Rational> worths)
    : n_(n), worths_(std::move(worths)) {
  check_player_count(n);
  if (worths_.size() != coalition_count(n)) {
    throw GameError(ErrorCode::kInvalidGame,
                    "worth table has " + std::to_string(worths_.size()) +
                        " entries, expected " +
                        std::to_string(coalition_count(n)));
  }
  if (worths_[0] != 0) {
    throw GameError(ErrorCode::kInvalidGame,
                    "worth of the empty coalition must be 0");
  }
  for (auto& w : worths_) w.canonicalize();
}

const Rational& Game::worth(Coalition s) const {
  if (!s.fits(n_)) {
    throw GameError(ErrorCode::kInvalidCoalition,
                    "coalition " + s.to_string() + " is not a subset of N");
  }
  return worths_[s.mask()];
}

const Rational& Game::individual(int i) const {
  return worth(Coalition::singleton(i));
}

DividendDecomposition::DividendDecomposition(
    int n, std::map<Coalition, Rational> entries)
    : n_(n) {
  check_player_count(n);
  for (auto& [s, d] : entries) {
    if (s.empty()) {
      if (d != 0) {
        throw GameError(ErrorCode::kInvalidCoalition,
                        "the empty coalition carries no dividend");
      }
      continue;
    }
    if (!s.fits(n)) {
      throw GameError(ErrorCode::kInvalidCoalition,
                      "coalition " + s.to_string() + " is not a subset of N");
    }
    if (d != 0) entries_.emplace(s, d);
  }
}

Rational DividendDecomposition::dividend(Coalition s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Coalition> DividendDecomposition::carrier() const {
  std::vector<Coalition> out;
  out.reserve(entries_.size());
  for (const auto& [s, d] : entries_) out.push_back(s);
  return out;
}

Rational coalition_sum(std::span<const Rational> x, Coalition s) {
  Rational total = 0;
  for (int i : s.members()) total += x[i];
  return total;
}

double coalition_sum(std::span<const double> x, Coalition s) {
  double total = 0.0;
  for (int i : s.members()) total += x[i];
  return total;
}

std::vector<Rational> marginal_contributions(const Game& g) {
  const int n = g.players();
  const Coalition grand = g.grand();
  std::vector<Rational> m(n);
  for (int i = 0; i < n; ++i) {
    m[i] = g.worth(grand) - g.worth(grand.without(i));
  }
  return m;
}

std::vector<Rational> individual_worths(const Game& g) {
  std::vector<Rational> nu(g.players());
  for (int i = 0; i < g.players(); ++i) nu[i] = g.individual(i);
  return nu;
}

std::vector<Rational> net_marginal_contributions(const Game& g) {
  auto m = marginal_contributions(g);
  for (int i = 0; i < g.players(); ++i) m[i] -= g.individual(i);
  return m;
}

Game zero_normalise(const Game& g) {
  const auto nu = individual_worths(g);
  std::vector<Rational> w(g.worths().begin(), g.worths().end());
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    w[mask] -= coalition_sum(nu, Coalition(mask));
  }
  return Game(g.players(), std::move(w));
}

Game dual_game(const Game& g) {
  const int n = g.players();
  const Rational& total = g.worth(g.grand());
  std::vector<Rational> w(coalition_count(n));
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    w[mask] = total - g.worth(Coalition(mask).complement(n));
  }
  return Game(n, std::move(w));
}

DividendDecomposition harsanyi_dividends(const Game& g) {
  const int n = g.players();
  std::vector<Rational> d(g.worths().begin(), g.worths().end());
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t mask = 0; mask < d.size(); ++mask) {
      if (mask & bit) d[mask] -= d[mask ^ bit];
    }
  }
  std::map<Coalition, Rational> entries;
  for (std::uint32_t mask = 1; mask < d.size(); ++mask) {
    if (d[mask] != 0) entries.emplace(Coalition(mask), std::move(d[mask]));
  }
  return DividendDecomposition(n, std::move(entries));
}

Game from_dividends(const DividendDecomposition& d) {
  const int n = d.players();
  std::vector<Rational> w(coalition_count(n), Rational(0));
  for (const auto& [s, div] : d.entries()) w[s.mask()] = div;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t mask = 0; mask < w.size(); ++mask) {
      if (mask & bit) w[mask] += w[mask ^ bit];
    }
  }
  return Game(n, std::move(w));
}

Game from_dividends(const std::map<Coalition, Rational>& entries, int n) {
  return from_dividends(DividendDecomposition(n, entries));
}

Game unanimity_game(Coalition s, int n) {
  if (s.empty()) {
    throw GameError(ErrorCode::kEmptyCoalition,
                    "unanimity games need a nonempty coalition");
  }
  if (!s.fits(n)) {
    throw GameError(ErrorCode::kInvalidCoalition,
                    "coalition " + s.to_string() + " is not a subset of N");
  }
  std::vector<Rational> w(coalition_count(n), Rational(0));
  for (std::uint32_t mask = 1; mask < w.size(); ++mask) {
    if (s.is_subset_of(Coalition(mask))) w[mask] = 1;
  }
  return Game(n, std::move(w));
}

GameClassReport classify(const Game& g) {
  const int n = g.players();
  GameClassReport r;
  r.individual_worths = individual_worths(g);
  r.marginal_contributions = marginal_contributions(g);
  const Rational& total = g.worth(g.grand());

  const Rational sum_nu = sum(r.individual_worths);
  const Rational sum_m = sum(r.marginal_contributions);
  r.essential = sum_nu <= total && total <= sum_m;

  r.semi_standard = true;
  bool some_strict = false;
  r.zero_normalised = true;
  for (int i = 0; i < n; ++i) {
    if (r.individual_worths[i] > r.marginal_contributions[i]) {
      r.semi_standard = false;
    }
    if (r.individual_worths[i] < r.marginal_contributions[i]) {
      some_strict = true;
    }
    if (r.individual_worths[i] != 0) r.zero_normalised = false;
  }
  r.standard = r.semi_standard && some_strict;
  r.semi_regular = r.essential && r.semi_standard;
  r.regular = r.essential && r.standard;

  // Complementary pairs {S, N \ S}: visiting masks whose top player bit is
  // clear covers each pair once.
  r.partitionally_superadditive = true;
  const std::uint32_t half = coalition_count(n) >> 1;
  for (std::uint32_t mask = 0; mask < half; ++mask) {
    const Coalition s(mask);
    if (g.worth(s) + g.worth(s.complement(n)) > total) {
      r.partitionally_superadditive = false;
      break;
    }
  }
  return r;
}

bool is_superadditive(const Game& g) {
  const std::uint32_t count = coalition_count(g.players());
  for (std::uint32_t u = 1; u < count; ++u) {
    // Split u into s and u \ s with s the part containing u's lowest player,
    // so each unordered pair is visited once.
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t rest = u ^ low;
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      const std::uint32_t s = low | t;
      const std::uint32_t other = u ^ s;
      if (other != 0 &&
          g.worth(Coalition(s)) + g.worth(Coalition(other)) >
              g.worth(Coalition(u))) {
        return false;
      }
      if (t == 0) break;
    }
  }
  return true;
}

}  // namespace gately
