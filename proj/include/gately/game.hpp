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

#ifndef GATELY_GAME_HPP
#define GATELY_GAME_HPP

#include <map>
#include <span>
#include <vector>

#include "gately/coalition.hpp"
#include "gately/rational.hpp"

namespace gately {

// A transferable-utility game on players 0..n-1 with an exact worth for
// every coalition. Immutable once constructed. 2 <= n <= kMaxPlayers.
class Game {
 public:
  // The zero game on n players.
  explicit Game(int n);
  // `worths` is indexed by coalition mask and must have length 2^n with a
  // zero entry for the empty coalition.
  Game(int n, std::vector<Rational> worths);

  int players() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }

  // Throws GameError (InvalidCoalition) if `s` names a player >= n.
  const Rational& worth(Coalition s) const;
  const Rational& operator()(Coalition s) const { return worth(s); }
  // Worth of the singleton {i}.
  const Rational& individual(int i) const;

  std::span<const Rational> worths() const { return worths_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int n_;
  std::vector<Rational> worths_;
};

// Harsanyi dividends. Only nonzero dividends are stored; together they form
// the carrier of the game.
class DividendDecomposition {
 public:
  DividendDecomposition(int n, std::map<Coalition, Rational> entries);

  int players() const { return n_; }
  const std::map<Coalition, Rational>& entries() const { return entries_; }
  // Zero for coalitions outside the carrier.
  Rational dividend(Coalition s) const;
  std::vector<Coalition> carrier() const;

  friend bool operator==(const DividendDecomposition&,
                         const DividendDecomposition&) = default;

 private:
  int n_;
  std::map<Coalition, Rational> entries_;
};

struct GameClassReport {
  bool essential = false;
  bool semi_standard = false;
  bool semi_regular = false;
  bool standard = false;
  bool regular = false;
  bool zero_normalised = false;
  bool partitionally_superadditive = false;
  std::vector<Rational> individual_worths;
  std::vector<Rational> marginal_contributions;
};

// x(S): total payoff of the members of s.
Rational coalition_sum(std::span<const Rational> x, Coalition s);
double coalition_sum(std::span<const double> x, Coalition s);

// M_i(v) = v(N) - v(N - i).
std::vector<Rational> marginal_contributions(const Game& g);
std::vector<Rational> individual_worths(const Game& g);
// M_i(v) - v_i for every player.
std::vector<Rational> net_marginal_contributions(const Game& g);

// (v - nu)(S) = v(S) - sum of the individual worths in S.
Game zero_normalise(const Game& g);

// v*(S) = v(N) - v(N \ S).
Game dual_game(const Game& g);

// Moebius inversion of the worth table over the subset lattice.
DividendDecomposition harsanyi_dividends(const Game& g);
Game from_dividends(const DividendDecomposition& d);
Game from_dividends(const std::map<Coalition, Rational>& entries, int n);

// u_S(T) = 1 if S is a subset of T. Throws GameError (EmptyCoalition).
Game unanimity_game(Coalition s, int n);

GameClassReport classify(const Game& g);

// v(S) + v(T) <= v(S u T) for all disjoint S, T. Enumerates 3^n pairs.
bool is_superadditive(const Game& g);

}  // namespace gately

#endif  // GATELY_GAME_HPP
