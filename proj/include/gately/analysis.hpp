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

#ifndef GATELY_ANALYSIS_HPP
#define GATELY_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "gately/coalition.hpp"
#include "gately/game.hpp"
#include "gately/rational.hpp"
#include "gately/values.hpp"

namespace gately {

// ---------------------------------------------------------------------------
// Core geometry

struct CoreViolation {
  Coalition coalition;
  // v(S) - x(S) > 0. For float allocations this is the exact value of the
  // double difference.
  Rational deficit;
};

struct CoreCertificate {
  bool member = false;
  // x(N) = v(N), exactly or within tolerance. An inefficient payoff vector
  // is never a Core member even when no coalition is short.
  bool efficient = false;
  bool approximate = false;
  std::vector<CoreViolation> violated_coalitions;
};

// Efficiency and individual rationality, exact or within kPayoffTolerance.
bool is_imputation(const Game& g, const Allocation& x);

// Checks x(S) >= v(S) for all 2^n coalitions.
CoreCertificate core_membership(const Game& g, const Allocation& x);

struct CoreWitness {
  bool nonempty = false;
  std::optional<Imputation> witness;
};

// Exact feasibility of the Core through the balancedness linear program:
// min x(N) subject to x(S) >= v(S) for every proper coalition.
CoreWitness core_nonempty(const Game& g);

// Lexicographic excess minimisation over the imputation set by iterated
// exact linear programs. n <= 6. Throws GameError (EmptyImputationSet,
// TooManyPlayers).
Imputation nucleolus(const Game& g);

inline constexpr int kMaxNucleolusPlayers = 6;

// ---------------------------------------------------------------------------
// Top dominance and alpha ranges

struct TopDominance {
  bool holds = false;
  std::optional<Coalition> first_failure;
};

// [v(S) - nu(S)] * sum_N b_j^alpha <= [v(N) - nu(N)] * sum_S b_j^alpha for
// every S, with b_j = M_j - v_j. Exact for integer alpha. In float mode the
// slack is normalised by sum_N b_j^alpha and compared against
// -kPayoffTolerance, matching the Core check on g^alpha.
// Throws GameError (NotSemiStandard).
TopDominance alpha_top_dominance(const Game& g, double alpha);

// alpha-top dominance agrees with g^alpha(v) in C(v). Standard games only.
bool check_maincore_iff(const Game& g, double alpha);

struct AlphaInterval {
  double lower = 0.0;
  double upper = 0.0;
  // Endpoints confirmed by an exact Core check at an integer alpha.
  bool lower_exact = false;
  bool upper_exact = false;

  bool degenerate() const { return lower == upper; }
};

struct AlphaRange {
  std::vector<AlphaInterval> intervals;
  std::vector<double> probe_grid;
  // Every reported endpoint passed a fresh Core check on g^alpha.
  bool endpoints_validated = true;
};

inline constexpr double kAlphaProbeMin = 1e-3;
inline constexpr double kAlphaProbeMax = 1e3;

// Values of alpha in [1e-3, 1e3] with g^alpha(v) in C(v). `grid` log-spaced
// probes (forced odd so alpha = 1 is sampled) locate sign changes of each
// coalition constraint, which are then bisected to width <= refine_tol.
// Intervals narrower than refine_tol collapse to a point.
// Throws GameError (NotStandard, InvalidParameter).
AlphaRange alpha_core_range(const Game& g, int grid = 241,
                            double refine_tol = 1e-6);

// ---------------------------------------------------------------------------
// Numerical oracles

struct OracleOptions {
  // Lattice resolution of the first pass over the imputation simplex.
  int coarse_divisions = 8;
  // Grid points per free coordinate in each refinement window.
  int points_per_axis = 17;
  // Window half-width shrink per round.
  double shrink = 0.25;
  int min_rounds = 12;
  // Stop once the window half-width drops below this fraction of the surplus.
  double resolution = 1e-10;
};

inline constexpr int kMaxOraclePlayers = 6;

// argmin over imputations of max_j rho^beta_j(x) by nested grid refinement.
// Independent of the closed form. Throws GameError (NotRegular,
// TooManyPlayers, InvalidParameter).
Imputation minimax_oracle(const Game& g, double beta,
                          const OracleOptions& options = {});

// argmin over imputations of sum_j rho^beta_j(x), beta = (1 - alpha)/alpha,
// for alpha in (0, 1). Throws GameError (BetaZeroDegenerate for alpha = 1,
// InvalidParameter, NotRegular, TooManyPlayers).
Imputation aggregate_min_oracle(const Game& g, double alpha,
                                const OracleOptions& options = {});

// ---------------------------------------------------------------------------
// Structure theorems

struct ThreePlayerCoreReport {
  bool semi_regular = false;
  bool core_nonempty = false;
  // Unset for games that are not semi-standard or have no unique Gately
  // point.
  std::optional<bool> gately_in_core;
  // semi-regular => Core nonempty and Gately point in Core;
  // Core nonempty => semi-regular.
  bool implications_hold = false;
};

// Throws GameError (WrongPlayerCount).
ThreePlayerCoreReport three_player_core_check(const Game& g);

struct KGameStructure {
  bool is_k_game = false;
  // Common size of all carrier coalitions, if there is one.
  std::optional<int> k;
  std::vector<Coalition> carrier;
};

KGameStructure kgame_structure(const Game& g);

// Exact comparison of the Gately and Shapley values. Throws NotStandard.
bool check_gately_equals_shapley(const Game& g);

struct BalancedExternalitiesReport {
  bool holds = false;
  // Players i whose reduced game v^{-i} is not standard; the identity is not
  // evaluated for them.
  std::vector<int> skipped_players;
};

// g_i(v) = sum_{j != i} (g_j(v) - g_j(v^{-i})) on 2-games, where v^{-i}
// keeps the dividends of coalitions without i. Throws GameError (NotTwoGame).
BalancedExternalitiesReport balanced_externalities_check(const Game& g);

// alpha-top dominance implies regular and partitionally superadditive.
// Returns whether the implication holds. Throws NotStandard.
bool check_topdominance_implications(const Game& g, double alpha);

}  // namespace gately

#endif  // GATELY_ANALYSIS_HPP
