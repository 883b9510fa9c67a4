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

#ifndef GATELY_VALUES_HPP
#define GATELY_VALUES_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gately/coalition.hpp"
#include "gately/game.hpp"
#include "gately/rational.hpp"

namespace gately {

enum class NumericMode { kExact, kApprox };

// Absolute tolerance for float-mode comparisons of payoffs.
inline constexpr double kPayoffTolerance = 1e-9;

// A payoff vector, held either as exact rationals or as doubles. Value maps
// return exact allocations whenever the computation is rational.
class Allocation {
 public:
  Allocation() = default;
  static Allocation exact(std::vector<Rational> payoffs);
  static Allocation approx(std::vector<double> payoffs);

  NumericMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == NumericMode::kExact; }
  std::size_t size() const;

  // Throws std::logic_error for float-mode allocations.
  const std::vector<Rational>& exact_payoffs() const;
  // Available in both modes.
  std::vector<double> approx_payoffs() const;
  double operator[](std::size_t i) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  NumericMode mode_ = NumericMode::kExact;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

// Value maps always return imputations on their intended domain; the alias
// marks those call sites. is_imputation() checks the property.
using Imputation = Allocation;

enum class ExtendedKind { kFinite, kPlusInfinity, kMinusInfinity, kIndeterminate };

// A number extended with signed infinities and an indeterminate 0/0 marker.
template <class T>
struct Extended {
  ExtendedKind kind = ExtendedKind::kFinite;
  T value{};

  static Extended finite(T v) { return {ExtendedKind::kFinite, std::move(v)}; }
  static Extended plus_infinity() { return {ExtendedKind::kPlusInfinity, T{}}; }
  static Extended minus_infinity() { return {ExtendedKind::kMinusInfinity, T{}}; }
  static Extended indeterminate() { return {ExtendedKind::kIndeterminate, T{}}; }

  bool is_finite() const { return kind == ExtendedKind::kFinite; }
  bool is_plus_infinity() const { return kind == ExtendedKind::kPlusInfinity; }
  bool is_indeterminate() const { return kind == ExtendedKind::kIndeterminate; }

  friend bool operator==(const Extended&, const Extended&) = default;
};

using ExtendedRational = Extended<Rational>;
using ExtendedReal = Extended<double>;

// Per-player generalised propensities at one imputation.
struct PropensityProfile {
  std::vector<ExtendedReal> entries;
  double beta = 1.0;
};

// d(S, x) = [x(N\S) - v(N\S)] / [x(S) - v(S)]. A zero denominator gives an
// infinity carrying the numerator's sign, or Indeterminate for 0/0.
// Throws GameError (BadCoalition) for the empty and the grand coalition.
ExtendedRational propensity_coalition(const Game& g, std::span<const Rational> x,
                                      Coalition s);
ExtendedReal propensity_coalition(const Game& g, std::span<const double> x,
                                  Coalition s);

// d_i(x) = (M_i - x_i) / (x_i - v_i), same infinity convention.
ExtendedRational propensity_player(const Game& g, std::span<const Rational> x,
                                   int player);
ExtendedReal propensity_player(const Game& g, std::span<const double> x,
                               int player);

// rho^beta_i(x) = (M_i - v_i) / (x_i - v_i)^beta on imputations. Zero when
// M_i = v_i; +infinity when x_i = v_i < M_i. Throws GameError
// (NonImputation, InvalidParameter for beta <= 0).
ExtendedReal generalized_propensity(const Game& g, std::span<const double> x,
                                    int player, double beta);
// Exact variant for integer beta.
ExtendedRational generalized_propensity(const Game& g,
                                        std::span<const Rational> x, int player,
                                        unsigned long beta);

PropensityProfile propensity_profile(const Game& g, std::span<const double> x,
                                     double beta);

// g_i = v_i + (M_i - v_i) / sum_j (M_j - v_j) * (v(N) - sum_j v_j).
// Defined whenever the denominator is nonzero, which covers every standard
// game; otherwise the balance equations have no unique solution and
// GameError (NotStandard) is thrown.
Imputation gately_value(const Game& g);

// The alpha-Gately value on standard games. Exact for positive integer
// alpha up to kMaxExactExponent, float otherwise.
// Throws GameError (NotSemiStandard, NotStandard, InvalidParameter).
Imputation alpha_gately_value(const Game& g, double alpha);
// Exact evaluation for an integer exponent; same preconditions.
Imputation alpha_gately_value_exact(const Game& g, unsigned long alpha);

enum class AlphaLimit { kZero, kInfinity };

// Limits of g^alpha as alpha -> 0 (equal surplus split over players with
// M_i > v_i) and alpha -> infinity (equal split over the argmax of
// M_i - v_i). Throws GameError (NotStandard).
Imputation alpha_limit_value(const Game& g, AlphaLimit which);

// g^alpha of the dual game, for alpha a positive integer. Computed through
// the dual game and through the closed form in the primal worths; the two
// must agree exactly. Throws GameError (NotStandard, InvalidParameter).
Allocation dual_alpha_gately(const Game& g, unsigned long alpha);

// phi_i = sum over S containing i of Delta_S / |S|.
Imputation shapley_value(const Game& g);

// v(N)/n for every player.
Allocation equal_division(const Game& g);

// gamma_v = (v(N) - sum_i v_i) / sum_i (M_i - v_i). Throws NotStandard.
Rational compromise_coefficient(const Game& g);

}  // namespace gately

#endif  // GATELY_VALUES_HPP
