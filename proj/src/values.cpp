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

#include "gately/values.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gately/errors.hpp"

namespace gately {

Allocation Allocation::exact(std::vector<Rational> payoffs) {
  Allocation a;
  a.mode_ = NumericMode::kExact;
  a.exact_ = std::move(payoffs);
  return a;
}

Allocation Allocation::approx(std::vector<double> payoffs) {
  Allocation a;
  a.mode_ = NumericMode::kApprox;
  a.approx_ = std::move(payoffs);
  return a;
}

std::size_t Allocation::size() const {
  return is_exact() ? exact_.size() : approx_.size();
}

const std::vector<Rational>& Allocation::exact_payoffs() const {
  if (!is_exact()) {
    throw std::logic_error("exact payoffs requested from a float allocation");
  }
  return exact_;
}

std::vector<double> Allocation::approx_payoffs() const {
  return is_exact() ? to_doubles(exact_) : approx_;
}

double Allocation::operator[](std::size_t i) const {
  return is_exact() ? exact_.at(i).get_d() : approx_.at(i);
}

namespace {

void check_player(const Game& g, int player) {
  if (player < 0 || player >= g.players()) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "player index " + std::to_string(player) + " out of range");
  }
}

void check_size(const Game& g, std::size_t size) {
  if (size != static_cast<std::size_t>(g.players())) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "payoff vector has " + std::to_string(size) +
                        " entries for a " + std::to_string(g.players()) +
                        "-player game");
  }
}

void check_proper(const Game& g, Coalition s) {
  if (s.empty() || s == g.grand()) {
    throw GameError(ErrorCode::kBadCoalition,
                    "propensity to disrupt needs a proper nonempty coalition");
  }
  if (!s.fits(g.players())) {
    throw GameError(ErrorCode::kInvalidCoalition,
                    "coalition " + s.to_string() + " is not a subset of N");
  }
}

template <class T>
Extended<T> ratio(const T& num, const T& den) {
  if (den == 0) {
    if (num > 0) return Extended<T>::plus_infinity();
    if (num < 0) return Extended<T>::minus_infinity();
    return Extended<T>::indeterminate();
  }
  return Extended<T>::finite(T(num / den));
}

bool float_imputation(const Game& g, std::span<const double> x) {
  const double total = g.worth(g.grand()).get_d();
  double s = 0.0;
  for (double xi : x) s += xi;
  if (std::abs(s - total) > kPayoffTolerance * std::max(1.0, std::abs(total))) {
    return false;
  }
  for (int i = 0; i < g.players(); ++i) {
    if (x[i] < g.individual(i).get_d() - kPayoffTolerance) return false;
  }
  return true;
}

// Net marginal contributions of a standard game; the class checks mirror the
// alpha-Gately domain.
std::vector<Rational> standard_bases(const Game& g) {
  auto net = net_marginal_contributions(g);
  bool strict = false;
  for (const auto& b : net) {
    if (b < 0) {
      throw GameError(ErrorCode::kNotSemiStandard,
                      "some player has M_i(v) < v_i");
    }
    if (b > 0) strict = true;
  }
  if (!strict) {
    throw GameError(ErrorCode::kNotStandard,
                    "M_i(v) = v_i for every player; the surplus has no "
                    "well-defined split");
  }
  return net;
}

// nu + share_i / sum(shares) * surplus. The caller guarantees a nonzero sum.
std::vector<Rational> split_surplus(const Game& g,
                                    const std::vector<Rational>& shares) {
  const auto nu = individual_worths(g);
  const Rational surplus = g.worth(g.grand()) - sum(nu);
  const Rational total = sum(shares);
  std::vector<Rational> x(nu);
  for (int i = 0; i < g.players(); ++i) x[i] += shares[i] / total * surplus;
  return x;
}

}  // namespace

ExtendedRational propensity_coalition(const Game& g, std::span<const Rational> x,
                                      Coalition s) {
  check_size(g, x.size());
  check_proper(g, s);
  const Coalition rest = s.complement(g.players());
  return ratio<Rational>(coalition_sum(x, rest) - g.worth(rest),
                         coalition_sum(x, s) - g.worth(s));
}

ExtendedReal propensity_coalition(const Game& g, std::span<const double> x,
                                  Coalition s) {
  check_size(g, x.size());
  check_proper(g, s);
  const Coalition rest = s.complement(g.players());
  return ratio<double>(coalition_sum(x, rest) - g.worth(rest).get_d(),
                       coalition_sum(x, s) - g.worth(s).get_d());
}

ExtendedRational propensity_player(const Game& g, std::span<const Rational> x,
                                   int player) {
  check_size(g, x.size());
  check_player(g, player);
  const Rational m = g.worth(g.grand()) - g.worth(g.grand().without(player));
  return ratio<Rational>(m - x[player], x[player] - g.individual(player));
}

ExtendedReal propensity_player(const Game& g, std::span<const double> x,
                               int player) {
  check_size(g, x.size());
  check_player(g, player);
  const Rational m = g.worth(g.grand()) - g.worth(g.grand().without(player));
  return ratio<double>(m.get_d() - x[player],
                       x[player] - g.individual(player).get_d());
}

ExtendedReal generalized_propensity(const Game& g, std::span<const double> x,
                                    int player, double beta) {
  check_size(g, x.size());
  check_player(g, player);
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw GameError(ErrorCode::kInvalidParameter, "beta must be positive");
  }
  if (!float_imputation(g, x)) {
    throw GameError(ErrorCode::kNonImputation,
                    "generalised propensities are defined on imputations");
  }
  const Rational net_exact =
      g.worth(g.grand()) - g.worth(g.grand().without(player)) -
      g.individual(player);
  if (net_exact == 0) return ExtendedReal::finite(0.0);
  const double net = net_exact.get_d();
  const double gain = x[player] - g.individual(player).get_d();
  if (gain <= 0.0) {
    return net > 0 ? ExtendedReal::plus_infinity()
                   : ExtendedReal::minus_infinity();
  }
  return ExtendedReal::finite(net / std::pow(gain, beta));
}

ExtendedRational generalized_propensity(const Game& g,
                                        std::span<const Rational> x, int player,
                                        unsigned long beta) {
  check_size(g, x.size());
  check_player(g, player);
  if (beta == 0) {
    throw GameError(ErrorCode::kInvalidParameter, "beta must be positive");
  }
  bool imputation = sum(x) == g.worth(g.grand());
  for (int i = 0; i < g.players() && imputation; ++i) {
    imputation = x[i] >= g.individual(i);
  }
  if (!imputation) {
    throw GameError(ErrorCode::kNonImputation,
                    "generalised propensities are defined on imputations");
  }
  const Rational net = g.worth(g.grand()) -
                       g.worth(g.grand().without(player)) -
                       g.individual(player);
  if (net == 0) return ExtendedRational::finite(Rational(0));
  return ratio<Rational>(net, pow(Rational(x[player] - g.individual(player)),
                                  beta));
}

PropensityProfile propensity_profile(const Game& g, std::span<const double> x,
                                     double beta) {
  PropensityProfile profile;
  profile.beta = beta;
  for (int i = 0; i < g.players(); ++i) {
    profile.entries.push_back(generalized_propensity(g, x, i, beta));
  }
  return profile;
}

Imputation gately_value(const Game& g) {
  const auto net = net_marginal_contributions(g);
  if (sum(net) == 0) {
    throw GameError(ErrorCode::kNotStandard,
                    "sum of M_i(v) - v_i is zero, so the balance equations "
                    "admit no unique Gately point");
  }
  return Allocation::exact(split_surplus(g, net));
}

Imputation alpha_gately_value_exact(const Game& g, unsigned long alpha) {
  if (alpha == 0) {
    throw GameError(ErrorCode::kInvalidParameter, "alpha must be positive");
  }
  auto shares = standard_bases(g);
  for (auto& b : shares) b = pow(b, alpha);
  return Allocation::exact(split_surplus(g, shares));
}

Imputation alpha_gately_value(const Game& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw GameError(ErrorCode::kInvalidParameter, "alpha must be positive");
  }
  if (auto k = exact_exponent(alpha)) return alpha_gately_value_exact(g, *k);

  const auto bases = standard_bases(g);
  // Weights b_i^alpha scaled by the largest base: exp(alpha (ln b_i - ln b_max))
  // stays finite for very large and very small alpha.
  double log_max = -INFINITY;
  for (const auto& b : bases) {
    if (b > 0) log_max = std::max(log_max, std::log(b.get_d()));
  }
  std::vector<double> weights(bases.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] > 0) {
      weights[i] = std::exp(alpha * (std::log(bases[i].get_d()) - log_max));
      total += weights[i];
    }
  }
  const auto nu = individual_worths(g);
  const double surplus = Rational(g.worth(g.grand()) - sum(nu)).get_d();
  std::vector<double> x(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    x[i] = nu[i].get_d() + weights[i] / total * surplus;
  }
  return Allocation::approx(std::move(x));
}

Imputation alpha_limit_value(const Game& g, AlphaLimit which) {
  const auto bases = standard_bases(g);
  const Rational top = *std::max_element(bases.begin(), bases.end());
  std::vector<Rational> shares(bases.size(), Rational(0));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const bool in_set = which == AlphaLimit::kZero ? bases[i] > 0
                                                   : bases[i] == top;
    if (in_set) shares[i] = 1;
  }
  return Allocation::exact(split_surplus(g, shares));
}

Allocation dual_alpha_gately(const Game& g, unsigned long alpha) {
  if (alpha == 0) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "the dual alpha-Gately value needs a positive integer alpha");
  }
  const auto net = standard_bases(g);

  // Route 1: the alpha-Gately formula applied to the dual game. Its net
  // contributions v_i - M_i(v) are non-positive, which an integer power
  // handles exactly.
  const Game dual = dual_game(g);
  auto dual_shares = net_marginal_contributions(dual);
  for (auto& b : dual_shares) b = pow(b, alpha);
  if (sum(dual_shares) == 0) {
    throw GameError(ErrorCode::kNotStandard,
                    "the dual game has a zero sum of net contributions");
  }
  auto via_dual = split_surplus(dual, dual_shares);

  // Route 2: M_i - b_i^a / sum_j b_j^a * (sum_j M_j - v(N)).
  const auto m = marginal_contributions(g);
  std::vector<Rational> powered(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) powered[i] = pow(net[i], alpha);
  const Rational denom = sum(powered);
  const Rational excess = sum(m) - g.worth(g.grand());
  std::vector<Rational> closed(m);
  for (std::size_t i = 0; i < m.size(); ++i) {
    closed[i] -= powered[i] / denom * excess;
  }

  if (via_dual != closed) {
    throw std::logic_error("dual alpha-Gately routes disagree");
  }
  return Allocation::exact(std::move(closed));
}

Imputation shapley_value(const Game& g) {
  std::vector<Rational> phi(g.players(), Rational(0));
  const auto dividends = harsanyi_dividends(g);
  for (const auto& [s, d] : dividends.entries()) {
    const Rational share = d / s.size();
    for (int i : s.members()) phi[i] += share;
  }
  return Allocation::exact(std::move(phi));
}

Allocation equal_division(const Game& g) {
  const Rational each = g.worth(g.grand()) / g.players();
  return Allocation::exact(std::vector<Rational>(g.players(), each));
}

Rational compromise_coefficient(const Game& g) {
  const auto net = standard_bases(g);
  const Rational surplus =
      g.worth(g.grand()) - sum(individual_worths(g));
  return surplus / sum(net);
}

}  // namespace gately
