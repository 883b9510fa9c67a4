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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"
#include "gately/lp.hpp"

namespace gately {
namespace {

// x(S) for every coalition, built from the table entry without S's lowest
// player.
template <class T>
std::vector<T> coalition_totals(std::span<const T> x, int n) {
  std::vector<T> totals(coalition_count(n), T(0));
  for (std::uint32_t mask = 1; mask < totals.size(); ++mask) {
    const int low = std::countr_zero(mask);
    totals[mask] = totals[mask & (mask - 1)] + x[low];
  }
  return totals;
}

void check_size(const Game& g, const Allocation& x) {
  if (x.size() != static_cast<std::size_t>(g.players())) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "payoff vector has " + std::to_string(x.size()) +
                        " entries for a " + std::to_string(g.players()) +
                        "-player game");
  }
}

// Row-reduced basis of 0/1 coalition vectors, used to detect coalitions
// whose excess is already pinned down by the fixed ones.
class Span {
 public:
  explicit Span(int n) : n_(n) {}

  // Adds the indicator of s; returns false if it was already in the span.
  bool add(Coalition s) {
    auto v = reduce(indicator(s));
    auto pivot = std::find_if(v.begin(), v.end(),
                              [](const Rational& r) { return r != 0; });
    if (pivot == v.end()) return false;
    const Rational lead = *pivot;
    for (auto& r : v) r /= lead;
    pivots_.push_back(static_cast<int>(pivot - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(Coalition s) const {
    auto v = reduce(indicator(s));
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& r) { return r == 0; });
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Rational> indicator(Coalition s) const {
    std::vector<Rational> v(n_, Rational(0));
    for (int i : s.members()) v[i] = 1;
    return v;
  }

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational factor = v[pivots_[k]];
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) v[j] -= factor * rows_[k][j];
    }
    return v;
  }

  int n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

bool is_imputation(const Game& g, const Allocation& x) {
  check_size(g, x);
  const int n = g.players();
  if (x.is_exact()) {
    const auto& p = x.exact_payoffs();
    if (sum(p) != g.worth(g.grand())) return false;
    for (int i = 0; i < n; ++i) {
      if (p[i] < g.individual(i)) return false;
    }
    return true;
  }
  const auto p = x.approx_payoffs();
  const double total = g.worth(g.grand()).get_d();
  double s = 0.0;
  for (double v : p) s += v;
  if (std::abs(s - total) > kPayoffTolerance * std::max(1.0, std::abs(total))) {
    return false;
  }
  for (int i = 0; i < n; ++i) {
    if (p[i] < g.individual(i).get_d() - kPayoffTolerance) return false;
  }
  return true;
}

CoreCertificate core_membership(const Game& g, const Allocation& x) {
  check_size(g, x);
  const int n = g.players();
  CoreCertificate cert;
  cert.approximate = !x.is_exact();
  const std::uint32_t count = coalition_count(n);
  if (x.is_exact()) {
    const auto totals =
        coalition_totals<Rational>(std::span(x.exact_payoffs()), n);
    cert.efficient = totals[count - 1] == g.worth(g.grand());
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const Coalition s(mask);
      Rational deficit = g.worth(s) - totals[mask];
      if (deficit > 0) cert.violated_coalitions.push_back({s, std::move(deficit)});
    }
  } else {
    const auto p = x.approx_payoffs();
    const auto totals = coalition_totals<double>(std::span(p), n);
    const double total = g.worth(g.grand()).get_d();
    cert.efficient = std::abs(totals[count - 1] - total) <=
                     kPayoffTolerance * std::max(1.0, std::abs(total));
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const Coalition s(mask);
      const double deficit = g.worth(s).get_d() - totals[mask];
      if (deficit > kPayoffTolerance) {
        cert.violated_coalitions.push_back({s, from_double(deficit)});
      }
    }
  }
  cert.member = cert.efficient && cert.violated_coalitions.empty();
  return cert;
}

CoreWitness core_nonempty(const Game& g) {
  // Dual of min x(N) s.t. x(S) >= v(S): maximise sum_S y_S v(S) over
  // balanced weights sum_{S ∋ i} y_S = 1, y >= 0. Its row multipliers give
  // the primal minimiser.
  const int n = g.players();
  const std::uint32_t count = coalition_count(n);
  const std::uint32_t grand = count - 1;
  lp::Problem problem;
  const std::size_t columns = count - 2;
  problem.rows.assign(n, std::vector<Rational>(columns, Rational(0)));
  problem.rhs.assign(n, Rational(1));
  problem.cost.reserve(columns);
  for (std::uint32_t mask = 1, col = 0; mask < grand; ++mask, ++col) {
    for (int i : Coalition(mask).members()) problem.rows[i][col] = 1;
    problem.cost.push_back(-g.worth(Coalition(mask)));
  }
  const auto solution = lp::minimize(problem);
  if (solution.status != lp::Status::kOptimal) {
    throw std::logic_error("balancedness program must have an optimum");
  }
  const Rational min_total = -solution.objective;
  const Rational& total = g.worth(g.grand());
  CoreWitness out;
  out.nonempty = min_total <= total;
  if (out.nonempty) {
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = -solution.duals[i];
    x[0] += total - min_total;
    out.witness = Allocation::exact(std::move(x));
  }
  return out;
}

Imputation nucleolus(const Game& g) {
  const int n = g.players();
  if (n > kMaxNucleolusPlayers) {
    throw GameError(ErrorCode::kTooManyPlayers,
                    "nucleolus is limited to " +
                        std::to_string(kMaxNucleolusPlayers) + " players");
  }
  const auto nu = individual_worths(g);
  const Rational surplus = g.worth(g.grand()) - sum(nu);
  if (surplus < 0) {
    throw GameError(ErrorCode::kEmptyImputationSet,
                    "v(N) is below the sum of individual worths");
  }

  // Work in gains y = x - nu >= 0; r(S) = v(S) - nu(S) is the worth a
  // coalition must cover. Excess of S is r(S) - y(S).
  auto requirement = [&](Coalition s) {
    return Rational(g.worth(s) - coalition_sum(nu, s));
  };

  std::vector<Coalition> active;
  for (std::uint32_t mask = 1; mask + 1 < coalition_count(n); ++mask) {
    active.emplace_back(mask);
  }
  std::vector<std::pair<Coalition, Rational>> fixed;
  Span span(n);
  span.add(g.grand());

  while (true) {
    // Columns: y_0..y_{n-1}, t+, t-, one surplus column per active row.
    const std::size_t width = n + 2 + active.size();
    lp::Problem p;
    p.cost.assign(width, Rational(0));
    p.cost[n] = 1;
    p.cost[n + 1] = -1;

    std::vector<Rational> row(width, Rational(0));
    for (int i = 0; i < n; ++i) row[i] = 1;
    p.rows.push_back(row);
    p.rhs.push_back(surplus);

    for (const auto& [s, level] : fixed) {
      std::vector<Rational> r(width, Rational(0));
      for (int i : s.members()) r[i] = 1;
      p.rows.push_back(std::move(r));
      p.rhs.push_back(requirement(s) - level);
    }
    const std::size_t first_active = p.rows.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      std::vector<Rational> r(width, Rational(0));
      for (int i : active[k].members()) r[i] = 1;
      r[n] = 1;
      r[n + 1] = -1;
      r[n + 2 + k] = -1;
      p.rows.push_back(std::move(r));
      p.rhs.push_back(requirement(active[k]));
    }

    const auto sol = lp::minimize(p);
    if (sol.status != lp::Status::kOptimal) {
      throw std::logic_error("nucleolus stage program has no optimum");
    }
    const Rational level = sol.objective;

    // Positive multipliers mark coalitions whose excess equals the optimum
    // at every optimal point.
    bool fixed_any = false;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (sol.duals[first_active + k] > 0) {
        fixed.emplace_back(active[k], level);
        span.add(active[k]);
        fixed_any = true;
      }
    }
    if (!fixed_any) {
      throw std::logic_error("nucleolus stage fixed no coalition");
    }
    if (span.rank() == n) {
      std::vector<Rational> x(nu);
      for (int i = 0; i < n; ++i) x[i] += sol.x[i];
      return Allocation::exact(std::move(x));
    }
    std::erase_if(active, [&](Coalition s) { return span.contains(s); });
  }
}

}  // namespace gately
