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
#include <string>
#include <utility>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"

namespace gately {
namespace {

struct Bases {
  std::vector<Rational> net;
  std::vector<Rational> nu;
  Rational surplus;
};

Bases semi_standard_bases(const Game& g) {
  Bases out{net_marginal_contributions(g), individual_worths(g), Rational(0)};
  for (const auto& b : out.net) {
    if (b < 0) {
      throw GameError(ErrorCode::kNotSemiStandard,
                      "some player has M_i(v) < v_i");
    }
  }
  out.surplus = g.worth(g.grand()) - sum(out.nu);
  return out;
}

// b_j^alpha / max_k b_k^alpha, zero where b_j = 0.
std::vector<double> scaled_weights(const std::vector<Rational>& net,
                                   double alpha) {
  double log_max = -INFINITY;
  for (const auto& b : net) {
    if (b > 0) log_max = std::max(log_max, std::log(b.get_d()));
  }
  std::vector<double> w(net.size(), 0.0);
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i] > 0) w[i] = std::exp(alpha * (std::log(net[i].get_d()) - log_max));
  }
  return w;
}

// Core check of g^alpha restricted to one coalition.
bool coalition_holds(const Game& g, Coalition s, double alpha) {
  const auto x = alpha_gately_value(g, alpha);
  if (x.is_exact()) {
    return coalition_sum(std::span(x.exact_payoffs()), s) >= g.worth(s);
  }
  const auto p = x.approx_payoffs();
  return coalition_sum(std::span<const double>(p), s) >=
         g.worth(s).get_d() - kPayoffTolerance;
}

bool member_at(const Game& g, double alpha) {
  return core_membership(g, alpha_gately_value(g, alpha)).member;
}

using Intervals = std::vector<std::pair<double, double>>;

Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

// Bisects on log(alpha) between a feasible and an infeasible probe and
// returns the last point known to be feasible.
double bisect(const Game& g, Coalition s, double feasible, double infeasible,
              double tol) {
  while (std::abs(feasible - infeasible) > tol) {
    const double mid = std::sqrt(feasible * infeasible);
    if (mid == feasible || mid == infeasible) break;
    if (coalition_holds(g, s, mid)) {
      feasible = mid;
    } else {
      infeasible = mid;
    }
  }
  return feasible;
}

double snap_integer(double alpha) {
  const double r = std::round(alpha);
  return (r >= 1.0 && std::abs(alpha - r) <= 1e-12 * alpha) ? r : alpha;
}

}  // namespace

TopDominance alpha_top_dominance(const Game& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw GameError(ErrorCode::kInvalidParameter, "alpha must be positive");
  }
  const auto bases = semi_standard_bases(g);
  const int n = g.players();
  const std::uint32_t count = coalition_count(n);
  TopDominance out;
  out.holds = true;

  if (auto k = exact_exponent(alpha)) {
    std::vector<Rational> p(n);
    for (int i = 0; i < n; ++i) p[i] = pow(bases.net[i], *k);
    const Rational total = sum(p);
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const Coalition s(mask);
      const Rational lhs = (g.worth(s) - coalition_sum(bases.nu, s)) * total;
      const Rational rhs = bases.surplus * coalition_sum(p, s);
      if (lhs > rhs) {
        out.holds = false;
        out.first_failure = s;
        return out;
      }
    }
    return out;
  }

  const auto w = scaled_weights(bases.net, alpha);
  double total = 0.0;
  for (double x : w) total += x;
  // With every base zero both sides vanish for every coalition.
  if (total == 0.0) return out;
  const double surplus = bases.surplus.get_d();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const Coalition s(mask);
    const double need =
        Rational(g.worth(s) - coalition_sum(bases.nu, s)).get_d();
    const double slack = surplus * coalition_sum(std::span<const double>(w), s) /
                             total -
                         need;
    if (slack < -kPayoffTolerance) {
      out.holds = false;
      out.first_failure = s;
      return out;
    }
  }
  return out;
}

bool check_maincore_iff(const Game& g, double alpha) {
  const auto x = alpha_gately_value(g, alpha);
  return alpha_top_dominance(g, alpha).holds == core_membership(g, x).member;
}

AlphaRange alpha_core_range(const Game& g, int grid, double refine_tol) {
  if (grid < 3) {
    throw GameError(ErrorCode::kInvalidParameter, "grid needs at least 3 probes");
  }
  if (!(refine_tol > 0.0) || !std::isfinite(refine_tol)) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "refine_tol must be positive");
  }
  // Surfaces NotStandard / NotSemiStandard before any probing.
  (void)alpha_gately_value(g, 1.0);
  if (grid % 2 == 0) ++grid;

  AlphaRange out;
  const double lo = std::log(kAlphaProbeMin);
  const double hi = std::log(kAlphaProbeMax);
  for (int k = 0; k < grid; ++k) {
    const double t = lo + (hi - lo) * k / (grid - 1);
    out.probe_grid.push_back(k == grid / 2 ? 1.0 : snap_integer(std::exp(t)));
  }
  out.probe_grid.front() = kAlphaProbeMin;
  out.probe_grid.back() = kAlphaProbeMax;

  const int n = g.players();
  const std::uint32_t count = coalition_count(n);
  const std::uint32_t grand = count - 1;

  // feasible[k][mask]: coalition constraint holds at probe k.
  std::vector<std::vector<bool>> feasible(grid, std::vector<bool>(count, true));
  for (int k = 0; k < grid; ++k) {
    const auto cert =
        core_membership(g, alpha_gately_value(g, out.probe_grid[k]));
    for (const auto& v : cert.violated_coalitions) {
      feasible[k][v.coalition.mask()] = false;
    }
  }

  Intervals allowed{{kAlphaProbeMin, kAlphaProbeMax}};
  for (std::uint32_t mask = 1; mask < grand && !allowed.empty(); ++mask) {
    const Coalition s(mask);
    Intervals own;
    double start = 0.0;
    bool open = false;
    for (int k = 0; k < grid; ++k) {
      const double a = out.probe_grid[k];
      const bool ok = feasible[k][mask];
      if (k == 0) {
        if (ok) {
          start = a;
          open = true;
        }
        continue;
      }
      const bool prev = feasible[k - 1][mask];
      const double b = out.probe_grid[k - 1];
      if (ok && !prev) {
        start = bisect(g, s, a, b, refine_tol);
        open = true;
      } else if (!ok && prev) {
        own.emplace_back(start, bisect(g, s, b, a, refine_tol));
        open = false;
      }
    }
    if (open) own.emplace_back(start, kAlphaProbeMax);
    allowed = intersect(allowed, own);
  }

  for (auto [lower, upper] : allowed) {
    AlphaInterval iv{lower, upper, false, false};
    if (upper - lower < refine_tol) {
      const double r = std::round(0.5 * (lower + upper));
      const double mid = 0.5 * (lower + upper);
      const double point = (r >= 1.0 && std::abs(r - mid) <= refine_tol &&
                            member_at(g, r))
                               ? r
                               : mid;
      iv.lower = iv.upper = point;
    } else {
      // Endpoints within tolerance of an integer where the exact check
      // passes are reported at that integer.
      for (double* e : {&iv.lower, &iv.upper}) {
        const double r = std::round(*e);
        if (r >= 1.0 && *e != r && std::abs(*e - r) <= refine_tol &&
            member_at(g, r)) {
          *e = r;
        }
      }
    }
    iv.lower_exact = exact_exponent(iv.lower).has_value() && member_at(g, iv.lower);
    iv.upper_exact = exact_exponent(iv.upper).has_value() && member_at(g, iv.upper);
    if (!member_at(g, iv.lower) || !member_at(g, iv.upper)) {
      out.endpoints_validated = false;
    }
    out.intervals.push_back(iv);
  }
  return out;
}

}  // namespace gately
