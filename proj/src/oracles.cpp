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
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"

namespace gately {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Combine { kMax, kSum };

struct Setup {
  int n = 0;
  std::vector<double> nu;
  std::vector<double> net;
  double surplus = 0.0;
};

Setup prepare(const Game& g, const OracleOptions& opts) {
  const int n = g.players();
  if (n > kMaxOraclePlayers) {
    throw GameError(ErrorCode::kTooManyPlayers,
                    "oracles are limited to " +
                        std::to_string(kMaxOraclePlayers) + " players");
  }
  if (!classify(g).regular) {
    throw GameError(ErrorCode::kNotRegular, "oracle needs a regular game");
  }
  if (opts.coarse_divisions < 1 || opts.points_per_axis < 3 ||
      !(opts.shrink > 0.0 && opts.shrink < 1.0) || opts.min_rounds < 0 ||
      !(opts.resolution > 0.0)) {
    throw GameError(ErrorCode::kInvalidParameter, "bad oracle options");
  }
  Setup s;
  s.n = n;
  const auto nu = individual_worths(g);
  s.nu = to_doubles(nu);
  s.net = to_doubles(net_marginal_contributions(g));
  s.surplus = Rational(g.worth(g.grand()) - sum(nu)).get_d();
  return s;
}

// rho^beta_i at gain z = x_i - v_i.
double rho(double net, double z, double beta) {
  if (net == 0.0) return 0.0;
  if (z <= 0.0) return kInf;
  return net / std::pow(z, beta);
}

double combine(Combine how, double acc, double term) {
  return how == Combine::kMax ? std::max(acc, term) : acc + term;
}

// Minimises combine_j rho(z_j) over gains z >= 0 summing to the surplus.
// The player with the largest base is the dependent coordinate so every
// other player can sit exactly at zero.
std::vector<double> grid_minimise(const Setup& s, double beta, Combine how,
                                  const OracleOptions& opts) {
  const int n = s.n;
  const int last = static_cast<int>(
      std::max_element(s.net.begin(), s.net.end()) - s.net.begin());
  std::vector<int> free_axes;
  for (int i = 0; i < n; ++i) {
    if (i != last) free_axes.push_back(i);
  }
  const int f = static_cast<int>(free_axes.size());
  const double total = s.surplus;

  std::vector<double> best_z(n, 0.0);
  double best = kInf;

  auto score = [&](const std::vector<double>& z) {
    double acc = how == Combine::kMax ? -kInf : 0.0;
    for (int i = 0; i < n; ++i) acc = combine(how, acc, rho(s.net[i], z[i], beta));
    return acc;
  };

  // Coarse pass over compositions of K into n parts.
  const int k_div = opts.coarse_divisions;
  std::vector<int> parts(f, 0);
  std::vector<double> z(n, 0.0);
  std::function<void(int, int)> lattice = [&](int axis, int left) {
    if (axis == f) {
      for (int a = 0; a < f; ++a) z[free_axes[a]] = total * parts[a] / k_div;
      z[last] = total * left / k_div;
      const double v = score(z);
      if (v < best) {
        best = v;
        best_z = z;
      }
      return;
    }
    for (int p = 0; p <= left; ++p) {
      parts[axis] = p;
      lattice(axis + 1, left - p);
    }
  };
  lattice(0, k_div);

  // Refinement: tensor grid over the free coordinates around the incumbent.
  const int pts = opts.points_per_axis;
  double width = total / k_div;
  for (int round = 0;
       round < opts.min_rounds || width >= opts.resolution * total; ++round) {
    std::vector<std::vector<std::pair<double, double>>> axis_values(f);
    for (int a = 0; a < f; ++a) {
      const int i = free_axes[a];
      for (int t = 0; t < pts; ++t) {
        const double offset = width * (2.0 * t / (pts - 1) - 1.0);
        const double v = t == (pts - 1) / 2 ? best_z[i] : best_z[i] + offset;
        if (v < 0.0 || v > total) continue;
        axis_values[a].emplace_back(v, rho(s.net[i], v, beta));
      }
    }
    std::vector<double> incumbent = best_z;
    std::vector<double> cur(n, 0.0);
    std::function<void(int, double, double)> walk = [&](int axis, double used,
                                                        double acc) {
      if (how == Combine::kMax && acc >= best) return;
      if (axis == f) {
        const double rest = total - used;
        if (rest < 0.0) return;
        const double v = combine(how, acc, rho(s.net[last], rest, beta));
        if (v < best) {
          best = v;
          cur[last] = rest;
          incumbent = cur;
        }
        return;
      }
      for (const auto& [value, r] : axis_values[axis]) {
        cur[free_axes[axis]] = value;
        walk(axis + 1, used + value, combine(how, acc, r));
      }
    };
    walk(0, 0.0, how == Combine::kMax ? -kInf : 0.0);
    best_z = incumbent;
    width *= opts.shrink;
  }
  return best_z;
}

Imputation to_imputation(const Setup& s, const std::vector<double>& z) {
  std::vector<double> x(s.n);
  for (int i = 0; i < s.n; ++i) x[i] = s.nu[i] + z[i];
  return Allocation::approx(std::move(x));
}

}  // namespace

Imputation minimax_oracle(const Game& g, double beta,
                          const OracleOptions& options) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw GameError(ErrorCode::kInvalidParameter, "beta must be positive");
  }
  const Setup s = prepare(g, options);
  if (s.surplus == 0.0) return Allocation::approx(s.nu);
  return to_imputation(s, grid_minimise(s, beta, Combine::kMax, options));
}

Imputation aggregate_min_oracle(const Game& g, double alpha,
                                const OracleOptions& options) {
  if (alpha == 1.0) {
    throw GameError(ErrorCode::kBetaZeroDegenerate,
                    "beta = 0 makes the aggregate propensity constant");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "aggregate minimisation needs alpha in (0, 1)");
  }
  const Setup s = prepare(g, options);
  if (s.surplus == 0.0) return Allocation::approx(s.nu);
  const double beta = (1.0 - alpha) / alpha;
  return to_imputation(s, grid_minimise(s, beta, Combine::kSum, options));
}

}  // namespace gately
