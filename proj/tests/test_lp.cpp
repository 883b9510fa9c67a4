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

#include <doctest.h>

#include <optional>

#include "gately/generators.hpp"
#include "gately/lp.hpp"

using namespace gately;
using gately::lp::Problem;
using gately::lp::Status;

namespace {

Rational r(long v) { return Rational(v); }

std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Optimum of min c.x, Ax = b, x >= 0 over all basic solutions of a
// two-row problem. Returns nullopt if no basis is feasible.
std::optional<Rational> vertex_minimum(const Problem& p) {
  const std::size_t cols = p.cost.size();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i + 1; j < cols; ++j) {
      const Rational a = p.rows[0][i], b = p.rows[0][j];
      const Rational c = p.rows[1][i], d = p.rows[1][j];
      const Rational det = a * d - b * c;
      if (det == 0) continue;
      const Rational xi = (p.rhs[0] * d - b * p.rhs[1]) / det;
      const Rational xj = (a * p.rhs[1] - c * p.rhs[0]) / det;
      if (xi < 0 || xj < 0) continue;
      const Rational value = p.cost[i] * xi + p.cost[j] * xj;
      if (!best || value < *best) best = value;
    }
  }
  return best;
}

void check_certificate(const Problem& p, const lp::Solution& s) {
  REQUIRE(s.status == Status::kOptimal);
  // Primal feasibility.
  for (std::size_t k = 0; k < p.rows.size(); ++k) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < p.cost.size(); ++j) lhs += p.rows[k][j] * s.x[j];
    CHECK(lhs == p.rhs[k]);
  }
  for (const auto& x : s.x) CHECK(x >= 0);
  // Dual feasibility and a zero gap.
  Rational dual_value = 0;
  for (std::size_t k = 0; k < p.rows.size(); ++k) dual_value += p.rhs[k] * s.duals[k];
  CHECK(dual_value == s.objective);
  for (std::size_t j = 0; j < p.cost.size(); ++j) {
    Rational reduced = p.cost[j];
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
      reduced -= p.rows[k][j] * s.duals[k];
    }
    CHECK(reduced >= 0);
  }
}

}  // namespace

TEST_CASE("small problem with a known optimum") {
  // min -x1 - 2x2 s.t. x1 + x2 + s1 = 4, x2 + s2 = 3.
  Problem p{{row({1, 1, 1, 0}), row({0, 1, 0, 1})}, row({4, 3}),
            row({-1, -2, 0, 0})};
  const auto s = lp::minimize(p);
  check_certificate(p, s);
  CHECK(s.objective == -7);
  CHECK(s.x[0] == 1);
  CHECK(s.x[1] == 3);
}

TEST_CASE("negative right-hand sides keep dual signs") {
  // -x1 - x2 = -2, min x1 + 3 x2.
  Problem p{{row({-1, -1})}, row({-2}), row({1, 3})};
  const auto s = lp::minimize(p);
  check_certificate(p, s);
  CHECK(s.objective == 2);
  CHECK(s.duals[0] == -1);
}

TEST_CASE("infeasible and unbounded problems") {
  Problem infeasible{{row({1, 1}), row({1, 1})}, row({1, 2}), row({0, 0})};
  CHECK(lp::minimize(infeasible).status == Status::kInfeasible);
  Problem unbounded{{row({1, -1})}, row({1}), row({-1, 0})};
  CHECK(lp::minimize(unbounded).status == Status::kUnbounded);
}

TEST_CASE("redundant rows") {
  Problem p{{row({1, 1, 0}), row({2, 2, 0}), row({0, 1, 1})}, row({2, 4, 3}),
            row({1, 2, 1})};
  const auto s = lp::minimize(p);
  check_certificate(p, s);
  // x1 = 2 - t, x2 = t, x3 = 3 - t: the cost is 5 along the whole line.
  CHECK(s.objective == 5);
}

TEST_CASE("Beale's cycling example terminates under Bland's rule") {
  // min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7 with slacks x1..x3.
  Problem p;
  p.rows = {
      {r(1), r(0), r(0), Rational(1, 4), r(-8), r(-1), r(9)},
      {r(0), r(1), r(0), Rational(1, 2), r(-12), Rational(-1, 2), r(3)},
      {r(0), r(0), r(1), r(0), r(0), r(1), r(0)},
  };
  p.rhs = row({0, 0, 1});
  p.cost = {r(0), r(0), r(0), Rational(-3, 4), r(20), Rational(-1, 2), r(6)};
  const auto s = lp::minimize(p);
  check_certificate(p, s);
  CHECK(s.objective == Rational(-5, 4));
}

TEST_CASE("random two-row problems match vertex enumeration") {
  Xorshift64Star rng(2024);
  int optimal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Problem p;
    const int cols = 3 + static_cast<int>(rng.below(4));
    p.rows.assign(2, {});
    for (auto& rw : p.rows) {
      for (int j = 0; j < cols; ++j) rw.emplace_back(rng.between(-3, 5));
    }
    p.rhs = {Rational(rng.between(-4, 8)), Rational(rng.between(-4, 8))};
    for (int j = 0; j < cols; ++j) p.cost.emplace_back(rng.between(0, 6));
    // Nonnegative costs keep the problem bounded below.
    const auto s = lp::minimize(p);
    const auto oracle = vertex_minimum(p);
    if (s.status == Status::kOptimal) {
      ++optimal;
      check_certificate(p, s);
      // Full-rank problems attain their optimum at a basis.
      if (oracle) CHECK(s.objective == *oracle);
    } else {
      CHECK(s.status == Status::kInfeasible);
      CHECK_FALSE(oracle.has_value());
    }
  }
  CHECK(optimal > 100);
}
