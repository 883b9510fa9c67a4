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

#include "gately/lp.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gately::lp {
namespace {

struct Entry {
  std::size_t row;
  Rational value;
};

class Tableau {
 public:
  Tableau(const Problem& p) : m_(p.rhs.size()), real_(p.cost.size()) {
    if (p.rows.size() != m_) throw std::invalid_argument("row count mismatch");
    sign_.assign(m_, 1);
    columns_.resize(real_ + m_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (p.rows[r].size() != real_) {
        throw std::invalid_argument("row width mismatch");
      }
      if (p.rhs[r] < 0) sign_[r] = -1;
      for (std::size_t j = 0; j < real_; ++j) {
        if (p.rows[r][j] != 0) {
          columns_[j].push_back({r, sign_[r] * p.rows[r][j]});
        }
      }
      columns_[real_ + r].push_back({r, Rational(1)});
    }
    binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    xb_.resize(m_);
    basis_.resize(m_);
    in_basis_.assign(real_ + m_, false);
    for (std::size_t r = 0; r < m_; ++r) {
      binv_[r][r] = 1;
      xb_[r] = sign_[r] * p.rhs[r];
      basis_[r] = real_ + r;
      in_basis_[real_ + r] = true;
    }
  }

  // Runs simplex iterations for `cost` (length real_ + m_). Artificial
  // columns never re-enter. Returns false if the objective is unbounded.
  bool optimise(const std::vector<Rational>& cost) {
    while (true) {
      const auto pi = multipliers(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < real_; ++j) {
        if (in_basis_[j]) continue;
        if (reduced_cost(cost, pi, j) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const auto u = direction(*entering);
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (u[r] <= 0) continue;
        Rational ratio = xb_[r] / u[r];
        if (!leave || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering, u);
    }
  }

  // After phase one, swaps zero-level artificials out of the basis where a
  // real column can replace them. Rows where none can are redundant and keep
  // their artificial at zero.
  void expel_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < real_) continue;
      for (std::size_t j = 0; j < real_; ++j) {
        if (in_basis_[j]) continue;
        auto u = direction(j);
        if (u[r] != 0) {
          pivot(r, j, u);
          break;
        }
      }
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t r = 0; r < m_; ++r) total += cost[basis_[r]] * xb_[r];
    return total;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(real_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < real_) x[basis_[r]] = xb_[r];
    }
    return x;
  }

  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    auto pi = multipliers(cost);
    for (std::size_t r = 0; r < m_; ++r) pi[r] *= sign_[r];
    return pi;
  }

  std::size_t real() const { return real_; }
  std::size_t rows() const { return m_; }

 private:
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    std::vector<Rational> pi(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[r][k] != 0) pi[k] += cb * binv_[r][k];
      }
    }
    return pi;
  }

  Rational reduced_cost(const std::vector<Rational>& cost,
                        const std::vector<Rational>& pi, std::size_t j) const {
    Rational d = cost[j];
    for (const auto& e : columns_[j]) {
      if (pi[e.row] != 0) d -= pi[e.row] * e.value;
    }
    return d;
  }

  std::vector<Rational> direction(std::size_t j) const {
    std::vector<Rational> u(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      for (const auto& e : columns_[j]) {
        if (binv_[r][e.row] != 0) u[r] += binv_[r][e.row] * e.value;
      }
    }
    return u;
  }

  void pivot(std::size_t p, std::size_t entering,
             const std::vector<Rational>& u) {
    const Rational up = u[p];
    for (auto& v : binv_[p]) {
      if (v != 0) v /= up;
    }
    xb_[p] /= up;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == p || u[r] == 0) continue;
      const Rational factor = u[r];
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[p][k] != 0) binv_[r][k] -= factor * binv_[p][k];
      }
      xb_[r] -= factor * xb_[p];
    }
    in_basis_[basis_[p]] = false;
    basis_[p] = entering;
    in_basis_[entering] = true;
  }

  std::size_t m_;
  std::size_t real_;
  std::vector<int> sign_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
};

}  // namespace

Solution minimize(const Problem& problem) {
  Tableau tableau(problem);
  const std::size_t real = tableau.real();
  const std::size_t m = tableau.rows();

  std::vector<Rational> phase_one(real + m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) phase_one[real + r] = 1;
  tableau.optimise(phase_one);

  Solution out;
  if (tableau.objective(phase_one) > 0) {
    out.status = Status::kInfeasible;
    return out;
  }
  tableau.expel_artificials();

  std::vector<Rational> cost(real + m, Rational(0));
  for (std::size_t j = 0; j < real; ++j) cost[j] = problem.cost[j];
  if (!tableau.optimise(cost)) {
    out.status = Status::kUnbounded;
    return out;
  }
  out.status = Status::kOptimal;
  out.x = tableau.primal();
  out.duals = tableau.duals(cost);
  out.objective = tableau.objective(cost);
  return out;
}

}  // namespace gately::lp
