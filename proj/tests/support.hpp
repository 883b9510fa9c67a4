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

#ifndef GATELY_TESTS_SUPPORT_HPP
#define GATELY_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gately/coalition.hpp"
#include "gately/game.hpp"
#include "gately/generators.hpp"
#include "gately/rational.hpp"

namespace gately::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

// Coalition from 1-based player numbers.
inline Coalition c1(std::initializer_list<int> players) {
  std::vector<int> zero_based;
  for (int p : players) zero_based.push_back(p - 1);
  return Coalition::of(zero_based);
}

inline const Game& fixture(const std::string& name) {
  static const auto all = builtin_fixtures();
  return all.at(name).game;
}

// Average marginal contribution over all n! orders.
inline std::vector<Rational> shapley_by_permutations(const Game& g) {
  const int n = g.players();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> phi(n, Rational(0));
  long count = 0;
  do {
    std::uint32_t mask = 0;
    for (int i : order) {
      const Rational before = g.worth(Coalition(mask));
      mask |= 1u << i;
      phi[i] += g.worth(Coalition(mask)) - before;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& p : phi) p /= count;
  return phi;
}

// Delta_S = sum_{T subset S} (-1)^{|S|-|T|} v(T), one coalition at a time.
inline Rational dividend_by_inclusion_exclusion(const Game& g, Coalition s) {
  Rational total = 0;
  const std::uint32_t m = s.mask();
  for (std::uint32_t t = m;; t = (t - 1) & m) {
    const bool odd = (std::popcount(m) - std::popcount(t)) % 2 != 0;
    if (odd) {
      total -= g.worth(Coalition(t));
    } else {
      total += g.worth(Coalition(t));
    }
    if (t == 0) break;
  }
  return total;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline std::vector<double> doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(r.get_d());
  return out;
}

}  // namespace gately::testing

#endif  // GATELY_TESTS_SUPPORT_HPP
