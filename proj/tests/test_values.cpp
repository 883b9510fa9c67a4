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

#include <cmath>

#include "gately/errors.hpp"
#include "gately/generators.hpp"
#include "gately/values.hpp"
#include "support.hpp"

using namespace gately;
using namespace gately::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code();
  }
  FAIL("expected a GameError");
  return ErrorCode::kParseError;
}

std::vector<Rational> exact(const Allocation& a) { return a.exact_payoffs(); }

}  // namespace

TEST_CASE("Gately values of the worked examples") {
  CHECK(exact(gately_value(fixture("trade"))) == qs({"7/3", "2/3", "0"}));
  CHECK(exact(gately_value(fixture("emptycore3"))) ==
        qs({"13/3", "5/6", "5/6"}));
  CHECK(exact(gately_value(fixture("fourplayer_core_miss"))) ==
        qs({"24/7", "24/7", "18/7", "18/7"}));
  CHECK(exact(gately_value(fixture("fiveplayer_unanimity"))) ==
        qs({"4/11", "4/11", "12/11", "12/11", "12/11"}));
  CHECK(exact(gately_value(fixture("singleton_core3"))) == qs({"2", "3", "4"}));
  CHECK(exact(gately_value(fixture("topdom_nonsuper3"))) ==
        qs({"1/5", "2/5", "2/5"}));
}

TEST_CASE("four-player variant with smaller triple worths") {
  // Triples v(123)=v(124)=5, v(134)=v(234)=4 give M = (8,8,7,7) instead
  // of (4,4,3,3); the Shapley value is the same either way.
  std::vector<Rational> w(16, Rational(0));
  for (auto s : {c1({1, 3}), c1({1, 4}), c1({2, 3}), c1({2, 4}), c1({3, 4})}) {
    w[s.mask()] = 1;
  }
  w[c1({1, 2}).mask()] = 8;
  w[c1({1, 2, 3}).mask()] = 5;
  w[c1({1, 2, 4}).mask()] = 5;
  w[c1({1, 3, 4}).mask()] = 4;
  w[c1({2, 3, 4}).mask()] = 4;
  w[15] = 12;
  const Game variant(4, w);
  CHECK(marginal_contributions(variant) == qs({"8", "8", "7", "7"}));
  CHECK(exact(gately_value(variant)) == qs({"16/5", "16/5", "14/5", "14/5"}));
  CHECK(exact(shapley_value(variant)) == qs({"15/4", "15/4", "9/4", "9/4"}));
}

TEST_CASE("Shapley values of the worked examples") {
  CHECK(exact(shapley_value(fixture("trade"))) == qs({"13/6", "2/3", "1/6"}));
  CHECK(exact(shapley_value(fixture("emptycore3"))) ==
        qs({"7/3", "11/6", "11/6"}));
  CHECK(exact(shapley_value(fixture("fourplayer_core_miss"))) ==
        qs({"15/4", "15/4", "9/4", "9/4"}));
  CHECK(exact(shapley_value(fixture("fiveplayer_unanimity"))) ==
        qs({"1/2", "1/2", "1", "1", "1"}));
}

TEST_CASE("Shapley value matches the permutation average") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Game g = generate({seed, n, 9, ClassTarget::kAny});
    CHECK(exact(shapley_value(g)) == shapley_by_permutations(g));
  }
}

TEST_CASE("Gately value is the surplus split by net contributions") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const Game g = generate({seed, n, 10, ClassTarget::kRegular});
    const auto x = exact(gately_value(g));
    CHECK(sum(x) == g.worth(g.grand()));
    // Balance: every player with a positive base has the same propensity.
    std::optional<Rational> common;
    for (int i = 0; i < n; ++i) {
      const auto d = propensity_player(g, x, i);
      if (d.is_indeterminate()) continue;
      REQUIRE(d.is_finite());
      if (!common) common = d.value;
      CHECK(d.value == *common);
    }
  }
}

TEST_CASE("alpha-Gately values") {
  const Game& trade = fixture("trade");
  CHECK(alpha_gately_value(trade, 1.0) == gately_value(trade));
  // b = (2,1,0): weights 4 and 1 at alpha = 2.
  CHECK(exact(alpha_gately_value(trade, 2.0)) == qs({"13/5", "2/5", "0"}));
  CHECK(alpha_gately_value_exact(trade, 2) == alpha_gately_value(trade, 2.0));
  const auto half = alpha_gately_value(trade, 0.5);
  CHECK_FALSE(half.is_exact());
  const double r2 = std::sqrt(2.0);
  CHECK(half[0] == doctest::Approx(1 + 2 * r2 / (r2 + 1)).epsilon(1e-14));
  CHECK(half[2] == 0.0);

  // Float mode agrees with exact mode next to an integer exponent.
  const Game g = generate({7, 5, 10, ClassTarget::kRegular});
  const auto e = alpha_gately_value(g, 3.0);
  const auto f = alpha_gately_value(g, 3.0 + 1e-12);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(f[i] == doctest::Approx(e[i]).epsilon(1e-9));
  }
  // Huge exponents stay finite.
  const auto big = alpha_gately_value(g, 1e7 + 0.5);
  for (std::size_t i = 0; i < big.size(); ++i) CHECK(std::isfinite(big[i]));
}

TEST_CASE("alpha limits") {
  const Game& trade = fixture("trade");
  CHECK(exact(alpha_limit_value(trade, AlphaLimit::kZero)) ==
        qs({"2", "1", "0"}));
  CHECK(exact(alpha_limit_value(trade, AlphaLimit::kInfinity)) ==
        qs({"3", "0", "0"}));
  const Game& a = fixture("singleton_core3");
  CHECK(exact(alpha_limit_value(a, AlphaLimit::kZero)) == qs({"3", "3", "3"}));
  CHECK(exact(alpha_limit_value(a, AlphaLimit::kInfinity)) ==
        qs({"0", "0", "9"}));

  // Convergence: distance to the limit shrinks with alpha.
  const auto zero = doubles(exact(alpha_limit_value(a, AlphaLimit::kZero)));
  double prev = 1e9;
  for (double alpha : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    const double d = max_abs_diff(alpha_gately_value(a, alpha).approx_payoffs(),
                                  zero);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-5);
  const auto inf = doubles(exact(alpha_limit_value(a, AlphaLimit::kInfinity)));
  CHECK(max_abs_diff(alpha_gately_value(a, 1e4).approx_payoffs(), inf) < 1e-12);
  CHECK(max_abs_diff(alpha_gately_value(trade, 1e4).approx_payoffs(),
                     {3, 0, 0}) < 1e-12);
}

TEST_CASE("dual alpha-Gately value") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Game g = generate({seed, 3 + static_cast<int>(seed % 3), 10,
                             ClassTarget::kRegular});
    CHECK(dual_alpha_gately(g, 1) == gately_value(g));
    // Both routes are cross-checked inside; exercise a higher power.
    const auto x = exact(dual_alpha_gately(g, 2));
    CHECK(sum(x) == g.worth(g.grand()));
  }
  CHECK(code_of([] { dual_alpha_gately(fixture("trade"), 0); }) ==
        ErrorCode::kInvalidParameter);
  CHECK(code_of([] { dual_alpha_gately(fixture("emptycore3"), 1); }) ==
        ErrorCode::kNotSemiStandard);
}

TEST_CASE("compromise form") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Game g = generate({seed, 4, 10, ClassTarget::kZeroNormalisedRegular});
    const auto m = marginal_contributions(g);
    const Rational gamma = compromise_coefficient(g);
    CHECK(gamma == g.worth(g.grand()) / sum(m));
    const auto x = exact(gately_value(g));
    for (int i = 0; i < 4; ++i) CHECK(x[i] == gamma * m[i]);
  }
  CHECK(compromise_coefficient(fixture("trade")) == Rational(2, 3));
}

TEST_CASE("equal division") {
  CHECK(exact(equal_division(fixture("trade"))) == qs({"1", "1", "1"}));
  CHECK(exact(equal_division(fixture("fourplayer_core_miss"))) ==
        qs({"3", "3", "3", "3"}));
}

TEST_CASE("propensities to disrupt") {
  const Game& trade = fixture("trade");
  const auto x = qs({"7/3", "2/3", "0"});
  const auto ds = propensity_player(trade, x, 0);
  CHECK(ds.is_finite());
  CHECK(ds.value == Rational(1, 2));
  CHECK(propensity_player(trade, x, 1).value == Rational(1, 2));
  CHECK(propensity_player(trade, x, 2).is_indeterminate());
  CHECK(propensity_coalition(trade, x, c1({1})).value == Rational(1, 2));
  CHECK(propensity_coalition(trade, x, c1({1, 2})).is_indeterminate());
  // Zero gain inside S while the rest is short of its worth.
  CHECK(propensity_coalition(trade, qs({"1", "1", "0"}), c1({3})).kind ==
        ExtendedKind::kMinusInfinity);
  CHECK(propensity_coalition(trade, qs({"1", "2", "0"}), c1({1})).kind ==
        ExtendedKind::kPlusInfinity);
  CHECK(propensity_player(trade, qs({"1", "2", "0"}), 0).is_plus_infinity());
  CHECK(code_of([&] { propensity_coalition(trade, x, Coalition()); }) ==
        ErrorCode::kBadCoalition);
  CHECK(code_of([&] { propensity_coalition(trade, x, trade.grand()); }) ==
        ErrorCode::kBadCoalition);

  const std::vector<double> xd{7.0 / 3, 2.0 / 3, 0.0};
  const auto dd = propensity_player(trade, std::span<const double>(xd), 0);
  CHECK(dd.value == doctest::Approx(0.5));
}

TEST_CASE("generalised propensities") {
  const Game& trade = fixture("trade");
  const std::vector<double> x{7.0 / 3, 2.0 / 3, 0.0};
  const auto r0 = generalized_propensity(trade, x, 0, 1.0);
  CHECK(r0.value == doctest::Approx(1.5));
  CHECK(generalized_propensity(trade, x, 1, 1.0).value == doctest::Approx(1.5));
  CHECK(generalized_propensity(trade, x, 2, 1.0) == ExtendedReal::finite(0.0));
  CHECK(generalized_propensity(trade, std::vector<double>{1, 2, 0}, 0, 2.0)
            .is_plus_infinity());
  CHECK(code_of([&] {
          generalized_propensity(trade, std::vector<double>{0, 3, 0}, 0, 1.0);
        }) == ErrorCode::kNonImputation);
  CHECK(code_of([&] { generalized_propensity(trade, x, 0, 0.0); }) ==
        ErrorCode::kInvalidParameter);
  CHECK(code_of([&] { generalized_propensity(trade, x, 0, -1.0); }) ==
        ErrorCode::kInvalidParameter);
  const auto exact_rho = generalized_propensity(trade, qs({"7/3", "2/3", "0"}), 1, 2ul);
  CHECK(exact_rho.value == Rational(9, 4));
  const auto profile = propensity_profile(trade, x, 1.0);
  CHECK(profile.entries.size() == 3);
  CHECK(profile.beta == 1.0);

  // At g^alpha every player with a positive base shares one rho^(1/alpha).
  const Game g = generate({11, 4, 10, ClassTarget::kRegular});
  for (double alpha : {0.5, 2.0, 3.0}) {
    const auto xa = alpha_gately_value(g, alpha).approx_payoffs();
    const auto net = net_marginal_contributions(g);
    std::optional<double> common;
    for (int i = 0; i < 4; ++i) {
      if (net[i] == 0) continue;
      const auto r = generalized_propensity(g, xa, i, 1.0 / alpha);
      REQUIRE(r.is_finite());
      if (!common) common = r.value;
      CHECK(r.value == doctest::Approx(*common).epsilon(1e-9));
    }
  }
}

TEST_CASE("games without a unique Gately point") {
  const Game& cont = fixture("continuum3");
  CHECK(code_of([&] { gately_value(cont); }) == ErrorCode::kNotStandard);
  CHECK(code_of([&] { alpha_gately_value(cont, 1.0); }) ==
        ErrorCode::kNotSemiStandard);
  // The reported continuum (t, 3, 2 - t) balances players 1 and 3.
  for (const char* t : {"0", "1/2", "1", "3/2"}) {
    const Rational tt = parse_rational(t);
    const std::vector<Rational> x{tt, Rational(3), Rational(2 - tt)};
    CHECK(sum(x) == cont.worth(cont.grand()));
    const auto d1 = propensity_player(cont, x, 0);
    const auto d3 = propensity_player(cont, x, 2);
    REQUIRE(d1.is_finite());
    REQUIRE(d3.is_finite());
    CHECK(d1.value == d3.value);
  }
  const Game zero(3);
  CHECK(code_of([&] { gately_value(zero); }) == ErrorCode::kNotStandard);
  CHECK(code_of([&] { alpha_gately_value(zero, 2.0); }) ==
        ErrorCode::kNotStandard);
  CHECK(code_of([&] { alpha_gately_value(fixture("trade"), 0.0); }) ==
        ErrorCode::kInvalidParameter);
  CHECK(code_of([&] { alpha_gately_value(fixture("trade"), NAN); }) ==
        ErrorCode::kInvalidParameter);
  CHECK(code_of([&] { compromise_coefficient(cont); }) ==
        ErrorCode::kNotSemiStandard);
}

TEST_CASE("allocation modes") {
  const auto e = Allocation::exact(qs({"1/2", "1/2"}));
  CHECK(e.is_exact());
  CHECK(e[0] == 0.5);
  CHECK(e.approx_payoffs() == std::vector<double>{0.5, 0.5});
  const auto a = Allocation::approx({0.25, 0.75});
  CHECK(a.mode() == NumericMode::kApprox);
  CHECK_THROWS_AS((void)a.exact_payoffs(), std::logic_error);
}
