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

#include <map>
#include <string>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"

namespace gately {

ThreePlayerCoreReport three_player_core_check(const Game& g) {
  if (g.players() != 3) {
    throw GameError(ErrorCode::kWrongPlayerCount,
                    "expected 3 players, got " + std::to_string(g.players()));
  }
  const auto cls = classify(g);
  ThreePlayerCoreReport out;
  out.semi_regular = cls.semi_regular;
  out.core_nonempty = core_nonempty(g).nonempty;

  // The Gately point is taken on semi-standard games only.
  std::optional<Imputation> point;
  if (cls.semi_standard) {
    if (sum(net_marginal_contributions(g)) != 0) {
      point = gately_value(g);
    } else if (cls.semi_regular) {
      // M = nu and v(N) = sum nu: the imputation set is the single point nu.
      point = Allocation::exact(individual_worths(g));
    }
  }
  if (point) out.gately_in_core = core_membership(g, *point).member;

  const bool forward =
      !out.semi_regular ||
      (out.core_nonempty && out.gately_in_core.value_or(false));
  const bool backward = !out.core_nonempty || out.semi_regular;
  out.implications_hold = forward && backward;
  return out;
}

KGameStructure kgame_structure(const Game& g) {
  KGameStructure out;
  out.carrier = harsanyi_dividends(g).carrier();
  if (out.carrier.empty()) return out;
  const int k = out.carrier.front().size();
  for (const auto& s : out.carrier) {
    if (s.size() != k) return out;
  }
  out.k = k;
  out.is_k_game = k >= 2 && k <= g.players() - 1 && classify(g).regular;
  return out;
}

bool check_gately_equals_shapley(const Game& g) {
  if (!classify(g).standard) {
    throw GameError(ErrorCode::kNotStandard,
                    "Gately and Shapley comparison needs a standard game");
  }
  return gately_value(g) == shapley_value(g);
}

BalancedExternalitiesReport balanced_externalities_check(const Game& g) {
  const auto structure = kgame_structure(g);
  if (!structure.is_k_game || structure.k != 2) {
    throw GameError(ErrorCode::kNotTwoGame,
                    "balanced externalities are checked on 2-games only");
  }
  const int n = g.players();
  const auto dividends = harsanyi_dividends(g);
  const auto full = gately_value(g).exact_payoffs();
  BalancedExternalitiesReport out;
  out.holds = true;
  for (int i = 0; i < n; ++i) {
    std::map<Coalition, Rational> kept;
    for (const auto& [s, d] : dividends.entries()) {
      if (!s.contains(i)) kept.emplace(s, d);
    }
    const Game reduced = from_dividends(kept, n);
    if (!classify(reduced).standard ||
        sum(net_marginal_contributions(reduced)) == 0) {
      out.skipped_players.push_back(i);
      continue;
    }
    const auto without = gately_value(reduced).exact_payoffs();
    Rational rhs = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) rhs += full[j] - without[j];
    }
    if (rhs != full[i]) out.holds = false;
  }
  return out;
}

bool check_topdominance_implications(const Game& g, double alpha) {
  const auto cls = classify(g);
  if (!cls.standard) {
    throw GameError(ErrorCode::kNotStandard,
                    "top dominance implications need a standard game");
  }
  if (!alpha_top_dominance(g, alpha).holds) return true;
  return cls.regular && cls.partitionally_superadditive;
}

}  // namespace gately
