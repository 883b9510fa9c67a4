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

#ifndef GATELY_LP_HPP
#define GATELY_LP_HPP

#include <vector>

#include "gately/rational.hpp"

namespace gately::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

// minimize cost . x  subject to  rows * x = rhs,  x >= 0.
struct Problem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;
};

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<Rational> x;
  // Row multipliers y with cost - rows^T y >= 0 at the optimum.
  std::vector<Rational> duals;
  Rational objective;
};

// Two-phase revised simplex over exact rationals. Bland's rule picks the
// lowest-index improving column and breaks ratio ties by the lowest basic
// index, so the method terminates on degenerate problems.
Solution minimize(const Problem& problem);

}  // namespace gately::lp

#endif  // GATELY_LP_HPP
