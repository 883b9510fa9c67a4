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

#include "gately/coalition.hpp"

#include "gately/errors.hpp"

namespace gately {

Coalition Coalition::singleton(int player) {
  if (player < 0 || player >= kMaxPlayers) {
    throw GameError(ErrorCode::kInvalidCoalition,
                    "player index " + std::to_string(player) + " out of range");
  }
  return Coalition(1u << player);
}

Coalition Coalition::of(std::initializer_list<int> players) {
  Coalition c;
  for (int p : players) c = c | singleton(p);
  return c;
}

Coalition Coalition::of(const std::vector<int>& players) {
  Coalition c;
  for (int p : players) c = c | singleton(p);
  return c;
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string Coalition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : members()) {
    if (!first) out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace gately
