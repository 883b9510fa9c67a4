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

#ifndef GATELY_COALITION_HPP
#define GATELY_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gately {

inline constexpr int kMaxPlayers = 16;

// A set of players 0..n-1 stored as a bitmask. Player i is bit i, so the
// integer encoding orders coalitions for enumeration.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  // Throws GameError (InvalidCoalition) for indices outside 0..kMaxPlayers-1.
  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  static Coalition singleton(int player);
  static constexpr Coalition grand(int n) {
    return Coalition(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return (mask_ >> player) & 1u;
  }
  constexpr bool is_subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // True when every member index is below n.
  constexpr bool fits(int n) const { return is_subset_of(grand(n)); }

  constexpr Coalition with(int player) const {
    return Coalition(mask_ | (1u << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~(1u << player));
  }
  constexpr Coalition complement(int n) const {
    return Coalition(grand(n).mask_ & ~mask_);
  }

  std::vector<int> members() const;

  // 1-based member list, e.g. "{1,2}"; "{}" for the empty coalition.
  std::string to_string() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint32_t mask_ = 0;
};

// All 2^n coalitions in increasing mask order, starting with the empty one.
inline std::uint32_t coalition_count(int n) { return 1u << n; }

}  // namespace gately

#endif  // GATELY_COALITION_HPP
