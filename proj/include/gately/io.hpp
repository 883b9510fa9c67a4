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

#ifndef GATELY_IO_HPP
#define GATELY_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gately/errors.hpp"
#include "gately/game.hpp"
#include "gately/values.hpp"

namespace gately {

struct GameDocument {
  std::string name;
  std::string description;
  // Player labels in document order; label i is player index i.
  std::vector<std::string> labels;
  Game game{2};
};

// {"name": ..., "description": ..., "players": [...],
//  "worths": {"S,B1": 3, "S": "7/2", ...}}
// Omitted coalitions are worth 0; the grand coalition must be listed.
// Throws GameError (ParseError, UnknownLabel, DuplicateCoalition,
// MissingGrandCoalition, TooManyPlayers, InvalidCoalition, InvalidGame).
GameDocument parse_game(std::string_view text);
GameDocument read_game_file(const std::filesystem::path& path);

// Nonzero worths plus the grand coalition; integers as JSON numbers, other
// rationals as "p/q" strings.
std::string serialise_game(const GameDocument& doc);
void write_game_file(const std::filesystem::path& path, const GameDocument& doc);

// "{S,B1}" using the document labels.
std::string coalition_label(const GameDocument& doc, Coalition s);

enum class ReportFormat { kText, kJson };

ReportFormat parse_report_format(std::string_view text);

// Analyses by name: classify, dividends, gately, alpha-gately, dual-gately,
// shapley, nucleolus, equal, core, compromise. alpha-gately and dual-gately
// read `alpha` (default 1).
struct ReportRequest {
  std::vector<std::string> analyses;
  std::optional<double> alpha;
};

inline const std::vector<std::string>& known_analyses() {
  static const std::vector<std::string> names = {
      "classify", "dividends", "gately",     "alpha-gately", "dual-gately",
      "shapley",  "nucleolus", "equal",      "core",         "compromise"};
  return names;
}

struct Report {
  std::string document;
  // First analysis failure, in request order. Failures are also written
  // into the document.
  std::optional<GameError> first_error;
};

// Deterministic field order. Throws GameError (InvalidParameter) for an
// unknown analysis name.
Report emit_report(const GameDocument& doc, const ReportRequest& request,
                   ReportFormat format);

// "S: 7/3 (2.33333333333)" per player; float entries read "S: 2.5 (approx)".
std::string allocation_text(const GameDocument& doc, const Allocation& x);

// Exact value as "p/q" plus its 12-significant-digit decimal.
std::string rational_text(const Rational& r);

}  // namespace gately

#endif  // GATELY_IO_HPP
