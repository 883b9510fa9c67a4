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

#ifndef GATELY_ERRORS_HPP
#define GATELY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gately {

enum class ErrorCode {
  // Construction and input validation.
  kTooManyPlayers,
  kInvalidGame,
  kInvalidCoalition,
  kEmptyCoalition,
  kBadCoalition,
  kInvalidParameter,
  // Domain restrictions of value maps and checkers.
  kNotStandard,
  kNotSemiStandard,
  kNotRegular,
  kNonImputation,
  kBetaZeroDegenerate,
  kEmptyImputationSet,
  kWrongPlayerCount,
  kNotTwoGame,
  kTargetUnreachable,
  // Game documents.
  kParseError,
  kUnknownLabel,
  kDuplicateCoalition,
  kMissingGrandCoalition,
};

// Stable identifier used in reports and diagnostics, e.g. "NotStandard".
std::string_view error_name(ErrorCode code);

// True for codes that describe malformed input rather than a failed analysis.
bool is_input_error(ErrorCode code);

class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gately

#endif  // GATELY_ERRORS_HPP
