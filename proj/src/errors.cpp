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

#include "gately/errors.hpp"

namespace gately {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
    case ErrorCode::kInvalidGame: return "InvalidGame";
    case ErrorCode::kInvalidCoalition: return "InvalidCoalition";
    case ErrorCode::kEmptyCoalition: return "EmptyCoalition";
    case ErrorCode::kBadCoalition: return "BadCoalition";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kNotStandard: return "NotStandard";
    case ErrorCode::kNotSemiStandard: return "NotSemiStandard";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kNonImputation: return "NonImputation";
    case ErrorCode::kBetaZeroDegenerate: return "BetaZeroDegenerate";
    case ErrorCode::kEmptyImputationSet: return "EmptyImputationSet";
    case ErrorCode::kWrongPlayerCount: return "WrongPlayerCount";
    case ErrorCode::kNotTwoGame: return "NotTwoGame";
    case ErrorCode::kTargetUnreachable: return "TargetUnreachable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateCoalition: return "DuplicateCoalition";
    case ErrorCode::kMissingGrandCoalition: return "MissingGrandCoalition";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooManyPlayers:
    case ErrorCode::kInvalidGame:
    case ErrorCode::kInvalidCoalition:
    case ErrorCode::kInvalidParameter:
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kDuplicateCoalition:
    case ErrorCode::kMissingGrandCoalition:
      return true;
    default:
      return false;
  }
}

}  // namespace gately
