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

#ifndef GATELY_CLI_HPP
#define GATELY_CLI_HPP

#include <ostream>

namespace gately {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisError = 1;
inline constexpr int kExitUsageError = 2;

// Subcommands: info, value, check-core, alpha-range, dividends, dual,
// fixtures, verify. Returns the process exit code; diagnostics go to `err`
// as one line.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace gately

#endif  // GATELY_CLI_HPP
