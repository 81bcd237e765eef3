// Copyright 2026 The wigzero Authors
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

#ifndef WIGZERO_TOOLS_CLI_HPP
#define WIGZERO_TOOLS_CLI_HPP

#include <ostream>
#include <string>

#include "wigzero/phase_space.hpp"

namespace wigzero::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Parses the command line and runs one subcommand. Artifacts go to --out when
/// given, otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads and validates a state JSON file. Throws io::ParseError.
HermiteState load_state(const std::string& path, bool renormalize = false);

}  // namespace wigzero::cli

#endif  // WIGZERO_TOOLS_CLI_HPP
