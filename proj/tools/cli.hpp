// Copyright 2026 The msqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MSQSP_TOOLS_CLI_HPP
#define MSQSP_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msqsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitSynthesisFailed = 2;
inline constexpr int kExitUsage = 64;

/// Parses "0.3", "pi", "-pi", "pi/2", "3pi/4", "3*pi/4", "-2.5pi". Returns
/// nullopt for anything else.
std::optional<double> parse_angle(std::string_view text);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msqsp::cli

#endif  // MSQSP_TOOLS_CLI_HPP
