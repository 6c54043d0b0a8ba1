// Copyright 2026 The Argsel Authors
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

#ifndef ARGSEL_CLI_HPP
#define ARGSEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace argsel {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int rejected = 1;  // query not accepted, or selection fell back to the default
inline constexpr int parse_error = 2;
inline constexpr int validation_error = 3;
inline constexpr int usage_error = 4;
}  // namespace exit_code

/// Runs one invocation. `args` excludes the program name. `color` enables ANSI
/// colouring of trace output (the caller decides, e.g. from isatty/NO_COLOR).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace argsel

#endif  // ARGSEL_CLI_HPP
