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

// Abstract framework files (.af), one directive per line:
//
//   arg <id>
//   att <attacker> <target>
//   pref <stronger> <weaker> [label]
//
// Blank lines and lines starting with '#' or '%' are ignored. Ids are any
// run of non-blank characters.

#ifndef ARGSEL_AF_FORMAT_HPP
#define ARGSEL_AF_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "argsel/framework.hpp"

namespace argsel {

struct AbstractInput {
  std::vector<std::string> arguments;
  std::vector<AttackEdge> attacks;
  std::vector<PreferencePair> preferences;
};

/// Throws ParseError on unknown directives, wrong arity or undeclared ids.
AbstractInput parse_af(std::string_view text, const std::string& origin);
AbstractInput parse_af_file(const std::string& path);

ArgumentationFramework make_abstract_framework(const AbstractInput& input);

std::string print_af(const AbstractInput& input);

}  // namespace argsel

#endif  // ARGSEL_AF_FORMAT_HPP
