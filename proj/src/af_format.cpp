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

#include "argsel/af_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "argsel/kb.hpp"

namespace argsel {

AbstractInput parse_af(std::string_view text, const std::string& origin) {
  AbstractInput input;
  std::set<std::string> declared;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string tok; words >> tok;) w.push_back(tok);
    if (w.empty() || w[0][0] == '#' || w[0][0] == '%') continue;

    const SourceSpan at{origin, lineno, 1};
    auto need_declared = [&](const std::string& id) {
      if (!declared.count(id)) throw ParseError(at, {"declared argument"}, "'" + id + "'");
    };
    if (w[0] == "arg") {
      if (w.size() != 2) throw ParseError(at, {"arg <id>"}, "'" + line + "'");
      if (declared.insert(w[1]).second) input.arguments.push_back(w[1]);
    } else if (w[0] == "att") {
      if (w.size() != 3) throw ParseError(at, {"att <attacker> <target>"}, "'" + line + "'");
      need_declared(w[1]);
      need_declared(w[2]);
      input.attacks.push_back({w[1], w[2], EdgeKind::attack, std::nullopt});
    } else if (w[0] == "pref") {
      if (w.size() != 3 && w.size() != 4) throw ParseError(at, {"pref <stronger> <weaker> [label]"}, "'" + line + "'");
      need_declared(w[1]);
      need_declared(w[2]);
      std::string label = w.size() == 4 ? w[3] : w[1] + ">" + w[2];
      input.preferences.push_back({w[1], w[2], std::move(label)});
    } else {
      throw ParseError(at, {"'arg'", "'att'", "'pref'"}, "'" + w[0] + "'");
    }
  }
  return input;
}

AbstractInput parse_af_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_af(buf.str(), path);
}

ArgumentationFramework make_abstract_framework(const AbstractInput& input) {
  return make_abstract_framework(input.arguments, input.attacks, input.preferences);
}

std::string print_af(const AbstractInput& input) {
  std::string out;
  for (const auto& a : input.arguments) out += "arg " + a + "\n";
  for (const auto& e : input.attacks) out += "att " + e.attacker + " " + e.target + "\n";
  for (const auto& p : input.preferences) out += "pref " + p.stronger + " " + p.weaker + " " + p.label + "\n";
  return out;
}

}  // namespace argsel
