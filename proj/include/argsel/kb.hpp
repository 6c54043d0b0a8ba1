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

// Knowledge-base files (.gkb): parsing, canonical printing, validation and
// merging.
//
// Grammar:
//   program   := { statement }
//   statement := "rule(" label "," head "," body ")" "."
//   head      := literal | "prefer(" label "," label ")"
//   body      := "[" [ literal { "," literal } ] "]"
//   literal   := atom | "neg(" atom ")"
//   term      := Variable [ "=" constant ] | name [ "(" term { "," term } ")" ]
//
// `%` starts a comment running to end of line. `X = c` substitutes c for X
// throughout the enclosing statement and is removed from the tree.

#ifndef ARGSEL_KB_HPP
#define ARGSEL_KB_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argsel/ast.hpp"

namespace argsel {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan where, std::vector<std::string> expected, std::string found);

  const SourceSpan& where() const { return where_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan where_;
  std::vector<std::string> expected_;
  std::string found_;
};

Program parse_program(std::string_view source, const std::string& origin);
Program parse_program_file(const std::string& path);

/// A query literal as typed on the command line, e.g. `neg(use(X=lime))`.
struct Goal {
  Literal literal;
  Substitution bindings;
};

Goal parse_goal(std::string_view text);

/// Single term in label position, e.g. `r2(X)` (used by stakeholder files).
Term parse_label(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);

/// One statement per line, each terminated by '\n'.
std::string print_program(const Program& p);

bool is_valid_name(std::string_view s);
bool is_valid_variable(std::string_view s);

enum class Severity { info, warning, error };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  SourceSpan span;
};

struct StatementCounts {
  int rules = 0;
  int preferences = 0;
  int facts = 0;
  bool operator==(const StatementCounts&) const = default;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  StatementCounts counts;

  bool ok() const;
  std::vector<Diagnostic> errors() const;
  std::vector<Diagnostic> warnings() const;
  std::vector<Diagnostic> infos() const;
};

StatementCounts count_statements(const Program& p);
ValidationReport validate_program(const Program& p);

/// Concatenates programs; cross-file duplicate labels produce a report.
std::variant<Program, ValidationReport> merge_programs(const std::vector<Program>& ps);

/// {errors:[...], warnings:[...], info:[...], counts:{rules,preferences,facts}}
std::string to_json(const ValidationReport& r);

/// True when two labels could denote the same ground label.
bool labels_unify(const Term& a, const Term& b);

}  // namespace argsel

#endif  // ARGSEL_KB_HPP
