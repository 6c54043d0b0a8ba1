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

// Syntax tree for the rule language: terms, literals, labelled rules and
// programs. All types are plain values; equality is structural and ignores
// source positions.

#ifndef ARGSEL_AST_HPP
#define ARGSEL_AST_HPP

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace argsel {

struct SourceSpan {
  std::string file;
  int line = 0;
  int col = 0;
};

struct Term {
  // `binding` (X = c) only exists between lexing and normalization: name holds
  // the variable, args[0] the constant.
  enum class Kind { constant, variable, compound, binding };

  Kind kind = Kind::constant;
  std::string name;
  std::vector<Term> args;

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args = {});

  bool is_ground() const;
  bool operator==(const Term&) const = default;
  bool operator<(const Term& other) const;
};

/// Positive atom `p(...)` or strongly negated `neg(p(...))`.
struct Literal {
  bool negative = false;
  Term atom;

  Literal complement() const { return {!negative, atom}; }
  bool is_ground() const { return atom.is_ground(); }
  bool operator==(const Literal&) const = default;
  bool operator<(const Literal& other) const {
    return negative != other.negative ? negative < other.negative : atom < other.atom;
  }
};

struct PreferenceAtom {
  Term stronger;
  Term weaker;
  bool operator==(const PreferenceAtom&) const = default;
};

using Head = std::variant<Literal, PreferenceAtom>;

enum class StatementKind { rule, preference, fact };

struct Rule {
  Term label;
  Head head;
  std::vector<Literal> body;
  SourceSpan span;

  bool is_preference() const { return std::holds_alternative<PreferenceAtom>(head); }
  const Literal& head_literal() const { return std::get<Literal>(head); }
  const PreferenceAtom& head_preference() const { return std::get<PreferenceAtom>(head); }
  StatementKind kind() const;
  bool is_ground() const;

  // Structural; source spans are not compared.
  bool operator==(const Rule& other) const {
    return label == other.label && head == other.head && body == other.body;
  }
};

struct Program {
  std::vector<Rule> rules;
  std::vector<std::string> provenance;

  bool operator==(const Program& other) const { return rules == other.rules; }
};

using Substitution = std::map<std::string, std::string>;

/// Applies a variable-to-constant substitution. Unbound variables are kept.
Term substitute(const Term& t, const Substitution& s);
Literal substitute(const Literal& l, const Substitution& s);
Rule substitute(const Rule& r, const Substitution& s);

/// Distinct variable names in first-occurrence order (label, head, body).
std::vector<std::string> variables_of(const Rule& r);
void collect_variables(const Term& t, std::vector<std::string>& out);

/// Visits every term node, depth first.
void for_each_term(const Rule& r, const std::function<void(const Term&)>& fn);

}  // namespace argsel

#endif  // ARGSEL_AST_HPP
