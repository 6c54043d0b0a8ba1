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

#include "argsel/ast.hpp"

#include <algorithm>

namespace argsel {

Term Term::constant(std::string name) { return Term{Kind::constant, std::move(name), {}}; }

Term Term::variable(std::string name) { return Term{Kind::variable, std::move(name), {}}; }

Term Term::compound(std::string functor, std::vector<Term> args) {
  return Term{Kind::compound, std::move(functor), std::move(args)};
}

bool Term::is_ground() const {
  if (kind == Kind::variable || kind == Kind::binding) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::operator<(const Term& other) const {
  if (kind != other.kind) return kind < other.kind;
  if (name != other.name) return name < other.name;
  return std::lexicographical_compare(args.begin(), args.end(), other.args.begin(), other.args.end());
}

StatementKind Rule::kind() const {
  if (is_preference()) return StatementKind::preference;
  if (body.empty() && head_literal().is_ground()) return StatementKind::fact;
  return StatementKind::rule;
}

bool Rule::is_ground() const {
  if (!label.is_ground()) return false;
  if (is_preference()) {
    const auto& p = head_preference();
    if (!p.stronger.is_ground() || !p.weaker.is_ground()) return false;
  } else if (!head_literal().is_ground()) {
    return false;
  }
  return std::all_of(body.begin(), body.end(), [](const Literal& l) { return l.is_ground(); });
}

Term substitute(const Term& t, const Substitution& s) {
  if (t.kind == Term::Kind::variable) {
    auto it = s.find(t.name);
    return it == s.end() ? t : Term::constant(it->second);
  }
  Term out{t.kind, t.name, {}};
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, s));
  return out;
}

Literal substitute(const Literal& l, const Substitution& s) { return {l.negative, substitute(l.atom, s)}; }

Rule substitute(const Rule& r, const Substitution& s) {
  Rule out;
  out.label = substitute(r.label, s);
  if (r.is_preference()) {
    const auto& p = r.head_preference();
    out.head = PreferenceAtom{substitute(p.stronger, s), substitute(p.weaker, s)};
  } else {
    out.head = substitute(r.head_literal(), s);
  }
  out.body.reserve(r.body.size());
  for (const auto& l : r.body) out.body.push_back(substitute(l, s));
  out.span = r.span;
  return out;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::variable) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) collect_variables(a, out);
}

std::vector<std::string> variables_of(const Rule& r) {
  std::vector<std::string> vars;
  for_each_term(r, [&](const Term& t) {
    if (t.kind == Term::Kind::variable && std::find(vars.begin(), vars.end(), t.name) == vars.end()) {
      vars.push_back(t.name);
    }
  });
  return vars;
}

namespace {

void visit(const Term& t, const std::function<void(const Term&)>& fn) {
  fn(t);
  for (const auto& a : t.args) visit(a, fn);
}

}  // namespace

void for_each_term(const Rule& r, const std::function<void(const Term&)>& fn) {
  visit(r.label, fn);
  if (r.is_preference()) {
    visit(r.head_preference().stronger, fn);
    visit(r.head_preference().weaker, fn);
  } else {
    visit(r.head_literal().atom, fn);
  }
  for (const auto& l : r.body) visit(l.atom, fn);
}

}  // namespace argsel
