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

#include "argsel/grounder.hpp"

#include <functional>
#include <limits>
#include <set>

namespace argsel {

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::constant) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_constants(a, out);
}

ConstantDomain collect_constants(const Program& p, const Substitution& bindings) {
  std::set<std::string> cs;
  for (const auto& r : p.rules) {
    for_each_term(r, [&](const Term& t) {
      if (t.kind == Term::Kind::constant) cs.insert(t.name);
    });
  }
  for (const auto& [var, value] : bindings) cs.insert(value);
  return ConstantDomain(std::move(cs));
}

namespace {

std::vector<std::string> free_variables(const Rule& r, const Substitution& bindings) {
  std::vector<std::string> out;
  for (auto& v : variables_of(r)) {
    if (!bindings.count(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

size_t instance_count(const Rule& r, const ConstantDomain& domain, const Substitution& bindings) {
  size_t n = 1;
  for (size_t i = 0, k = free_variables(r, bindings).size(); i < k; ++i) {
    if (domain.size() != 0 && n > std::numeric_limits<size_t>::max() / domain.size()) {
      return std::numeric_limits<size_t>::max();
    }
    n *= domain.size();
  }
  return n;
}

std::vector<Rule> ground_rule(const Rule& r, const ConstantDomain& domain, const Substitution& bindings) {
  Substitution applied;
  for (const auto& v : variables_of(r)) {
    if (auto it = bindings.find(v); it != bindings.end()) applied.emplace(v, it->second);
  }
  const Rule base = applied.empty() ? r : substitute(r, applied);
  const std::vector<std::string> vars = free_variables(r, bindings);
  if (vars.empty()) return {base};

  const std::vector<std::string> values = domain.values();
  if (values.empty()) return {};

  std::vector<Rule> out;
  std::vector<size_t> digit(vars.size(), 0);
  while (true) {
    Substitution s;
    for (size_t i = 0; i < vars.size(); ++i) s.emplace(vars[i], values[digit[i]]);
    out.push_back(substitute(base, s));
    // Last variable varies fastest, so output follows domain order per variable.
    size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < values.size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

GroundProgram ground_program(const Program& p, const Goal& query, const GroundOptions& options) {
  GroundProgram gp;
  std::set<std::string> cs;
  {
    ConstantDomain base = collect_constants(p, query.bindings);
    for (const auto& c : base.values()) cs.insert(c);
  }
  collect_constants(query.literal.atom, cs);
  for (const auto& c : options.extra_constants) cs.insert(c);
  gp.domain = ConstantDomain(std::move(cs));

  size_t total = 0;
  for (const auto& r : p.rules) {
    const size_t n = instance_count(r, gp.domain, query.bindings);
    if (n > options.max_instances || total > options.max_instances - n) {
      throw GroundingError("grounding exceeds the limit of " + std::to_string(options.max_instances) +
                           " instances (at " + to_string(r.label) + ")");
    }
    total += n;
  }

  std::set<std::string> seen;
  for (const auto& r : p.rules) {
    if (r.is_preference() && !r.body.empty()) {
      gp.warnings.push_back("body of preference " + to_string(r.label) + " is ignored");
    }
    const std::vector<std::string> vars = variables_of(r);
    for (auto& g : ground_rule(r, gp.domain, query.bindings)) {
      const std::string id = to_string(g.label);
      if (!seen.insert(id).second) throw GroundingError("ground label " + id + " produced twice");
      GroundOrigin origin{r.label, {}};
      // Recover the substitution by matching the schema label against the instance.
      Substitution s;
      for (const auto& v : vars) {
        if (auto it = query.bindings.find(v); it != query.bindings.end()) s.emplace(v, it->second);
      }
      std::function<void(const Term&, const Term&)> match = [&](const Term& schema, const Term& inst) {
        if (schema.kind == Term::Kind::variable) {
          s.emplace(schema.name, inst.name);
          return;
        }
        for (size_t i = 0; i < schema.args.size() && i < inst.args.size(); ++i) match(schema.args[i], inst.args[i]);
      };
      match(r.label, g.label);
      origin.substitution = std::move(s);
      gp.ground_rules.push_back(std::move(g));
      gp.origins.push_back(std::move(origin));
    }
  }
  return gp;
}

}  // namespace argsel
