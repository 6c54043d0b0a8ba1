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

// Instantiation of rule schemas over the finite set of constants that occur
// in a program. Variables are grounded over the whole domain, including
// variables that only occur in a rule head.

#ifndef ARGSEL_GROUNDER_HPP
#define ARGSEL_GROUNDER_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argsel/ast.hpp"
#include "argsel/kb.hpp"

namespace argsel {

class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexicographically ordered constants.
class ConstantDomain {
 public:
  ConstantDomain() = default;
  explicit ConstantDomain(std::set<std::string> constants) : constants_(std::move(constants)) {}

  void insert(const std::string& c) { constants_.insert(c); }
  bool contains(const std::string& c) const { return constants_.count(c) > 0; }
  size_t size() const { return constants_.size(); }
  std::vector<std::string> values() const { return {constants_.begin(), constants_.end()}; }

  bool operator==(const ConstantDomain&) const = default;

 private:
  std::set<std::string> constants_;
};

struct GroundOrigin {
  Term schema_label;
  Substitution substitution;
};

struct GroundProgram {
  std::vector<Rule> ground_rules;
  std::vector<GroundOrigin> origins;  // parallel to ground_rules
  ConstantDomain domain;
  std::vector<std::string> warnings;
};

struct GroundOptions {
  size_t max_instances = 100000;
  std::vector<std::string> extra_constants;
};

void collect_constants(const Term& t, std::set<std::string>& out);
ConstantDomain collect_constants(const Program& p, const Substitution& bindings);

/// Ground instances of `r`; enumeration is odometer-style over the rule's
/// free variables in first-occurrence order, each ranging over `domain`.
std::vector<Rule> ground_rule(const Rule& r, const ConstantDomain& domain, const Substitution& bindings);

/// Number of instances ground_rule would produce, saturating at SIZE_MAX.
size_t instance_count(const Rule& r, const ConstantDomain& domain, const Substitution& bindings);

GroundProgram ground_program(const Program& p, const Goal& query, const GroundOptions& options = {});

}  // namespace argsel

#endif  // ARGSEL_GROUNDER_HPP
