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

// Arguments, attacks and preference resolution.
//
// An argument is one ground rule instance (or one fact), identified by its
// ground label. A rule instance is not generated when a fact states the
// complement of one of its body literals; otherwise body literals without a
// supporting fact are carried as assumptions.
//
// Two arguments with complementary conclusions rebut each other (an edge in
// each direction). An argument whose conclusion is the complement of another
// argument's premise undermines it (one edge). Preferences orient rebuttals:
// the edge from the strictly weaker top rule is removed. Facts are strictly
// stronger than every rule.

#ifndef ARGSEL_FRAMEWORK_HPP
#define ARGSEL_FRAMEWORK_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "argsel/ast.hpp"
#include "argsel/grounder.hpp"

namespace argsel {

enum class ArgumentKind { fact, rule };

struct Argument {
  std::string id;
  std::optional<Literal> conclusion;  // absent for abstract arguments
  std::vector<Literal> premises;
  // Label of the fact supporting each premise, or nullopt when assumed.
  std::vector<std::optional<std::string>> premise_support;
  ArgumentKind kind = ArgumentKind::rule;

  bool operator==(const Argument&) const = default;
};

// `attack` is used by abstract frameworks, where edges carry no conclusions;
// preferences orient them like rebuttals.
enum class EdgeKind { rebuttal, undermining, attack };

struct AttackEdge {
  std::string attacker;
  std::string target;
  EdgeKind kind = EdgeKind::attack;
  std::optional<std::string> resolved_by;

  bool operator==(const AttackEdge&) const = default;
};

bool edge_less(const AttackEdge& a, const AttackEdge& b);

struct PreferencePair {
  std::string stronger;
  std::string weaker;
  std::string label;

  bool operator==(const PreferencePair&) const = default;
};

class PreferenceCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict preference over argument ids, transitively closed on construction.
/// Mutually preferred pairs are dropped (recorded in warnings()); any longer
/// cycle throws PreferenceCycleError.
class PreferenceRelation {
 public:
  PreferenceRelation() = default;
  explicit PreferenceRelation(std::vector<PreferencePair> declared);

  /// Label justifying stronger > weaker, if the closure contains that pair.
  std::optional<std::string> prefers(const std::string& stronger, const std::string& weaker) const;

  const std::vector<PreferencePair>& declared() const { return declared_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<PreferencePair> declared_;
  std::map<std::pair<std::string, std::string>, std::string> closure_;
  std::vector<std::string> warnings_;
};

enum class PreferenceAction { kept, flipped, dropped };

struct PreferenceDecision {
  AttackEdge original;
  PreferenceAction action = PreferenceAction::kept;
  std::string label;
};

struct PreferenceOutcome {
  std::vector<AttackEdge> edges;
  std::vector<PreferenceDecision> decisions;
};

struct ArgumentationFramework {
  std::vector<Argument> arguments;              // sorted by id
  std::vector<AttackEdge> initial_attacks;      // before preferences
  std::vector<AttackEdge> attacks;              // after preferences, sorted
  std::vector<PreferencePair> preferences;
  std::vector<PreferenceDecision> decisions;
  std::vector<std::string> warnings;

  const Argument* find(const std::string& id) const;
  std::vector<std::string> ids() const;
};

std::vector<Argument> build_candidate_arguments(const GroundProgram& gp);

std::vector<AttackEdge> compute_attacks(std::span<const Argument> args);

/// Orients edges by preference. `args` supplies argument kinds so that facts
/// outrank rules; ids absent from `args` are treated as rules.
PreferenceOutcome apply_preferences(std::span<const AttackEdge> edges, const PreferenceRelation& pr,
                                    std::span<const Argument> args = {});

/// Ground preference pairs contributed by `prefer` statements.
std::vector<PreferencePair> ground_preferences(const GroundProgram& gp);

/// Candidate arguments, attacks and preferences restricted to the part of the
/// graph relevant to `query`: arguments concluding the query or its
/// complement, closed under incoming attacks and under rule arguments that
/// conclude a premise of a member.
ArgumentationFramework build_framework(const GroundProgram& gp, const Literal& query);

/// Framework from abstract arguments, edges and preferences.
ArgumentationFramework make_abstract_framework(std::vector<std::string> ids, std::vector<AttackEdge> attacks,
                                               std::vector<PreferencePair> preferences);

}  // namespace argsel

#endif  // ARGSEL_FRAMEWORK_HPP
