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

// Explainer selection: compiles explainer profiles and a stakeholder model
// into the knowledge base, then asks both use(e) and neg(use(e)) for every
// candidate explainer e.

#ifndef ARGSEL_SELECTOR_HPP
#define ARGSEL_SELECTOR_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "argsel/framework.hpp"
#include "argsel/kb.hpp"
#include "argsel/solver.hpp"

namespace argsel {

enum class Truth { yes, no, unknown };

struct ExplainerProfile {
  std::string name;
  std::map<std::string, Truth> attributes;
  std::vector<Rule> extra_statements;
};

struct StakeholderModel {
  std::vector<Rule> requirement_rules;
  std::vector<PreferenceAtom> preference_statements;
  std::string default_explainer;
};

class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validation failed while assembling the selection knowledge base.
class InvalidKnowledgeBase : public std::runtime_error {
 public:
  explicit InvalidKnowledgeBase(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

enum class CandidateStatus { recommended, undecided, conflicted, rejected };

const char* to_string(CandidateStatus s);

struct QueryRun {
  ArgumentationFramework framework;
  QueryVerdict verdict;
};

struct CandidateResult {
  std::string name;
  CandidateStatus status = CandidateStatus::undecided;
  QueryRun use;
  QueryRun neg_use;
};

struct SelectionReport {
  std::vector<CandidateResult> candidates;  // input order
  std::vector<std::string> ranking;         // best first
  std::string chosen;
  bool fallback_used = false;
};

/// true -> `attr(name)`, false -> `neg(attr(name))`, unknown -> nothing;
/// attributes in name order, then the extra statements verbatim.
std::vector<Rule> facts_from_profile(const ExplainerProfile& p);

/// `{name, attributes: {pred: true|false|"unknown"}, extra: "<gkb>"}`
ExplainerProfile parse_profile_json(const std::string& text, const std::string& origin);
ExplainerProfile load_profile(const std::string& path);

/// Every `*.profile.json` in `dir`, sorted by profile name.
std::vector<ExplainerProfile> load_profile_dir(const std::string& dir);

/// `{rules: "<gkb>", preferences: [["r2","r1"], ...], default_explainer: "<name>"}`
StakeholderModel parse_stakeholder_json(const std::string& text, const std::string& origin);
StakeholderModel load_stakeholder(const std::string& path);

/// The knowledge base a selection reasons over: kb, then facts of every
/// registered profile, then stakeholder rules and preferences.
Program compile_selection_kb(const Program& kb, const std::vector<ExplainerProfile>& profiles,
                             const StakeholderModel& model);

struct SelectionOptions {
  GroundOptions grounding;
  // grounded, or preferred for credulous acceptance over preferred extensions
  // (the only setting under which a candidate can come out conflicted).
  Semantics semantics = Semantics::grounded;
};

SelectionReport select_explainer(const Program& kb, const std::vector<std::string>& candidates,
                                 const StakeholderModel& model, const std::vector<ExplainerProfile>& profiles,
                                 const SelectionOptions& options = {});

/// Builds and solves the framework for one goal.
QueryRun run_query(const GroundProgram& gp, const Literal& goal, Semantics semantics = Semantics::grounded);

}  // namespace argsel

#endif  // ARGSEL_SELECTOR_HPP
