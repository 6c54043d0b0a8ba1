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

#include "argsel/selector.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "argsel/grounder.hpp"

namespace argsel {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_error(const ValidationReport& r) {
  const auto errors = r.errors();
  return errors.empty() ? std::string("invalid knowledge base") : errors.front().message;
}

bool is_predicate_name(const std::string& s) { return is_valid_name(s) && s != "neg" && s != "prefer" && s != "rule"; }

Term use_atom(const std::string& explainer) { return Term::compound("use", {Term::constant(explainer)}); }

}  // namespace

InvalidKnowledgeBase::InvalidKnowledgeBase(ValidationReport report)
    : std::runtime_error(first_error(report)), report_(std::move(report)) {}

const char* to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::recommended: return "recommended";
    case CandidateStatus::undecided: return "undecided";
    case CandidateStatus::conflicted: return "conflicted";
    case CandidateStatus::rejected: return "rejected";
  }
  return "undecided";
}

std::vector<Rule> facts_from_profile(const ExplainerProfile& p) {
  ValidationReport bad;
  const SourceSpan span{"profile:" + p.name, 0, 0};
  if (!is_predicate_name(p.name)) {
    bad.diagnostics.push_back({Severity::error, "E_INVALID_NAME", "invalid explainer name '" + p.name + "'", span});
  }
  for (const auto& [attr, value] : p.attributes) {
    if (!is_predicate_name(attr)) {
      bad.diagnostics.push_back(
          {Severity::error, "E_INVALID_NAME", "invalid attribute name '" + attr + "' in profile " + p.name, span});
    }
  }
  if (!bad.ok()) throw InvalidKnowledgeBase(std::move(bad));

  std::vector<Rule> out;
  for (const auto& [attr, value] : p.attributes) {
    if (value == Truth::unknown) continue;
    Rule r;
    r.label = Term::compound(p.name + "_" + attr);
    r.head = Literal{value == Truth::no, Term::compound(attr, {Term::constant(p.name)})};
    r.span = span;
    out.push_back(std::move(r));
  }
  out.insert(out.end(), p.extra_statements.begin(), p.extra_statements.end());
  return out;
}

ExplainerProfile parse_profile_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SelectionError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw SelectionError(origin + ": profile needs a string 'name'");
  }
  ExplainerProfile p;
  p.name = j["name"].get<std::string>();
  if (j.contains("attributes")) {
    if (!j["attributes"].is_object()) throw SelectionError(origin + ": 'attributes' must be an object");
    for (const auto& [key, value] : j["attributes"].items()) {
      if (value.is_boolean()) {
        p.attributes[key] = value.get<bool>() ? Truth::yes : Truth::no;
      } else if (value.is_string() && value.get<std::string>() == "unknown") {
        p.attributes[key] = Truth::unknown;
      } else {
        throw SelectionError(origin + ": attribute '" + key + "' must be true, false or \"unknown\"");
      }
    }
  }
  if (j.contains("extra")) {
    if (!j["extra"].is_string()) throw SelectionError(origin + ": 'extra' must be a string of statements");
    p.extra_statements = parse_program(j["extra"].get<std::string>(), origin + "#extra").rules;
  }
  return p;
}

ExplainerProfile load_profile(const std::string& path) { return parse_profile_json(read_file(path), path); }

std::vector<ExplainerProfile> load_profile_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw SelectionError("profile directory not found: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    const std::string suffix = ".profile.json";
    if (entry.is_regular_file() && name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<ExplainerProfile> out;
  for (const auto& p : paths) out.push_back(load_profile(p));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

StakeholderModel parse_stakeholder_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SelectionError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw SelectionError(origin + ": stakeholder model must be an object");
  StakeholderModel m;
  if (j.contains("rules")) {
    if (!j["rules"].is_string()) throw SelectionError(origin + ": 'rules' must be a string of statements");
    m.requirement_rules = parse_program(j["rules"].get<std::string>(), origin + "#rules").rules;
  }
  if (j.contains("preferences")) {
    for (const auto& pair : j["preferences"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw SelectionError(origin + ": each preference must be [stronger, weaker]");
      }
      m.preference_statements.push_back(
          {parse_label(pair[0].get<std::string>()), parse_label(pair[1].get<std::string>())});
    }
  }
  if (!j.contains("default_explainer") || !j["default_explainer"].is_string()) {
    throw SelectionError(origin + ": stakeholder model needs a string 'default_explainer'");
  }
  m.default_explainer = j["default_explainer"].get<std::string>();
  return m;
}

StakeholderModel load_stakeholder(const std::string& path) { return parse_stakeholder_json(read_file(path), path); }

Program compile_selection_kb(const Program& kb, const std::vector<ExplainerProfile>& profiles,
                             const StakeholderModel& model) {
  Program explainers;
  explainers.provenance.push_back("<profiles>");
  for (const auto& p : profiles) {
    auto facts = facts_from_profile(p);
    explainers.rules.insert(explainers.rules.end(), facts.begin(), facts.end());
  }

  Program stakeholder;
  stakeholder.provenance.push_back("<stakeholder>");
  stakeholder.rules = model.requirement_rules;

  std::map<std::string, std::set<size_t>> arities;
  for (const Program* p : std::initializer_list<const Program*>{&kb, &explainers, &stakeholder}) {
    for (const auto& r : p->rules) {
      if (!r.is_preference()) arities[r.label.name].insert(r.label.args.size());
    }
  }
  auto declared_arity = [&](const Term& t) -> size_t {
    auto it = arities.find(t.name);
    return (it != arities.end() && it->second.size() == 1) ? *it->second.begin() : t.args.size();
  };

  for (size_t i = 0; i < model.preference_statements.size(); ++i) {
    PreferenceAtom pref = model.preference_statements[i];
    if (pref.stronger.args.empty() && pref.weaker.args.empty()) {
      const size_t n = declared_arity(pref.stronger);
      if (n > 0 && declared_arity(pref.weaker) == n) {
        for (size_t k = 0; k < n; ++k) {
          const Term v = Term::variable("X" + std::to_string(k + 1));
          pref.stronger.args.push_back(v);
          pref.weaker.args.push_back(v);
        }
      }
    }
    std::vector<std::string> vars;
    collect_variables(pref.stronger, vars);
    collect_variables(pref.weaker, vars);
    std::vector<Term> params;
    for (const auto& v : vars) params.push_back(Term::variable(v));
    Rule r;
    r.label = Term::compound("stakeholder_pref" + std::to_string(i + 1), std::move(params));
    r.head = std::move(pref);
    r.span = {"<stakeholder>", 0, 0};
    stakeholder.rules.push_back(std::move(r));
  }

  auto merged = merge_programs({kb, explainers, stakeholder});
  if (auto* report = std::get_if<ValidationReport>(&merged)) throw InvalidKnowledgeBase(*report);
  Program program = std::get<Program>(std::move(merged));
  ValidationReport report = validate_program(program);
  if (!report.ok()) throw InvalidKnowledgeBase(std::move(report));
  return program;
}

QueryRun run_query(const GroundProgram& gp, const Literal& goal, Semantics semantics) {
  QueryRun run;
  run.framework = build_framework(gp, goal);
  const auto mode = semantics == Semantics::preferred ? AcceptanceMode::credulous : AcceptanceMode::skeptical;
  run.verdict = accept(run.framework, goal, mode, semantics);
  return run;
}

SelectionReport select_explainer(const Program& kb, const std::vector<std::string>& candidates,
                                 const StakeholderModel& model, const std::vector<ExplainerProfile>& profiles,
                                 const SelectionOptions& options) {
  if (candidates.empty()) throw SelectionError("no candidate explainers given");
  std::set<std::string> registered;
  for (const auto& p : profiles) registered.insert(p.name);
  auto require = [&](const std::string& name, const char* role) {
    if (registered.count(name)) return;
    std::string names;
    for (const auto& r : registered) names += (names.empty() ? "" : ", ") + r;
    throw SelectionError(std::string("unknown ") + role + " '" + name + "'; registered profiles: " +
                         (names.empty() ? "(none)" : names));
  };
  for (const auto& c : candidates) require(c, "candidate");
  require(model.default_explainer, "default explainer");

  const Program program = compile_selection_kb(kb, profiles, model);
  GroundOptions opts = options.grounding;
  opts.extra_constants.insert(opts.extra_constants.end(), candidates.begin(), candidates.end());
  const GroundProgram gp = ground_program(program, Goal{Literal{false, use_atom(candidates.front())}, {}}, opts);

  SelectionReport report;
  for (const auto& name : candidates) {
    CandidateResult c;
    c.name = name;
    const Literal use{false, use_atom(name)};
    c.use = run_query(gp, use, options.semantics);
    c.neg_use = run_query(gp, use.complement(), options.semantics);
    const bool yes = c.use.verdict.accepted;
    const bool no = c.neg_use.verdict.accepted;
    c.status = yes && !no   ? CandidateStatus::recommended
               : !yes && no ? CandidateStatus::rejected
               : yes && no  ? CandidateStatus::conflicted
                            : CandidateStatus::undecided;
    report.candidates.push_back(std::move(c));
  }

  std::vector<size_t> order(report.candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return static_cast<int>(report.candidates[a].status) < static_cast<int>(report.candidates[b].status);
  });
  for (size_t i : order) report.ranking.push_back(report.candidates[i].name);

  const auto& best = report.candidates[order.front()];
  if (best.status == CandidateStatus::recommended) {
    report.chosen = best.name;
  } else {
    report.chosen = model.default_explainer;
    report.fallback_used = true;
  }
  return report;
}

}  // namespace argsel
