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

#include "argsel/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "argsel/kb.hpp"

namespace argsel {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string set_of(const std::vector<std::string>& items) { return "{" + join(items) + "}"; }

std::string edge_text(const AttackEdge& e) { return "(" + e.attacker + ", " + e.target + ")"; }

std::vector<std::string> edges_text(const std::vector<AttackEdge>& edges) {
  std::vector<std::string> out;
  for (const auto& e : edges) out.push_back(edge_text(e));
  return out;
}

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::rebuttal: return "rebuttal";
    case EdgeKind::undermining: return "undermining";
    case EdgeKind::attack: return "attack";
  }
  return "attack";
}

std::string describe(const Argument& a) {
  std::string out = a.id;
  if (!a.conclusion) return out;
  out += ": " + to_string(*a.conclusion);
  if (a.kind == ArgumentKind::fact) return out + " [fact]";
  out += " <- ";
  std::vector<std::string> premises;
  for (size_t i = 0; i < a.premises.size(); ++i) {
    const auto& support = a.premise_support[i];
    premises.push_back(to_string(a.premises[i]) + (support ? " [fact " + *support + "]" : " [assumed]"));
  }
  return out + join(premises);
}

std::string paint(Label l, bool color) {
  const std::string text = to_string(l);
  if (!color) return text;
  switch (l) {
    case Label::in: return "\033[32m" + text + "\033[0m";
    case Label::out: return "\033[31m" + text + "\033[0m";
    case Label::undec: return "\033[90m" + text + "\033[0m";
  }
  return text;
}

std::string step_text(const LabelStep& s, size_t number, bool color) {
  std::string out = "step " + std::to_string(number) + ": " + s.argument + " " + paint(s.label, color) + " (";
  if (s.label == Label::in) {
    out += s.justification.empty() ? "unattacked" : "attackers " + join(s.justification) + " are OUT";
  } else {
    out += "attacked by IN " + join(s.justification);
  }
  return out + ")";
}

std::string quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

ordered_json framework_json(const ArgumentationFramework& af) {
  ordered_json args = ordered_json::array();
  for (const auto& a : af.arguments) {
    ordered_json arg;
    arg["id"] = a.id;
    arg["kind"] = a.kind == ArgumentKind::fact ? "fact" : "rule";
    arg["conclusion"] = a.conclusion ? ordered_json(to_string(*a.conclusion)) : ordered_json(nullptr);
    ordered_json premises = ordered_json::array();
    for (size_t i = 0; i < a.premises.size(); ++i) {
      premises.push_back({{"literal", to_string(a.premises[i])},
                          {"support", a.premise_support[i] ? ordered_json(*a.premise_support[i]) : ordered_json("assumed")}});
    }
    arg["premises"] = std::move(premises);
    args.push_back(std::move(arg));
  }
  auto edges = [](const std::vector<AttackEdge>& es) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : es) {
      arr.push_back({{"attacker", e.attacker},
                     {"target", e.target},
                     {"kind", kind_name(e.kind)},
                     {"resolved_by", e.resolved_by ? ordered_json(*e.resolved_by) : ordered_json(nullptr)}});
    }
    return arr;
  };
  ordered_json prefs = ordered_json::array();
  for (const auto& p : af.preferences) {
    prefs.push_back({{"stronger", p.stronger}, {"weaker", p.weaker}, {"label", p.label}});
  }
  ordered_json decisions = ordered_json::array();
  for (const auto& d : af.decisions) {
    const char* action = d.action == PreferenceAction::flipped   ? "flipped"
                         : d.action == PreferenceAction::dropped ? "dropped"
                                                                 : "kept";
    decisions.push_back({{"attacker", d.original.attacker},
                         {"target", d.original.target},
                         {"action", action},
                         {"by", d.label}});
  }
  ordered_json j;
  j["arguments"] = std::move(args);
  j["attacks"] = edges(af.attacks);
  j["initial_attacks"] = edges(af.initial_attacks);
  j["preferences"] = std::move(prefs);
  j["preference_decisions"] = std::move(decisions);
  return j;
}

ordered_json labelling_json(const Labelling& l) {
  ordered_json j = ordered_json::object();
  for (const auto& [id, label] : l.assignment) j[id] = to_string(label);
  return j;
}

ordered_json verdict_json(const QueryVerdict& v) {
  ordered_json j;
  j["query"] = v.query;
  j["accepted"] = v.accepted;
  j["supporting_arguments"] = v.supporting_arguments;
  j["position"] = v.labelling.with(Label::in);
  return j;
}

ordered_json trace_json(const TraceDocument& doc) {
  ordered_json phases = ordered_json::array();
  for (const auto& p : doc.phases) phases.push_back({{"title", p.title}, {"lines", p.lines}});
  return {{"phases", std::move(phases)}};
}

std::string finish(ordered_json j, const JsonOptions& options) {
  if (options.timing_ms) j["timing"] = {{"total_ms", *options.timing_ms}};
  return j.dump(2) + "\n";
}

}  // namespace

TraceDocument build_trace(const ArgumentationFramework& af, const Labelling& labelling, const QueryVerdict& verdict) {
  TraceDocument doc;
  doc.query = verdict.query;
  doc.accepted = verdict.accepted;
  doc.supporting_arguments = verdict.supporting_arguments;
  doc.steps = labelling.steps;
  doc.position = labelling.with(Label::in);
  std::copy_if(af.decisions.begin(), af.decisions.end(), std::back_inserter(doc.preference_changes),
               [](const PreferenceDecision& d) { return d.action != PreferenceAction::kept; });

  TracePhase construction{"framework", {}};
  construction.lines.push_back("Ar = " + set_of(af.ids()));
  for (const auto& a : af.arguments) {
    if (a.conclusion) construction.lines.push_back("  " + describe(a));
  }
  construction.lines.push_back("R = " + set_of(edges_text(af.initial_attacks)));
  std::vector<std::string> prefs;
  for (const auto& p : af.preferences) prefs.push_back(p.stronger + " > " + p.weaker + " (" + p.label + ")");
  construction.lines.push_back("Pr = " + set_of(prefs));

  TracePhase preferences{"preferences", {}};
  for (const auto& d : doc.preference_changes) {
    if (d.action == PreferenceAction::flipped) {
      preferences.lines.push_back("flip " + edge_text(d.original) + " -> (" + d.original.target + ", " +
                                  d.original.attacker + ") by " + d.label);
    } else {
      preferences.lines.push_back("drop " + edge_text(d.original) + " by " + d.label);
    }
  }
  preferences.lines.push_back("R = " + set_of(edges_text(af.attacks)));

  // Step lines are rendered without colour here; render_trace re-renders them.
  TracePhase steps{"labelling", {}};
  for (size_t i = 0; i < doc.steps.size(); ++i) steps.lines.push_back(step_text(doc.steps[i], i + 1, false));
  if (const auto undec = labelling.with(Label::undec); !undec.empty()) {
    steps.lines.push_back("UNDEC " + set_of(undec));
  }

  TracePhase result{"result", {}};
  std::string verdict_line = "query " + doc.query + ": ";
  verdict_line += doc.accepted ? "accepted (supported by " + join(doc.supporting_arguments) + ")" : "not accepted";
  result.lines.push_back(std::move(verdict_line));
  result.lines.push_back("position " + set_of(doc.position));

  doc.phases = {std::move(construction), std::move(preferences), std::move(steps), std::move(result)};
  return doc;
}

std::string render_trace(const TraceDocument& doc, bool color) {
  std::string out;
  for (size_t p = 0; p < doc.phases.size(); ++p) {
    const auto& phase = doc.phases[p];
    out += "[" + std::to_string(p + 1) + "] " + phase.title + "\n";
    for (size_t i = 0; i < phase.lines.size(); ++i) {
      const bool step_line = phase.title == "labelling" && i < doc.steps.size();
      out += "  " + (step_line && color ? step_text(doc.steps[i], i + 1, true) : phase.lines[i]) + "\n";
    }
  }
  return out;
}

std::string to_dot(const ArgumentationFramework& af, const Labelling& labelling) {
  std::string out = "digraph argumentation {\n";
  out += "  node [style=filled];\n";
  for (const auto& a : af.arguments) {
    auto it = labelling.assignment.find(a.id);
    const Label l = it == labelling.assignment.end() ? Label::undec : it->second;
    const char* fill = l == Label::in ? "green" : l == Label::out ? "red" : "gray";
    out += "  " + quote(a.id) + " [fillcolor=" + fill;
    if (a.kind == ArgumentKind::fact) out += ", shape=box";
    out += "];\n";
  }
  for (const auto& e : af.attacks) {
    auto it = labelling.assignment.find(e.attacker);
    const bool source_out = it != labelling.assignment.end() && it->second == Label::out;
    out += "  " + quote(e.attacker) + " -> " + quote(e.target) + " [style=" + (source_out ? "dotted" : "solid") +
           "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const QueryReport& report, const JsonOptions& options) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["inputs"] = {{"kb_files", report.kb_files}, {"query", report.query}};
  j["framework"] = framework_json(report.framework);
  j["labelling"] = labelling_json(report.verdict.labelling);
  ordered_json verdicts = ordered_json::array();
  if (!report.query.empty()) verdicts.push_back(verdict_json(report.verdict));
  j["verdicts"] = std::move(verdicts);
  j["chosen"] = nullptr;
  j["fallback_used"] = false;
  j["trace"] = trace_json(build_trace(report.framework, report.verdict.labelling, report.verdict));
  return finish(std::move(j), options);
}

std::string to_json(const SelectionReport& report, const std::vector<std::string>& kb_files,
                    const JsonOptions& options) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  std::vector<std::string> names;
  for (const auto& c : report.candidates) names.push_back(c.name);
  j["inputs"] = {{"kb_files", kb_files}, {"candidates", names}};
  j["framework"] = {{"arguments", ordered_json::array()},
                    {"attacks", ordered_json::array()},
                    {"preferences", ordered_json::array()}};
  j["labelling"] = ordered_json::object();
  ordered_json verdicts = ordered_json::array();
  for (const auto& c : report.candidates) {
    auto run_json = [](const QueryRun& run) {
      ordered_json r = verdict_json(run.verdict);
      r["framework"] = framework_json(run.framework);
      r["labelling"] = labelling_json(run.verdict.labelling);
      r["trace"] = trace_json(build_trace(run.framework, run.verdict.labelling, run.verdict));
      return r;
    };
    ordered_json v;
    v["candidate"] = c.name;
    v["status"] = to_string(c.status);
    v["use"] = run_json(c.use);
    v["neg_use"] = run_json(c.neg_use);
    verdicts.push_back(std::move(v));
  }
  j["verdicts"] = std::move(verdicts);
  j["ranking"] = report.ranking;
  j["chosen"] = report.chosen.empty() ? ordered_json(nullptr) : ordered_json(report.chosen);
  j["fallback_used"] = report.fallback_used;
  return finish(std::move(j), options);
}

std::string to_json(const TraceDocument& doc) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["query"] = doc.query;
  j["accepted"] = doc.accepted;
  j["position"] = doc.position;
  j["trace"] = trace_json(doc);
  return j.dump(2) + "\n";
}

}  // namespace argsel
