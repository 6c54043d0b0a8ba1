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

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "argsel/kb.hpp"

namespace argsel {

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::constant:
    case Term::Kind::variable:
      return t.name;
    case Term::Kind::binding:
      return t.name + " = " + to_string(t.args.front());
    case Term::Kind::compound:
      break;
  }
  std::string out = t.name;
  if (t.args.empty()) return out;
  out += '(';
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(t.args[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const Literal& l) {
  return l.negative ? "neg(" + to_string(l.atom) + ")" : to_string(l.atom);
}

std::string to_string(const Rule& r) {
  std::string out = "rule(" + to_string(r.label) + ", ";
  if (r.is_preference()) {
    const auto& p = r.head_preference();
    out += "prefer(" + to_string(p.stronger) + ", " + to_string(p.weaker) + ")";
  } else {
    out += to_string(r.head_literal());
  }
  out += ", [";
  for (size_t i = 0; i < r.body.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(r.body[i]);
  }
  out += "]).";
  return out;
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

bool ValidationReport::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const Diagnostic& d) { return d.severity == Severity::error; });
}

namespace {

std::vector<Diagnostic> with_severity(const std::vector<Diagnostic>& ds, Severity s) {
  std::vector<Diagnostic> out;
  std::copy_if(ds.begin(), ds.end(), std::back_inserter(out),
               [s](const Diagnostic& d) { return d.severity == s; });
  return out;
}

std::string where(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.col);
}

struct Unifier {
  std::map<std::string, Term> bound;

  Term walk(Term t) const {
    while (t.kind == Term::Kind::variable) {
      auto it = bound.find(t.name);
      if (it == bound.end()) break;
      t = it->second;
    }
    return t;
  }

  bool unify(const Term& x, const Term& y) {
    Term a = walk(x);
    Term b = walk(y);
    if (a.kind == Term::Kind::variable && b.kind == Term::Kind::variable && a.name == b.name) return true;
    if (a.kind == Term::Kind::variable) {
      bound[a.name] = b;
      return true;
    }
    if (b.kind == Term::Kind::variable) {
      bound[b.name] = a;
      return true;
    }
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (!unify(a.args[i], b.args[i])) return false;
    }
    return true;
  }
};

Term rename_apart(const Term& t, const std::string& prefix) {
  if (t.kind == Term::Kind::variable) return Term::variable(prefix + t.name);
  Term out{t.kind, t.name, {}};
  for (const auto& a : t.args) out.args.push_back(rename_apart(a, prefix));
  return out;
}

std::string node_key(const Term& label) {
  return label.args.empty() ? label.name : label.name + "/" + std::to_string(label.args.size());
}

// Tarjan's strongly connected components over the name-level preference graph.
std::vector<std::vector<std::string>> strongly_connected(const std::map<std::string, std::set<std::string>>& g) {
  std::map<std::string, int> index;
  std::map<std::string, int> low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> out;
  int counter = 0;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    if (auto it = g.find(v); it != g.end()) {
      for (const auto& w : it->second) {
        if (!index.count(w)) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> comp;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (const auto& [v, _] : g) {
    if (!index.count(v)) visit(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Diagnostic> ValidationReport::errors() const { return with_severity(diagnostics, Severity::error); }
std::vector<Diagnostic> ValidationReport::warnings() const {
  return with_severity(diagnostics, Severity::warning);
}
std::vector<Diagnostic> ValidationReport::infos() const { return with_severity(diagnostics, Severity::info); }

bool labels_unify(const Term& a, const Term& b) {
  Unifier u;
  return u.unify(rename_apart(a, "1#"), rename_apart(b, "2#"));
}

StatementCounts count_statements(const Program& p) {
  StatementCounts c;
  for (const auto& r : p.rules) {
    switch (r.kind()) {
      case StatementKind::rule: ++c.rules; break;
      case StatementKind::preference: ++c.preferences; break;
      case StatementKind::fact: ++c.facts; break;
    }
  }
  return c;
}

ValidationReport validate_program(const Program& p) {
  ValidationReport report;
  report.counts = count_statements(p);
  auto& diags = report.diagnostics;

  for (size_t i = 0; i < p.rules.size(); ++i) {
    for (size_t j = i + 1; j < p.rules.size(); ++j) {
      const Rule& a = p.rules[i];
      const Rule& b = p.rules[j];
      if (!labels_unify(a.label, b.label)) continue;
      diags.push_back({Severity::error, "E_DUP_LABEL",
                       "duplicate rule label " + to_string(b.label) + " (also declared at " + where(a.span) +
                           " as " + to_string(a.label) + ")",
                       b.span});
    }
  }

  std::set<std::string> declared;
  for (const auto& r : p.rules) {
    if (!r.is_preference()) declared.insert(node_key(r.label));
  }

  std::map<std::string, std::set<std::string>> graph;
  std::map<std::pair<std::string, std::string>, SourceSpan> edge_span;

  for (const auto& r : p.rules) {
    std::vector<std::string> label_vars;
    collect_variables(r.label, label_vars);
    std::vector<std::string> head_vars;
    std::vector<std::string> body_vars;
    if (r.is_preference()) {
      collect_variables(r.head_preference().stronger, head_vars);
      collect_variables(r.head_preference().weaker, head_vars);
    } else {
      collect_variables(r.head_literal().atom, head_vars);
    }
    for (const auto& l : r.body) collect_variables(l.atom, body_vars);

    auto in = [](const std::vector<std::string>& vs, const std::string& v) {
      return std::find(vs.begin(), vs.end(), v) != vs.end();
    };
    for (const auto& v : variables_of(r)) {
      if (!in(label_vars, v)) {
        diags.push_back({Severity::error, "E_UNLABELLED_VAR",
                         "variable " + v + " of " + to_string(r.label) + " does not occur in the rule label",
                         r.span});
      }
    }
    for (const auto& v : head_vars) {
      if (!in(body_vars, v)) {
        diags.push_back({Severity::info, "I_HEAD_ONLY_VAR",
                         "head variable " + v + " of " + to_string(r.label) +
                             " is not bound by the body; grounded over all constants",
                         r.span});
      }
    }

    if (!r.is_preference()) continue;
    const auto& pref = r.head_preference();
    if (!r.body.empty()) {
      diags.push_back({Severity::warning, "W_PREF_BODY_IGNORED",
                       "body of preference " + to_string(r.label) + " is ignored", r.span});
    }
    bool known = true;
    for (const Term* side : {&pref.stronger, &pref.weaker}) {
      if (!declared.count(node_key(*side))) {
        known = false;
        diags.push_back({Severity::error, "E_UNDECLARED_LABEL",
                         "preference " + to_string(r.label) + " references undeclared rule " + node_key(*side),
                         r.span});
      }
    }
    if (known) {
      const std::string s = node_key(pref.stronger);
      const std::string w = node_key(pref.weaker);
      graph[s].insert(w);
      graph[w];
      edge_span.emplace(std::make_pair(s, w), r.span);
    }
  }

  // Mutual pairs carry no strict preference; drop them before looking for cycles.
  std::set<std::pair<std::string, std::string>> mutual;
  for (const auto& [s, ws] : graph) {
    for (const auto& w : ws) {
      if (s < w && graph[w].count(s)) mutual.insert({s, w});
    }
  }
  for (const auto& [a, b] : mutual) {
    diags.push_back({Severity::warning, "W_MUTUAL_PREFERENCE", "no strict preference between " + a + ", " + b,
                     edge_span[{b, a}]});
    graph[a].erase(b);
    graph[b].erase(a);
  }
  for (const auto& comp : strongly_connected(graph)) {
    const bool self_loop = comp.size() == 1 && graph[comp.front()].count(comp.front());
    if (comp.size() < 2 && !self_loop) continue;
    std::string members;
    for (const auto& m : comp) members += (members.empty() ? "" : ", ") + m;
    SourceSpan span;
    for (const auto& [edge, sp] : edge_span) {
      if (std::find(comp.begin(), comp.end(), edge.first) != comp.end() &&
          std::find(comp.begin(), comp.end(), edge.second) != comp.end()) {
        span = sp;
        break;
      }
    }
    diags.push_back({Severity::error, "E_PREFERENCE_CYCLE", "preference cycle among " + members, span});
  }
  return report;
}

std::variant<Program, ValidationReport> merge_programs(const std::vector<Program>& ps) {
  Program merged;
  ValidationReport report;
  std::vector<std::pair<size_t, const Rule*>> seen;
  for (size_t i = 0; i < ps.size(); ++i) {
    for (const auto& r : ps[i].rules) {
      for (const auto& [owner, other] : seen) {
        if (owner == i || !labels_unify(other->label, r.label)) continue;
        report.diagnostics.push_back({Severity::error, "E_DUP_LABEL",
                                      "duplicate rule label " + to_string(r.label) + " at " + where(r.span) +
                                          " and " + where(other->span),
                                      r.span});
      }
    }
    for (const auto& r : ps[i].rules) seen.emplace_back(i, &r);
    merged.rules.insert(merged.rules.end(), ps[i].rules.begin(), ps[i].rules.end());
    merged.provenance.insert(merged.provenance.end(), ps[i].provenance.begin(), ps[i].provenance.end());
  }
  if (!report.ok()) {
    report.counts = count_statements(merged);
    return report;
  }
  return merged;
}

std::string to_json(const ValidationReport& r) {
  using nlohmann::ordered_json;
  auto entries = [](const std::vector<Diagnostic>& ds) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : ds) {
      arr.push_back({{"code", d.code},
                     {"message", d.message},
                     {"file", d.span.file},
                     {"line", d.span.line},
                     {"col", d.span.col}});
    }
    return arr;
  };
  ordered_json j;
  j["errors"] = entries(r.errors());
  j["warnings"] = entries(r.warnings());
  j["info"] = entries(r.infos());
  j["counts"] = {{"rules", r.counts.rules}, {"preferences", r.counts.preferences}, {"facts", r.counts.facts}};
  return j.dump(2) + "\n";
}

}  // namespace argsel
