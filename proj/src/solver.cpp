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

#include "argsel/solver.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "argsel/kb.hpp"

namespace argsel {

const char* to_string(Label l) {
  switch (l) {
    case Label::in: return "IN";
    case Label::out: return "OUT";
    case Label::undec: return "UNDEC";
  }
  return "UNDEC";
}

std::vector<std::string> Labelling::with(Label l) const {
  std::vector<std::string> out;
  for (const auto& [id, label] : assignment) {
    if (label == l) out.push_back(id);
  }
  return out;
}

namespace {

// Dense view of a framework: argument i in framework order, attacker lists by index.
struct Graph {
  std::vector<std::string> ids;
  std::unordered_map<std::string, size_t> index;
  std::vector<std::vector<size_t>> attackers;

  explicit Graph(const ArgumentationFramework& af) {
    ids.reserve(af.arguments.size());
    for (const auto& a : af.arguments) {
      index.emplace(a.id, ids.size());
      ids.push_back(a.id);
    }
    attackers.resize(ids.size());
    for (const auto& e : af.attacks) {
      auto from = index.find(e.attacker);
      auto to = index.find(e.target);
      if (from == index.end() || to == index.end()) continue;
      auto& list = attackers[to->second];
      if (std::find(list.begin(), list.end(), from->second) == list.end()) list.push_back(from->second);
    }
  }

  std::vector<bool> mask(const std::vector<std::string>& s) const {
    std::vector<bool> m(ids.size(), false);
    for (const auto& id : s) {
      if (auto it = index.find(id); it != index.end()) m[it->second] = true;
    }
    return m;
  }

  bool conflict_free(const std::vector<bool>& in) const {
    for (size_t t = 0; t < ids.size(); ++t) {
      if (!in[t]) continue;
      for (size_t a : attackers[t]) {
        if (in[a]) return false;
      }
    }
    return true;
  }

  bool admissible(const std::vector<bool>& in) const {
    if (!conflict_free(in)) return false;
    for (size_t t = 0; t < ids.size(); ++t) {
      if (!in[t]) continue;
      for (size_t b : attackers[t]) {
        const bool defended =
            std::any_of(attackers[b].begin(), attackers[b].end(), [&](size_t c) { return in[c]; });
        if (!defended) return false;
      }
    }
    return true;
  }
};

}  // namespace

Labelling grounded_labelling(const ArgumentationFramework& af) {
  const Graph g(af);
  const size_t n = g.ids.size();
  enum : char { none, in, out };
  std::vector<char> state(n, none);
  Labelling result;

  for (int round = 1;; ++round) {
    std::vector<size_t> newly_in;
    for (size_t i = 0; i < n; ++i) {
      if (state[i] != none) continue;
      const auto& att = g.attackers[i];
      if (std::all_of(att.begin(), att.end(), [&](size_t a) { return state[a] == out; })) newly_in.push_back(i);
    }
    for (size_t i : newly_in) {
      state[i] = in;
      LabelStep step{g.ids[i], Label::in, {}, round};
      for (size_t a : g.attackers[i]) step.justification.push_back(g.ids[a]);
      std::sort(step.justification.begin(), step.justification.end());
      result.steps.push_back(std::move(step));
    }

    std::vector<size_t> newly_out;
    for (size_t i = 0; i < n; ++i) {
      if (state[i] != none) continue;
      const auto& att = g.attackers[i];
      if (std::any_of(att.begin(), att.end(), [&](size_t a) { return state[a] == in; })) newly_out.push_back(i);
    }
    for (size_t i : newly_out) {
      state[i] = out;
      LabelStep step{g.ids[i], Label::out, {}, round};
      for (size_t a : g.attackers[i]) {
        if (state[a] == in) step.justification.push_back(g.ids[a]);
      }
      std::sort(step.justification.begin(), step.justification.end());
      result.steps.push_back(std::move(step));
    }
    if (newly_in.empty() && newly_out.empty()) break;
  }

  for (size_t i = 0; i < n; ++i) {
    result.assignment[g.ids[i]] = state[i] == in ? Label::in : state[i] == out ? Label::out : Label::undec;
  }
  return result;
}

bool is_conflict_free(const ArgumentationFramework& af, const std::vector<std::string>& s) {
  const Graph g(af);
  return g.conflict_free(g.mask(s));
}

bool is_admissible(const ArgumentationFramework& af, const std::vector<std::string>& s) {
  const Graph g(af);
  return g.admissible(g.mask(s));
}

std::vector<Extension> enumerate_admissible(const ArgumentationFramework& af) {
  const Graph g(af);
  const size_t n = g.ids.size();
  if (n > kEnumerationLimit) {
    throw SizeLimitError("admissible enumeration is limited to " + std::to_string(kEnumerationLimit) +
                         " arguments, framework has " + std::to_string(n));
  }
  std::vector<Extension> out;
  std::vector<bool> in(n);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    for (size_t i = 0; i < n; ++i) in[i] = (bits >> i) & 1U;
    if (!g.admissible(in)) continue;
    Extension e{{}, Semantics::admissible};
    for (size_t i = 0; i < n; ++i) {
      if (in[i]) e.members.push_back(g.ids[i]);
    }
    std::sort(e.members.begin(), e.members.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<Extension> enumerate_preferred(const ArgumentationFramework& af) {
  const std::vector<Extension> admissible = enumerate_admissible(af);
  std::vector<Extension> out;
  for (const auto& e : admissible) {
    const bool maximal = std::none_of(admissible.begin(), admissible.end(), [&](const Extension& other) {
      return other.members.size() > e.members.size() &&
             std::includes(other.members.begin(), other.members.end(), e.members.begin(), e.members.end());
    });
    if (maximal) out.push_back({e.members, Semantics::preferred});
  }
  return out;
}

QueryVerdict accept(const ArgumentationFramework& af, const Literal& query, AcceptanceMode mode,
                    Semantics semantics) {
  QueryVerdict v;
  v.query = to_string(query);
  v.labelling = grounded_labelling(af);
  auto concludes = [&](const std::string& id) {
    const Argument* a = af.find(id);
    return a && a->conclusion && *a->conclusion == query;
  };

  if (semantics != Semantics::preferred) {
    for (const auto& a : af.arguments) {
      if (concludes(a.id) && v.labelling.assignment.at(a.id) == Label::in) v.supporting_arguments.push_back(a.id);
    }
    v.accepted = !v.supporting_arguments.empty();
    return v;
  }

  std::set<std::string> support;
  size_t holding = 0;
  const auto extensions = enumerate_preferred(af);
  for (const auto& e : extensions) {
    bool holds = false;
    for (const auto& id : e.members) {
      if (concludes(id)) {
        support.insert(id);
        holds = true;
      }
    }
    holding += holds;
  }
  v.accepted = mode == AcceptanceMode::credulous ? holding > 0 : holding == extensions.size() && holding > 0;
  if (v.accepted) v.supporting_arguments.assign(support.begin(), support.end());
  return v;
}

QueryVerdict accept_argument(const ArgumentationFramework& af, const std::string& id) {
  QueryVerdict v;
  v.query = id;
  v.labelling = grounded_labelling(af);
  auto it = v.labelling.assignment.find(id);
  if (it != v.labelling.assignment.end() && it->second == Label::in) v.supporting_arguments.push_back(id);
  v.accepted = !v.supporting_arguments.empty();
  return v;
}

}  // namespace argsel
