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

#include "argsel/framework.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "argsel/kb.hpp"

namespace argsel {

bool edge_less(const AttackEdge& a, const AttackEdge& b) {
  return std::tie(a.attacker, a.target, a.kind) < std::tie(b.attacker, b.target, b.kind);
}

PreferenceRelation::PreferenceRelation(std::vector<PreferencePair> declared) : declared_(std::move(declared)) {
  std::map<std::pair<std::string, std::string>, std::string> direct;
  for (const auto& p : declared_) {
    if (p.stronger == p.weaker) throw PreferenceCycleError("preference " + p.label + " prefers " + p.stronger + " to itself");
    direct.emplace(std::make_pair(p.stronger, p.weaker), p.label);
  }
  for (auto it = direct.begin(); it != direct.end();) {
    auto rev = direct.find({it->first.second, it->first.first});
    if (rev == direct.end()) {
      ++it;
      continue;
    }
    const auto& [a, b] = it->first;
    warnings_.push_back("no strict preference between " + std::min(a, b) + ", " + std::max(a, b));
    direct.erase(rev);
    it = direct.erase(it);
  }

  std::set<std::string> nodes;
  for (const auto& [pair, label] : direct) {
    nodes.insert(pair.first);
    nodes.insert(pair.second);
  }
  closure_ = direct;
  for (const auto& k : nodes) {
    for (const auto& i : nodes) {
      auto ik = closure_.find({i, k});
      if (ik == closure_.end()) continue;
      for (const auto& j : nodes) {
        auto kj = closure_.find({k, j});
        if (kj == closure_.end() || closure_.count({i, j})) continue;
        closure_.emplace(std::make_pair(i, j), ik->second + "+" + kj->second);
      }
    }
  }
  for (const auto& n : nodes) {
    if (auto it = closure_.find({n, n}); it != closure_.end()) {
      throw PreferenceCycleError("preference cycle through " + n + " (" + it->second + ")");
    }
  }
}

std::optional<std::string> PreferenceRelation::prefers(const std::string& stronger, const std::string& weaker) const {
  auto it = closure_.find({stronger, weaker});
  if (it == closure_.end()) return std::nullopt;
  return it->second;
}

const Argument* ArgumentationFramework::find(const std::string& id) const {
  auto it = std::lower_bound(arguments.begin(), arguments.end(), id,
                             [](const Argument& a, const std::string& key) { return a.id < key; });
  return (it != arguments.end() && it->id == id) ? &*it : nullptr;
}

std::vector<std::string> ArgumentationFramework::ids() const {
  std::vector<std::string> out;
  out.reserve(arguments.size());
  for (const auto& a : arguments) out.push_back(a.id);
  return out;
}

std::vector<Argument> build_candidate_arguments(const GroundProgram& gp) {
  std::map<Literal, std::string> facts;
  for (const auto& r : gp.ground_rules) {
    if (!r.is_preference() && r.body.empty()) facts.emplace(r.head_literal(), to_string(r.label));
  }

  std::vector<Argument> out;
  for (const auto& r : gp.ground_rules) {
    if (r.is_preference()) continue;
    const bool blocked = std::any_of(r.body.begin(), r.body.end(),
                                     [&](const Literal& l) { return facts.count(l.complement()) > 0; });
    if (blocked) continue;
    Argument a;
    a.id = to_string(r.label);
    a.conclusion = r.head_literal();
    a.premises = r.body;
    a.kind = r.body.empty() ? ArgumentKind::fact : ArgumentKind::rule;
    for (const auto& l : r.body) {
      auto it = facts.find(l);
      a.premise_support.push_back(it == facts.end() ? std::nullopt : std::optional<std::string>(it->second));
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const Argument& x, const Argument& y) { return x.id < y.id; });
  return out;
}

std::vector<AttackEdge> compute_attacks(std::span<const Argument> args) {
  std::map<Literal, std::vector<const Argument*>> by_conclusion;
  for (const auto& a : args) {
    if (a.conclusion) by_conclusion[*a.conclusion].push_back(&a);
  }
  std::vector<AttackEdge> edges;
  for (const auto& target : args) {
    if (target.conclusion) {
      if (auto it = by_conclusion.find(target.conclusion->complement()); it != by_conclusion.end()) {
        for (const Argument* attacker : it->second) {
          edges.push_back({attacker->id, target.id, EdgeKind::rebuttal, std::nullopt});
        }
      }
    }
    for (const auto& premise : target.premises) {
      if (auto it = by_conclusion.find(premise.complement()); it != by_conclusion.end()) {
        for (const Argument* attacker : it->second) {
          edges.push_back({attacker->id, target.id, EdgeKind::undermining, std::nullopt});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const AttackEdge& x, const AttackEdge& y) {
                            return x.attacker == y.attacker && x.target == y.target && x.kind == y.kind;
                          }),
              edges.end());
  return edges;
}

namespace {

constexpr const char* kFactPriority = "fact priority";

}  // namespace

PreferenceOutcome apply_preferences(std::span<const AttackEdge> edges, const PreferenceRelation& pr,
                                    std::span<const Argument> args) {
  std::set<std::string> fact_ids;
  for (const auto& a : args) {
    if (a.kind == ArgumentKind::fact) fact_ids.insert(a.id);
  }
  auto beats = [&](const std::string& x, const std::string& y) -> std::optional<std::string> {
    const bool fx = fact_ids.count(x) > 0;
    const bool fy = fact_ids.count(y) > 0;
    if (fx && !fy) return std::string(kFactPriority);
    if (fy && !fx) return std::nullopt;
    return pr.prefers(x, y);
  };

  using Key = std::tuple<std::string, std::string, EdgeKind>;
  std::set<Key> present;
  for (const auto& e : edges) present.insert({e.attacker, e.target, e.kind});

  std::map<Key, AttackEdge> result;
  PreferenceOutcome out;
  std::vector<AttackEdge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end(), edge_less);
  for (const auto& e : sorted) {
    if (e.kind == EdgeKind::undermining) {
      result.emplace(Key{e.attacker, e.target, e.kind}, e);
      continue;
    }
    if (auto label = beats(e.target, e.attacker)) {
      const Key reversed{e.target, e.attacker, e.kind};
      const bool exists = present.count(reversed) > 0;
      out.decisions.push_back({e, exists ? PreferenceAction::dropped : PreferenceAction::flipped, *label});
      if (!exists) result.emplace(reversed, AttackEdge{e.target, e.attacker, e.kind, *label});
      continue;
    }
    AttackEdge kept = e;
    if (auto label = beats(e.attacker, e.target)) {
      kept.resolved_by = *label;
      out.decisions.push_back({e, PreferenceAction::kept, *label});
    }
    result[Key{e.attacker, e.target, e.kind}] = kept;
  }
  for (auto& [key, e] : result) out.edges.push_back(std::move(e));
  return out;
}

std::vector<PreferencePair> ground_preferences(const GroundProgram& gp) {
  std::vector<PreferencePair> out;
  for (const auto& r : gp.ground_rules) {
    if (!r.is_preference()) continue;
    const auto& p = r.head_preference();
    out.push_back({to_string(p.stronger), to_string(p.weaker), to_string(r.label)});
  }
  return out;
}

ArgumentationFramework build_framework(const GroundProgram& gp, const Literal& query) {
  std::vector<Argument> candidates = build_candidate_arguments(gp);
  std::vector<AttackEdge> edges = compute_attacks(candidates);
  PreferenceRelation pr(ground_preferences(gp));
  PreferenceOutcome outcome = apply_preferences(edges, pr, candidates);

  std::map<std::string, std::vector<std::string>> attackers;
  for (const auto& e : outcome.edges) attackers[e.target].push_back(e.attacker);
  std::map<Literal, std::vector<std::string>> rule_concluding;
  for (const auto& a : candidates) {
    if (a.kind == ArgumentKind::rule) rule_concluding[*a.conclusion].push_back(a.id);
  }

  std::set<std::string> relevant;
  std::deque<std::string> work;
  const Literal complement = query.complement();
  for (const auto& a : candidates) {
    if (*a.conclusion == query || *a.conclusion == complement) {
      relevant.insert(a.id);
      work.push_back(a.id);
    }
  }
  auto by_id = [&](const std::string& id) -> const Argument& {
    return *std::lower_bound(candidates.begin(), candidates.end(), id,
                             [](const Argument& a, const std::string& key) { return a.id < key; });
  };
  while (!work.empty()) {
    const std::string id = work.front();
    work.pop_front();
    auto enqueue = [&](const std::string& next) {
      if (relevant.insert(next).second) work.push_back(next);
    };
    if (auto it = attackers.find(id); it != attackers.end()) {
      for (const auto& a : it->second) enqueue(a);
    }
    for (const auto& premise : by_id(id).premises) {
      if (auto it = rule_concluding.find(premise); it != rule_concluding.end()) {
        for (const auto& a : it->second) enqueue(a);
      }
    }
  }

  auto inside = [&](const AttackEdge& e) { return relevant.count(e.attacker) && relevant.count(e.target); };
  ArgumentationFramework af;
  for (auto& a : candidates) {
    if (relevant.count(a.id)) af.arguments.push_back(std::move(a));
  }
  std::copy_if(edges.begin(), edges.end(), std::back_inserter(af.initial_attacks), inside);
  std::copy_if(outcome.edges.begin(), outcome.edges.end(), std::back_inserter(af.attacks), inside);
  for (const auto& d : outcome.decisions) {
    if (inside(d.original)) af.decisions.push_back(d);
  }
  for (const auto& p : pr.declared()) {
    if (relevant.count(p.stronger) || relevant.count(p.weaker)) af.preferences.push_back(p);
  }
  af.warnings = gp.warnings;
  af.warnings.insert(af.warnings.end(), pr.warnings().begin(), pr.warnings().end());
  return af;
}

ArgumentationFramework make_abstract_framework(std::vector<std::string> ids, std::vector<AttackEdge> attacks,
                                               std::vector<PreferencePair> preferences) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto known = [&](const std::string& id) { return std::binary_search(ids.begin(), ids.end(), id); };
  for (const auto& e : attacks) {
    if (!known(e.attacker) || !known(e.target)) {
      throw std::invalid_argument("attack " + e.attacker + " -> " + e.target + " references an unknown argument");
    }
  }
  for (const auto& p : preferences) {
    if (!known(p.stronger) || !known(p.weaker)) {
      throw std::invalid_argument("preference " + p.label + " references an unknown argument");
    }
  }
  ArgumentationFramework af;
  for (auto& id : ids) af.arguments.push_back(Argument{std::move(id), std::nullopt, {}, {}, ArgumentKind::rule});
  std::sort(attacks.begin(), attacks.end(), edge_less);
  attacks.erase(std::unique(attacks.begin(), attacks.end(),
                            [](const AttackEdge& x, const AttackEdge& y) {
                              return x.attacker == y.attacker && x.target == y.target && x.kind == y.kind;
                            }),
                attacks.end());
  PreferenceRelation pr(preferences);
  PreferenceOutcome outcome = apply_preferences(attacks, pr, af.arguments);
  af.initial_attacks = std::move(attacks);
  af.attacks = std::move(outcome.edges);
  af.decisions = std::move(outcome.decisions);
  af.preferences = std::move(preferences);
  af.warnings = pr.warnings();
  return af;
}

}  // namespace argsel
