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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "argsel/af_format.hpp"
#include "argsel/framework.hpp"
#include "argsel/grounder.hpp"
#include "argsel/kb.hpp"
#include "test_support.hpp"

namespace argsel {
namespace {

using testing::fixture;
using Pairs = std::set<std::pair<std::string, std::string>>;

GroundProgram ground_fixture(const std::string& name, const std::string& goal) {
  return ground_program(parse_program_file(fixture(name)), parse_goal(goal));
}

std::set<std::string> rule_ids(const std::vector<Argument>& args) {
  std::set<std::string> out;
  for (const auto& a : args) {
    if (a.kind == ArgumentKind::rule) out.insert(a.id);
  }
  return out;
}

Pairs pairs(const std::vector<AttackEdge>& edges) {
  Pairs out;
  for (const auto& e : edges) out.insert({e.attacker, e.target});
  return out;
}

AttackEdge edge(const std::string& a, const std::string& b, EdgeKind k = EdgeKind::attack) {
  return {a, b, k, std::nullopt};
}

const Argument& by_id(const std::vector<Argument>& args, const std::string& id) {
  auto it = std::find_if(args.begin(), args.end(), [&](const Argument& a) { return a.id == id; });
  EXPECT_NE(it, args.end()) << id;
  return *it;
}

TEST(CandidateArguments, LimeWithoutCheapFact) {
  const auto args = build_candidate_arguments(ground_fixture("lime_case.gkb", "neg(use(X=lime))"));
  EXPECT_EQ(rule_ids(args), (std::set<std::string>{"r1(lime)", "r2(lime)", "r3(lime)", "r5(lime)"}));

  const Argument& r1 = by_id(args, "r1(lime)");
  EXPECT_EQ(to_string(*r1.conclusion), "use(lime)");
  ASSERT_EQ(r1.premise_support.size(), 1u);
  EXPECT_EQ(r1.premise_support[0], std::optional<std::string>("f2"));

  const Argument& r3 = by_id(args, "r3(lime)");
  ASSERT_EQ(r3.premise_support.size(), 1u);
  EXPECT_FALSE(r3.premise_support[0].has_value());
}

TEST(CandidateArguments, FullListingAlsoBlocksR2) {
  const auto args = build_candidate_arguments(ground_fixture("agency.gkb", "neg(use(X=lime))"));
  EXPECT_EQ(rule_ids(args), (std::set<std::string>{"r1(lime)", "r3(lime)", "r5(lime)"}));
}

TEST(CandidateArguments, FactsOnly) {
  const auto args = build_candidate_arguments(ground_fixture("explainers.gkb", "use(lime)"));
  EXPECT_EQ(args.size(), 6u);
  for (const auto& a : args) {
    EXPECT_EQ(a.kind, ArgumentKind::fact);
    EXPECT_TRUE(a.premises.empty());
  }
}

TEST(CandidateArguments, KindMatchesEmptyPremises) {
  for (const char* name : {"agency.gkb", "lime_case.gkb", "counterfactual_case.gkb", "curated.gkb"}) {
    for (const auto& a : build_candidate_arguments(ground_fixture(name, "use(lime)"))) {
      EXPECT_EQ(a.kind == ArgumentKind::fact, a.premises.empty()) << a.id;
    }
  }
}

TEST(ComputeAttacks, RebuttalBothWays) {
  const auto args = build_candidate_arguments(ground_fixture("lime_case.gkb", "neg(use(X=lime))"));
  const auto edges = compute_attacks(args);
  const Pairs p = pairs(edges);
  EXPECT_TRUE(p.count({"r1(lime)", "r2(lime)"}));
  EXPECT_TRUE(p.count({"r2(lime)", "r1(lime)"}));
  for (const auto& e : edges) {
    if (e.attacker == "r1(lime)" && e.target == "r2(lime)") EXPECT_EQ(e.kind, EdgeKind::rebuttal);
  }
}

TEST(ComputeAttacks, UnderminingOneWay) {
  const auto args = build_candidate_arguments(ground_fixture("lime_case.gkb", "neg(use(X=lime))"));
  const auto edges = compute_attacks(args);
  auto it = std::find_if(edges.begin(), edges.end(),
                         [](const AttackEdge& e) { return e.attacker == "r5(lime)" && e.target == "r3(lime)"; });
  ASSERT_NE(it, edges.end());
  EXPECT_EQ(it->kind, EdgeKind::undermining);
  EXPECT_FALSE(pairs(edges).count({"r3(lime)", "r5(lime)"}));
}

TEST(ComputeAttacks, SingleArgument) {
  Argument a{"r", Literal{false, Term::compound("p")}, {}, {}, ArgumentKind::fact};
  EXPECT_TRUE(compute_attacks(std::vector<Argument>{a}).empty());
}

TEST(ApplyPreferences, FlipsWeakerToStronger) {
  const std::vector<AttackEdge> edges{edge("r1", "r2"), edge("r3", "r2"), edge("r5", "r3")};
  const PreferenceRelation pr({{"r2", "r1", "pr1"}, {"r3", "r2", "pr2"}});
  const PreferenceOutcome out = apply_preferences(edges, pr);
  EXPECT_EQ(pairs(out.edges), (Pairs{{"r2", "r1"}, {"r3", "r2"}, {"r5", "r3"}}));
  size_t flips = 0;
  for (const auto& d : out.decisions) {
    if (d.action == PreferenceAction::flipped) {
      ++flips;
      EXPECT_EQ(d.original.attacker, "r1");
      EXPECT_EQ(d.label, "pr1");
    }
  }
  EXPECT_EQ(flips, 1u);
}

TEST(ApplyPreferences, NoPreferenceKeepsBothRebuttals) {
  const std::vector<AttackEdge> edges{edge("a", "b", EdgeKind::rebuttal), edge("b", "a", EdgeKind::rebuttal)};
  const PreferenceOutcome out = apply_preferences(edges, PreferenceRelation{});
  EXPECT_EQ(pairs(out.edges), (Pairs{{"a", "b"}, {"b", "a"}}));
}

TEST(ApplyPreferences, TransitiveClosure) {
  const std::vector<AttackEdge> edges{edge("a", "c", EdgeKind::rebuttal), edge("c", "a", EdgeKind::rebuttal)};
  const PreferenceRelation pr({{"a", "b", "p1"}, {"b", "c", "p2"}});
  EXPECT_TRUE(pr.prefers("a", "c").has_value());
  const PreferenceOutcome out = apply_preferences(edges, pr);
  EXPECT_EQ(pairs(out.edges), (Pairs{{"a", "c"}}));
}

TEST(ApplyPreferences, FactsOutrankRules) {
  const std::vector<Argument> args{{"f", Literal{false, Term::compound("p")}, {}, {}, ArgumentKind::fact},
                                   {"r", Literal{true, Term::compound("p")}, {}, {}, ArgumentKind::rule}};
  const std::vector<AttackEdge> edges{edge("f", "r", EdgeKind::rebuttal), edge("r", "f", EdgeKind::rebuttal)};
  const PreferenceRelation pr({{"r", "f", "bogus"}});
  EXPECT_EQ(pairs(apply_preferences(edges, pr, args).edges), (Pairs{{"f", "r"}}));
}

TEST(ApplyPreferences, UnderminingIsNeverDropped) {
  const std::vector<AttackEdge> edges{edge("weak", "strong", EdgeKind::undermining)};
  const PreferenceRelation pr({{"strong", "weak", "p"}});
  EXPECT_EQ(pairs(apply_preferences(edges, pr).edges), (Pairs{{"weak", "strong"}}));
}

TEST(PreferenceRelation, MutualPairIsDowngraded) {
  const PreferenceRelation pr({{"a", "b", "p1"}, {"b", "a", "p2"}});
  EXPECT_FALSE(pr.prefers("a", "b"));
  EXPECT_FALSE(pr.prefers("b", "a"));
  EXPECT_EQ(pr.warnings().size(), 1u);
}

TEST(PreferenceRelation, LongerCycleThrows) {
  EXPECT_THROW(PreferenceRelation({{"a", "b", "p1"}, {"b", "c", "p2"}, {"c", "a", "p3"}}), PreferenceCycleError);
  EXPECT_THROW(PreferenceRelation({{"a", "a", "p"}}), PreferenceCycleError);
}

TEST(BuildFramework, LimeCaseStructured) {
  const auto af = build_framework(ground_fixture("lime_case.gkb", "neg(use(X=lime))"), parse_goal("neg(use(lime))").literal);
  EXPECT_EQ(af.ids(), (std::vector<std::string>{"r1(lime)", "r2(lime)", "r3(lime)", "r5(lime)"}));
  EXPECT_EQ(pairs(af.attacks),
            (Pairs{{"r2(lime)", "r1(lime)"}, {"r3(lime)", "r2(lime)"}, {"r5(lime)", "r3(lime)"}}));
  EXPECT_EQ(af.initial_attacks.size(), 5u);
}

TEST(BuildFramework, NoMatchingHead) {
  const auto af = build_framework(ground_fixture("agency.gkb", "explains(lime)"), parse_goal("explains(lime)").literal);
  EXPECT_TRUE(af.arguments.empty());
  EXPECT_TRUE(af.attacks.empty());
}

TEST(BuildFramework, AugmentedCounterfactual) {
  const auto af = build_framework(ground_fixture("counterfactual_case.gkb", "use(X=counterfactual)"),
                                  parse_goal("use(counterfactual)").literal);
  EXPECT_EQ(af.ids(), (std::vector<std::string>{"r1(counterfactual)", "r2(counterfactual)", "r3(counterfactual)",
                                                "r4(counterfactual)"}));
  EXPECT_EQ(pairs(af.attacks),
            (Pairs{{"r2(counterfactual)", "r1(counterfactual)"}, {"r3(counterfactual)", "r2(counterfactual)"}}));
}

TEST(BuildFramework, FactAttackersAreKept) {
  const auto af = build_framework(
      ground_program(parse_program("rule(r, p, [q]).\nrule(f, neg(p), []).\n", "t"), parse_goal("p")),
      parse_goal("p").literal);
  EXPECT_EQ(af.ids(), (std::vector<std::string>{"f", "r"}));
  EXPECT_EQ(af.find("f")->kind, ArgumentKind::fact);
  EXPECT_EQ(pairs(af.attacks), (Pairs{{"f", "r"}}));
}

TEST(BuildFramework, GroundPreferenceCycleThrows) {
  const Program p = parse_program(
      "rule(a, p, []).\nrule(b, neg(p), []).\nrule(c, q, []).\n"
      "rule(p1, prefer(a, b), []).\nrule(p2, prefer(b, c), []).\nrule(p3, prefer(c, a), []).\n",
      "t");
  EXPECT_THROW(build_framework(ground_program(p, parse_goal("p")), parse_goal("p").literal), PreferenceCycleError);
}

// Re-derives an edge from its endpoints.
bool edge_is_justified(const ArgumentationFramework& af, const AttackEdge& e) {
  const Argument* a = af.find(e.attacker);
  const Argument* b = af.find(e.target);
  if (!a || !b || !a->conclusion || !b->conclusion) return false;
  const Literal neg = a->conclusion->complement();
  if (e.kind == EdgeKind::rebuttal) return *b->conclusion == neg;
  if (e.kind == EdgeKind::undermining) {
    return std::find(b->premises.begin(), b->premises.end(), neg) != b->premises.end();
  }
  return false;
}

struct Corpus {
  const char* file;
  const char* goal;
};
const Corpus kCorpus[] = {
    {"agency.gkb", "neg(use(X=lime))"},     {"agency.gkb", "use(X=lime)"},
    {"agency.gkb", "use(counterfactual)"},  {"lime_case.gkb", "neg(use(X=lime))"},
    {"lime_case.gkb", "is_trustworthy(lime)"},  {"counterfactual_case.gkb", "use(X=counterfactual)"},
    {"curated.gkb", "neg(use(lime))"},     {"curated.gkb", "use(counterfactual)"},
    {"curated.gkb", "neg(use(counterfactual))"},
};

TEST(FrameworkInvariants, EdgesAreJustified) {
  for (const auto& c : kCorpus) {
    const auto gp = ground_fixture(c.file, c.goal);
    const auto af = build_framework(gp, parse_goal(c.goal).literal);
    for (const auto& e : af.initial_attacks) EXPECT_TRUE(edge_is_justified(af, e)) << c.file << " " << e.attacker;
  }
}

TEST(FrameworkInvariants, PreferencesKeepNodesAndUnderminings) {
  for (const auto& c : kCorpus) {
    const auto gp = ground_fixture(c.file, c.goal);
    const auto args = build_candidate_arguments(gp);
    const auto edges = compute_attacks(args);
    const PreferenceRelation pr(ground_preferences(gp));
    const auto out = apply_preferences(edges, pr, args);

    std::set<std::string> before, after;
    for (const auto& e : edges) {
      before.insert(e.attacker);
      before.insert(e.target);
    }
    for (const auto& e : out.edges) {
      after.insert(e.attacker);
      after.insert(e.target);
    }
    EXPECT_EQ(after, before) << c.file << " " << c.goal;

    for (const auto& e : edges) {
      if (e.kind != EdgeKind::undermining) continue;
      EXPECT_TRUE(pairs(out.edges).count({e.attacker, e.target})) << e.attacker << " -> " << e.target;
    }
    for (const auto& e : out.edges) {
      if (e.kind == EdgeKind::rebuttal) {
        EXPECT_FALSE(pr.prefers(e.target, e.attacker).has_value()) << e.attacker << " -> " << e.target;
      }
    }
  }
}

TEST(FrameworkInvariants, Deterministic) {
  for (const auto& c : kCorpus) {
    const auto a = build_framework(ground_fixture(c.file, c.goal), parse_goal(c.goal).literal);
    const auto b = build_framework(ground_fixture(c.file, c.goal), parse_goal(c.goal).literal);
    EXPECT_EQ(a.arguments, b.arguments);
    EXPECT_EQ(a.attacks, b.attacks);
    const auto ids = a.ids();
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_TRUE(std::is_sorted(a.attacks.begin(), a.attacks.end(), edge_less));
  }
}

TEST(AbstractFormat, ParsePrintRoundTrip) {
  const AbstractInput in = parse_af_file(fixture("lime_case.af"));
  EXPECT_EQ(in.arguments, (std::vector<std::string>{"r1", "r2", "r3", "r5"}));
  EXPECT_EQ(in.attacks.size(), 3u);
  ASSERT_EQ(in.preferences.size(), 2u);
  EXPECT_EQ(in.preferences[0], (PreferencePair{"r2", "r1", "pr1"}));
  const AbstractInput again = parse_af(print_af(in), "again");
  EXPECT_EQ(print_af(again), print_af(in));
}

TEST(AbstractFormat, Errors) {
  EXPECT_THROW(parse_af("arg a\natt a b\n", "t"), ParseError);
  EXPECT_THROW(parse_af("arg a\nedge a a\n", "t"), ParseError);
  EXPECT_THROW(parse_af("arg a\natt a\n", "t"), ParseError);
  EXPECT_THROW(make_abstract_framework({"a"}, {edge("a", "zz")}, {}), std::invalid_argument);
}

TEST(AbstractFormat, DefaultPreferenceLabel) {
  const AbstractInput in = parse_af("# comment\narg a\narg b\n\npref a b\n", "t");
  ASSERT_EQ(in.preferences.size(), 1u);
  EXPECT_EQ(in.preferences[0].label, "a>b");
}

}  // namespace
}  // namespace argsel
