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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "argsel/cli.hpp"
#include "test_support.hpp"

namespace argsel {
namespace {

using testing::fixture;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("argsel_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(Cli, ValidateAgencyListing) {
  const Outcome r = cli({"validate", fixture("agency.gkb")});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("rules: 5\npreferences: 3\nfacts: 6\nvalid\n"), std::string::npos) << r.out;
}

TEST(Cli, ValidateSplitFiles) {
  const Outcome r = cli({"validate", fixture("stakeholder.gkb"), fixture("explainers.gkb")});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("facts: 6"), std::string::npos);
  const Outcome dup = cli({"validate", fixture("agency.gkb"), fixture("explainers.gkb")});
  EXPECT_EQ(dup.code, exit_code::validation_error);
  EXPECT_NE(dup.out.find("E_DUP_LABEL"), std::string::npos);
}

TEST(Cli, QueryTraceOnCuratedKb) {
  const Outcome r = cli({"query", fixture("curated.gkb"), "--goal", "neg(use(lime))", "--trace"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_TRUE(ends_with(r.out, "position {r2(lime), r5(lime)}\n")) << r.out;
  EXPECT_NE(r.out.find("[2] preferences"), std::string::npos);
}

TEST(Cli, QueryWithoutTracePrintsVerdict) {
  const Outcome r = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(X=lime))"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, "query neg(use(lime)): accepted (supported by r2(lime))\nposition {r2(lime), r5(lime)}\n");
}

TEST(Cli, QueryNotAccepted) {
  EXPECT_EQ(cli({"query", fixture("empty.gkb"), "--goal", "use(lime)"}).code, exit_code::rejected);
  EXPECT_EQ(cli({"query", fixture("lime_case.gkb"), "--goal", "use(lime)"}).code, exit_code::rejected);
}

TEST(Cli, QueryGoalMustBeGround) {
  EXPECT_EQ(cli({"query", fixture("lime_case.gkb"), "--goal", "use(X)"}).code, exit_code::usage_error);
}

TEST(Cli, QueryPreferredSemantics) {
  const Outcome r = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(lime))", "--semantics", "preferred"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(cli({"query", fixture("lime_case.gkb"), "--goal", "use(lime)", "--semantics", "stable"}).code,
            exit_code::usage_error);
}

TEST_F(CliFiles, ParseErrorExitCode) {
  const std::string bad = write("bad.gkb", "rule(r1(X), use(X), [is_sparse(X)])\n");
  const Outcome r = cli({"validate", bad});
  EXPECT_EQ(r.code, exit_code::parse_error);
  EXPECT_NE(r.err.find("bad.gkb:2:1"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"query", bad, "--goal", "use(a)"}).code, exit_code::parse_error);
  EXPECT_EQ(cli({"query", fixture("lime_case.gkb"), "--goal", "use(lime"}).code, exit_code::parse_error);
}

TEST_F(CliFiles, ValidationErrorExitCode) {
  const std::string cyc = write("cycle.gkb",
                                "rule(a, p, []).\nrule(b, q, []).\nrule(c, s, []).\n"
                                "rule(p1, prefer(a, b), []).\nrule(p2, prefer(b, c), []).\nrule(p3, prefer(c, a), []).\n");
  const Outcome v = cli({"validate", cyc});
  EXPECT_EQ(v.code, exit_code::validation_error);
  EXPECT_NE(v.out.find("invalid"), std::string::npos);
  const Outcome q = cli({"query", cyc, "--goal", "p"});
  EXPECT_EQ(q.code, exit_code::validation_error);
  EXPECT_NE(q.err.find("E_PREFERENCE_CYCLE"), std::string::npos);
}

TEST_F(CliFiles, GroundingCap) {
  EXPECT_EQ(cli({"query", fixture("agency.gkb"), "--goal", "use(lime)", "--cap", "3"}).code,
            exit_code::validation_error);
}

TEST_F(CliFiles, JsonToFileAndStdout) {
  const std::string out = path("report.json");
  const Outcome r = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(lime))", "--json", out});
  EXPECT_EQ(r.code, exit_code::ok);
  const auto j = nlohmann::json::parse(read("report.json"));
  EXPECT_EQ(j["labelling"]["r2(lime)"], "IN");
  EXPECT_EQ(j["inputs"]["query"], "neg(use(lime))");

  const Outcome s = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(lime))", "--json", "-"});
  EXPECT_EQ(nlohmann::json::parse(s.out), j);

  const Outcome v = cli({"validate", fixture("agency.gkb"), "--json", "-"});
  EXPECT_EQ(nlohmann::json::parse(v.out)["counts"]["rules"], 5);
}

TEST_F(CliFiles, TimingIsOptIn) {
  const Outcome plain = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(lime))", "--json", "-"});
  EXPECT_FALSE(nlohmann::json::parse(plain.out).contains("timing"));
  const Outcome timed = cli({"query", fixture("lime_case.gkb"), "--goal", "neg(use(lime))", "--json", "-", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("timing"));
}

TEST(Cli, SolveAbstract) {
  const Outcome r = cli({"solve-af", fixture("lime_case.af"), "--query", "r2"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, "r1 OUT\nr2 IN\nr3 OUT\nr5 IN\nquery r2: accepted (supported by r2)\n");
  EXPECT_EQ(cli({"solve-af", fixture("lime_case.af"), "--query", "r1"}).code, exit_code::rejected);
  EXPECT_EQ(cli({"solve-af", fixture("lime_case.af"), "--query", "nope"}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"solve-af", fixture("lime_case.af")}).code, exit_code::ok);
}

TEST(Cli, SolveAbstractDotToStdout) {
  const Outcome r = cli({"solve-af", fixture("lime_case.af"), "--dot", "-"});
  EXPECT_EQ(r.out.rfind("digraph argumentation {", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("\"r3\" -> \"r2\" [style=dotted];"), std::string::npos);
}

TEST(Cli, SelectCurated) {
  const Outcome r = cli({"select", "--candidates", "lime,counterfactual", "--profiles", fixture("profiles/curated"),
                     "--stakeholder", fixture("agency.stakeholder.json")});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out,
            "lime: rejected (use not accepted, neg(use) accepted)\n"
            "counterfactual: recommended (use accepted, neg(use) not accepted)\n"
            "ranking: counterfactual, lime\n"
            "chosen: counterfactual\n");
}

TEST(Cli, SelectFallback) {
  const Outcome r = cli({"select", fixture("empty.gkb"), "--candidates", "lime", "--profiles", fixture("profiles/blank"),
                     "--stakeholder", fixture("fallback.stakeholder.json"), "--json", "-"});
  EXPECT_EQ(r.code, exit_code::rejected);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["chosen"], "lime");
  EXPECT_EQ(j["fallback_used"], true);
}

TEST(Cli, SelectUnknownCandidate) {
  const Outcome r = cli({"select", "--candidates", "grad_cam", "--profiles", fixture("profiles/agency"), "--stakeholder",
                     fixture("agency.stakeholder.json")});
  EXPECT_EQ(r.code, exit_code::usage_error);
  EXPECT_NE(r.err.find("registered profiles: counterfactual, lime, shap"), std::string::npos) << r.err;
}

TEST(Cli, ExportDot) {
  const Outcome r = cli({"export-dot", fixture("lime_case.gkb"), "--goal", "neg(use(X=lime))"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("\"r2(lime)\" [fillcolor=green];"), std::string::npos);
  EXPECT_NE(r.out.find("\"r3(lime)\" -> \"r2(lime)\" [style=dotted];"), std::string::npos);
}

TEST(Cli, Ground) {
  const Outcome r = cli({"ground", fixture("agency.gkb"), "--goal", "use(X=lime)"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("rule(r1(lime), use(lime), [is_sparse(lime)]).\n"), std::string::npos);
  EXPECT_NE(r.out.find("rule(pr1(lime), prefer(r2(lime), r1(lime)), []).\n"), std::string::npos);
  EXPECT_EQ(r.out.find("counterfactual), use"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"query", fixture("agency.gkb")}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"validate", fixture("missing.gkb")}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"validate", fixture("agency.gkb"), "--bogus"}).code, exit_code::usage_error);
  EXPECT_EQ(cli({"--help"}).code, exit_code::ok);
}

TEST(Cli, StdoutIsStable) {
  const std::vector<std::string> args{"query", fixture("curated.gkb"), "--goal", "use(counterfactual)", "--trace"};
  const Outcome a = cli(args);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(cli(args).out, a.out);
}

}  // namespace
}  // namespace argsel
