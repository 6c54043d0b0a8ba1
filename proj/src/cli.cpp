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

#include "argsel/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "argsel/af_format.hpp"
#include "argsel/framework.hpp"
#include "argsel/grounder.hpp"
#include "argsel/kb.hpp"
#include "argsel/report.hpp"
#include "argsel/selector.hpp"
#include "argsel/solver.hpp"

namespace argsel {

namespace {

// Carries an exit code out of a subcommand after the message was printed.
struct Failure {
  int code;
};

struct Options {
  std::vector<std::string> kb_files;
  std::string goal;
  std::string af_file;
  std::string af_query;
  std::string candidates;
  std::string profiles_dir;
  std::string stakeholder_file;
  std::string json_file;
  std::string dot_file;
  std::string output_file;
  size_t cap = GroundOptions{}.max_instances;
  Semantics semantics = Semantics::grounded;
  bool trace = false;
  bool timing = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err, bool color)
      : opt_(opt), out_(out), err_(err), color_(color), start_(std::chrono::steady_clock::now()) {}

  int validate() {
    std::vector<Program> programs = parse_all();
    ValidationReport report;
    auto merged = merge_programs(programs);
    if (auto* dup = std::get_if<ValidationReport>(&merged)) {
      report = *dup;
    } else {
      report = validate_program(std::get<Program>(merged));
    }
    print_diagnostics(report, text());
    text() << "rules: " << report.counts.rules << "\n"
         << "preferences: " << report.counts.preferences << "\n"
         << "facts: " << report.counts.facts << "\n"
         << (report.ok() ? "valid" : "invalid") << "\n";
    write_file(opt_.json_file, to_json(report));
    return report.ok() ? exit_code::ok : exit_code::validation_error;
  }

  int ground() {
    const Program program = load_kb();
    const Goal goal = parse_goal_arg();
    const GroundProgram gp = ground_checked(program, goal);
    for (const auto& w : gp.warnings) err_ << "warning: " << w << "\n";
    text() << print_program(Program{gp.ground_rules, program.provenance});
    return exit_code::ok;
  }

  int query() {
    const Program program = load_kb();
    const Goal goal = parse_goal_arg();
    if (!goal.literal.is_ground()) {
      err_ << "error: goal " << to_string(goal.literal) << " is not ground\n";
      throw Failure{exit_code::usage_error};
    }
    const GroundProgram gp = ground_checked(program, goal);
    const QueryRun run = guarded([&] { return run_query(gp, goal.literal, opt_.semantics); });
    for (const auto& w : run.framework.warnings) err_ << "warning: " << w << "\n";

    const TraceDocument doc = build_trace(run.framework, run.verdict.labelling, run.verdict);
    print_trace(doc);
    write_file(opt_.dot_file, to_dot(run.framework, run.verdict.labelling));
    write_file(opt_.json_file,
               to_json(QueryReport{opt_.kb_files, to_string(goal.literal), run.framework, run.verdict}, json_options()));
    print_timing();
    return run.verdict.accepted ? exit_code::ok : exit_code::rejected;
  }

  int solve_af() {
    const AbstractInput input = guarded([&] { return parse_af_file(opt_.af_file); });
    ArgumentationFramework af = guarded([&] { return make_abstract_framework(input); });
    for (const auto& w : af.warnings) err_ << "warning: " << w << "\n";
    if (!opt_.af_query.empty() && !af.find(opt_.af_query)) {
      err_ << "error: unknown argument " << opt_.af_query << "\n";
      throw Failure{exit_code::usage_error};
    }
    const QueryVerdict verdict = opt_.af_query.empty() ? QueryVerdict{"", false, {}, grounded_labelling(af)}
                                                       : accept_argument(af, opt_.af_query);
    const TraceDocument doc = build_trace(af, verdict.labelling, verdict);
    if (opt_.trace) {
      text() << render_trace(doc, color_);
    } else {
      for (const auto& [id, label] : verdict.labelling.assignment) text() << id << " " << to_string(label) << "\n";
      if (!opt_.af_query.empty()) text() << doc.phases.back().lines.front() << "\n";
    }
    write_file(opt_.dot_file, to_dot(af, verdict.labelling));
    write_file(opt_.json_file, to_json(QueryReport{{opt_.af_file}, opt_.af_query, af, verdict}, json_options()));
    print_timing();
    return opt_.af_query.empty() || verdict.accepted ? exit_code::ok : exit_code::rejected;
  }

  int select() {
    const Program kb = opt_.kb_files.empty() ? Program{} : load_kb();
    const auto profiles = guarded([&] { return load_profile_dir(opt_.profiles_dir); });
    const StakeholderModel model = guarded([&] { return load_stakeholder(opt_.stakeholder_file); });
    std::vector<std::string> candidates;
    std::stringstream list(opt_.candidates);
    for (std::string name; std::getline(list, name, ',');) {
      if (!name.empty()) candidates.push_back(name);
    }
    SelectionOptions sopt;
    sopt.grounding.max_instances = opt_.cap;
    sopt.semantics = opt_.semantics;
    const SelectionReport report = guarded([&] { return select_explainer(kb, candidates, model, profiles, sopt); });

    for (const auto& c : report.candidates) {
      text() << c.name << ": " << to_string(c.status) << " (use " << (c.use.verdict.accepted ? "accepted" : "not accepted")
           << ", neg(use) " << (c.neg_use.verdict.accepted ? "accepted" : "not accepted") << ")\n";
      if (opt_.trace) {
        for (const QueryRun* run : std::initializer_list<const QueryRun*>{&c.use, &c.neg_use}) {
          text() << render_trace(build_trace(run->framework, run->verdict.labelling, run->verdict), color_);
        }
      }
    }
    text() << "ranking: " << join(report.ranking) << "\n";
    text() << "chosen: " << report.chosen << (report.fallback_used ? " (default fallback)" : "") << "\n";
    write_file(opt_.json_file, to_json(report, opt_.kb_files, json_options()));
    print_timing();
    return report.fallback_used ? exit_code::rejected : exit_code::ok;
  }

  int export_dot() {
    const Program program = load_kb();
    const Goal goal = parse_goal_arg();
    const GroundProgram gp = ground_checked(program, goal);
    const QueryRun run = guarded([&] { return run_query(gp, goal.literal); });
    const std::string dot = to_dot(run.framework, run.verdict.labelling);
    if (opt_.output_file.empty()) {
      out_ << dot;
    } else {
      write_file(opt_.output_file, dot);
    }
    return exit_code::ok;
  }

 private:
  // Human-readable output is suppressed while a machine format goes to stdout.
  std::ostream& text() { return opt_.json_file == "-" || opt_.dot_file == "-" ? discard_ : out_; }

  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  }

  // Maps library exceptions onto exit codes.
  template <typename Fn>
  auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      throw Failure{exit_code::parse_error};
    } catch (const InvalidKnowledgeBase& e) {
      print_diagnostics(e.report(), err_);
      throw Failure{exit_code::validation_error};
    } catch (const PreferenceCycleError& e) {
      err_ << "error: " << e.what() << "\n";
      throw Failure{exit_code::validation_error};
    } catch (const GroundingError& e) {
      err_ << "error: " << e.what() << "\n";
      throw Failure{exit_code::validation_error};
    } catch (const SelectionError& e) {
      err_ << "error: " << e.what() << "\n";
      throw Failure{exit_code::usage_error};
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      throw Failure{exit_code::validation_error};
    } catch (const std::runtime_error& e) {
      err_ << "error: " << e.what() << "\n";
      throw Failure{exit_code::usage_error};
    }
  }

  std::vector<Program> parse_all() {
    std::vector<Program> programs;
    for (const auto& f : opt_.kb_files) programs.push_back(guarded([&] { return parse_program_file(f); }));
    return programs;
  }

  Program load_kb() {
    auto merged = merge_programs(parse_all());
    if (auto* dup = std::get_if<ValidationReport>(&merged)) {
      print_diagnostics(*dup, err_);
      throw Failure{exit_code::validation_error};
    }
    Program program = std::get<Program>(std::move(merged));
    const ValidationReport report = validate_program(program);
    if (!report.ok()) {
      print_diagnostics(report, err_);
      throw Failure{exit_code::validation_error};
    }
    return program;
  }

  Goal parse_goal_arg() { return guarded([&] { return parse_goal(opt_.goal); }); }

  GroundProgram ground_checked(const Program& p, const Goal& goal) {
    GroundOptions gopt;
    gopt.max_instances = opt_.cap;
    return guarded([&] { return ground_program(p, goal, gopt); });
  }

  static void print_diagnostics(const ValidationReport& r, std::ostream& os) {
    for (const auto& d : r.diagnostics) {
      const char* sev = d.severity == Severity::error ? "error" : d.severity == Severity::warning ? "warning" : "info";
      os << sev << " [" << d.code << "] " << d.span.file << ":" << d.span.line << ":" << d.span.col << ": " << d.message
         << "\n";
    }
  }

  void print_trace(const TraceDocument& doc) {
    if (opt_.trace) {
      text() << render_trace(doc, color_);
      return;
    }
    for (const auto& line : doc.phases.back().lines) text() << line << "\n";
  }

  JsonOptions json_options() const {
    JsonOptions o;
    if (opt_.timing) o.timing_ms = elapsed_ms();
    return o;
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  void print_timing() {
    if (opt_.timing) text() << "elapsed_ms: " << elapsed_ms() << "\n";
  }

  void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    if (path == "-") {
      out_ << content;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err_ << "error: cannot write " << path << "\n";
      throw Failure{exit_code::usage_error};
    }
    f << content;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream discard_;
  bool color_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Argumentation-based selection of context-appropriate explainers", "argsel"};
  app.require_subcommand(1);
  Options opt;

  auto add_kb = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("kb", opt.kb_files, "knowledge base files (.gkb)")->check(CLI::ExistingFile);
    if (required) o->required();
  };
  auto add_outputs = [&](CLI::App* sub) {
    sub->add_flag("--trace", opt.trace, "print the full reasoning trace");
    sub->add_option("--json", opt.json_file, "write the JSON report to FILE ('-' for stdout)");
    sub->add_flag("--timing", opt.timing, "add wall-clock timing (non-canonical)");
  };
  std::string semantics = "grounded";
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", semantics, "grounded (default) or preferred (credulous, at most 20 arguments)")
        ->check(CLI::IsMember({"grounded", "preferred"}));
  };

  auto* validate = app.add_subcommand("validate", "check knowledge base files");
  add_kb(validate, true);
  validate->add_option("--json", opt.json_file, "write the validation report to FILE");

  auto* ground = app.add_subcommand("ground", "print the ground program for a goal");
  add_kb(ground, true);
  ground->add_option("--goal", opt.goal, "goal literal, e.g. neg(use(X=lime))")->required();
  ground->add_option("--cap", opt.cap, "maximum number of ground instances");

  auto* query = app.add_subcommand("query", "decide whether a goal literal is accepted");
  add_kb(query, true);
  query->add_option("--goal", opt.goal, "goal literal")->required();
  query->add_option("--dot", opt.dot_file, "write the labelled graph as DOT to FILE ('-' for stdout)");
  query->add_option("--cap", opt.cap, "maximum number of ground instances");
  add_semantics(query);
  add_outputs(query);

  auto* solve_af = app.add_subcommand("solve-af", "solve an abstract framework file (.af)");
  solve_af->add_option("file", opt.af_file, "framework file")->required()->check(CLI::ExistingFile);
  solve_af->add_option("--query", opt.af_query, "argument id to test for acceptance");
  solve_af->add_option("--dot", opt.dot_file, "write the labelled graph as DOT to FILE ('-' for stdout)");
  add_outputs(solve_af);

  auto* select = app.add_subcommand("select", "choose an explainer for the stakeholder");
  add_kb(select, false);
  select->add_option("--candidates", opt.candidates, "comma-separated explainer names")->required();
  select->add_option("--profiles", opt.profiles_dir, "directory of *.profile.json files")->required();
  select->add_option("--stakeholder", opt.stakeholder_file, "stakeholder model (.stakeholder.json)")
      ->required()
      ->check(CLI::ExistingFile);
  select->add_option("--cap", opt.cap, "maximum number of ground instances");
  add_semantics(select);
  add_outputs(select);

  auto* export_dot = app.add_subcommand("export-dot", "write the labelled framework for a goal as DOT");
  add_kb(export_dot, true);
  export_dot->add_option("--goal", opt.goal, "goal literal")->required();
  export_dot->add_option("-o,--output", opt.output_file, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage_error;
  }

  opt.semantics = semantics == "preferred" ? Semantics::preferred : Semantics::grounded;
  Session session(opt, out, err, color);
  try {
    if (validate->parsed()) return session.validate();
    if (ground->parsed()) return session.ground();
    if (query->parsed()) return session.query();
    if (solve_af->parsed()) return session.solve_af();
    if (select->parsed()) return session.select();
    if (export_dot->parsed()) return session.export_dot();
  } catch (const Failure& f) {
    return f.code;
  }
  return exit_code::usage_error;
}

}  // namespace argsel
