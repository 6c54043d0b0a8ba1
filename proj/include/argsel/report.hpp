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

// Human- and machine-readable renderings of a solve: the four-phase reasoning
// trace, Graphviz DOT and canonical JSON. All output is byte-stable for equal
// inputs; wall-clock data only appears when explicitly requested.

#ifndef ARGSEL_REPORT_HPP
#define ARGSEL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "argsel/framework.hpp"
#include "argsel/selector.hpp"
#include "argsel/solver.hpp"

namespace argsel {

inline constexpr int kSchemaVersion = 1;

struct TracePhase {
  std::string title;
  std::vector<std::string> lines;
};

struct TraceDocument {
  std::string query;
  bool accepted = false;
  std::vector<std::string> supporting_arguments;
  std::vector<PreferenceDecision> preference_changes;  // flips and drops only
  std::vector<LabelStep> steps;
  std::vector<std::string> position;  // IN arguments
  std::vector<TracePhase> phases;     // construction, preferences, labelling, result
};

TraceDocument build_trace(const ArgumentationFramework& af, const Labelling& labelling, const QueryVerdict& verdict);

/// Plain text; IN/OUT/UNDEC are ANSI-coloured when `color` is set.
std::string render_trace(const TraceDocument& doc, bool color = false);

std::string to_dot(const ArgumentationFramework& af, const Labelling& labelling);

struct QueryReport {
  std::vector<std::string> kb_files;
  std::string query;
  ArgumentationFramework framework;
  QueryVerdict verdict;
};

struct JsonOptions {
  std::optional<double> timing_ms;  // non-canonical block, omitted by default
};

std::string to_json(const QueryReport& report, const JsonOptions& options = {});
std::string to_json(const SelectionReport& report, const std::vector<std::string>& kb_files,
                    const JsonOptions& options = {});
std::string to_json(const TraceDocument& doc);

}  // namespace argsel

#endif  // ARGSEL_REPORT_HPP
