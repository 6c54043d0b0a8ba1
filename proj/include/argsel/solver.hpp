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

// Grounded labelling and extension checks over an ArgumentationFramework.

#ifndef ARGSEL_SOLVER_HPP
#define ARGSEL_SOLVER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "argsel/framework.hpp"

namespace argsel {

enum class Label { in, out, undec };

const char* to_string(Label l);

struct LabelStep {
  std::string argument;
  Label label = Label::undec;
  // IN: the attackers already OUT (empty when unattacked). OUT: the IN attackers.
  std::vector<std::string> justification;
  int round = 0;
};

struct Labelling {
  std::map<std::string, Label> assignment;
  std::vector<LabelStep> steps;

  std::vector<std::string> with(Label l) const;
};

enum class Semantics { conflict_free, admissible, grounded, preferred };

struct Extension {
  std::vector<std::string> members;  // sorted
  Semantics semantics = Semantics::admissible;

  bool operator==(const Extension&) const = default;
};

struct QueryVerdict {
  std::string query;
  bool accepted = false;
  std::vector<std::string> supporting_arguments;  // IN arguments concluding the query
  Labelling labelling;
};

enum class AcceptanceMode { credulous, skeptical };

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least fixpoint: each round first labels IN every unlabelled argument whose
/// attackers are all OUT, then labels OUT every unlabelled argument with an IN
/// attacker. Whatever is left when a round changes nothing is UNDEC.
Labelling grounded_labelling(const ArgumentationFramework& af);

bool is_conflict_free(const ArgumentationFramework& af, const std::vector<std::string>& s);
bool is_admissible(const ArgumentationFramework& af, const std::vector<std::string>& s);

inline constexpr size_t kEnumerationLimit = 20;

/// Brute force over all subsets; sorted by size, then lexicographically.
/// Throws SizeLimitError above kEnumerationLimit arguments.
std::vector<Extension> enumerate_admissible(const ArgumentationFramework& af);
std::vector<Extension> enumerate_preferred(const ArgumentationFramework& af);

/// Grounded semantics has a single extension, so both modes coincide. Under
/// `Semantics::preferred` the query must hold in some (credulous) or every
/// (skeptical) preferred extension; supporting_arguments then lists every
/// argument concluding the query in any extension that counts, and the
/// labelling is still the grounded one.
QueryVerdict accept(const ArgumentationFramework& af, const Literal& query,
                    AcceptanceMode mode = AcceptanceMode::skeptical, Semantics semantics = Semantics::grounded);

/// Abstract mode: the argument with this id is labelled IN.
QueryVerdict accept_argument(const ArgumentationFramework& af, const std::string& id);

}  // namespace argsel

#endif  // ARGSEL_SOLVER_HPP
