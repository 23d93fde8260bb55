// Copyright 2026 The NewsForm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Final disambiguation and validation of merged events against a small
// knowledge base of declarative checks.
//
// kb/commonsense.tsv rows: id<TAB>scope<TAB>check<TAB>action<TAB>message
//
//   compatible A B via TABLE      (A, B) must appear in TABLE; '*' matches any
//   equal A B [via TABLE:KEY]     values at A and B agree; when B is absent the
//                                 value is looked up in TABLE by the text at KEY
//   ordered DIR X Y via TABLE     TABLE maps a DIR value to one of < = >, the
//                                 required relation of X to Y
//
// Actions: RejectFragment, DropField[:Path] (default: B, or DIR for ordered),
// PreferReading[:Path] (re-bind an alternative reading at Path, default B's
// first step, that satisfies the check).

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "newsform/diagnostics.hpp"
#include "newsform/model.hpp"
#include "newsform/rules.hpp"

namespace newsform {

struct CommonsenseCheck {
  enum class Type { kCompatible, kEqual, kOrdered };
  Type type = Type::kCompatible;
  std::vector<std::string> a;  // field paths, split on '/'
  std::vector<std::string> b;
  std::vector<std::string> c;  // ordered: right-hand operand
  std::string table;
  std::vector<std::string> key;  // equal: lookup key path
  bool operator==(const CommonsenseCheck&) const = default;
};

struct CommonsenseRule {
  enum class Action { kRejectFragment, kDropField, kPreferReading };
  std::string id;
  std::string scope;  // event element name
  CommonsenseCheck check;
  Action action = Action::kRejectFragment;
  std::vector<std::string> target;  // DropField / PreferReading path
  std::string message;
  bool operator==(const CommonsenseRule&) const = default;
};

std::string_view action_code(CommonsenseRule::Action action);

// Rows of a compatibility table.
using KbTable = std::vector<std::vector<std::string>>;

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Parses commonsense rows; tables must already be present for every rule
  // that names one. Throws ResourceError with the line number on bad rows.
  void add_rules(std::string_view text, std::string_view origin = "commonsense.tsv");
  void add_table(std::string name, std::string_view text);

  // commonsense.tsv plus every other *.tsv in the directory as a table.
  static KnowledgeBase load_dir(const std::filesystem::path& dir);

  const std::vector<CommonsenseRule>& rules() const { return rules_; }
  const KbTable* table(std::string_view name) const;

 private:
  std::vector<CommonsenseRule> rules_;
  std::map<std::string, KbTable, std::less<>> tables_;
};

struct CommonsenseResult {
  std::vector<MergedEvent> events;
  std::vector<Diagnostic> diagnostics;
};

// Runs every rule on every in-scope event until nothing changes.
CommonsenseResult apply_commonsense(std::vector<MergedEvent> events, const KnowledgeBase& kb);

struct CommonsenseEvents {
  std::vector<NewsEvent> events;
  std::vector<Diagnostic> diagnostics;
};

CommonsenseEvents apply_commonsense(const std::vector<NewsEvent>& events, const KnowledgeBase& kb);

}  // namespace newsform
