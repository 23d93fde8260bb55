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

// Pattern rules that turn resolved sentence parses into NewsForm fragments.
//
// Rule syntax, one rule per line group:
//
//   [@id] pattern => <Event>...?var...</Event>
//
// Pattern atoms: bare words (matched case-insensitively), ?Kind or ?Kind:var
// slots, [ ... ] optional groups and *n (skip up to n tokens). The template may
// continue on following lines until its root element closes.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "newsform/diagnostics.hpp"
#include "newsform/model.hpp"
#include "newsform/pipeline.hpp"
#include "newsform/schema.hpp"
#include "newsform/xml.hpp"

namespace newsform {

struct PatternAtom {
  enum class Type { kLiteral, kSlot, kOptional, kSkip };
  Type type = Type::kLiteral;
  std::string literal;              // lowercase
  EntityKind slot_kind = EntityKind::kPerson;
  std::string variable;
  std::vector<PatternAtom> children;  // kOptional
  std::size_t max_skip = 0;           // kSkip
};

struct ExtractionRule {
  std::string id;
  std::vector<PatternAtom> pattern;
  xml::Element templ;
  std::size_t event_kind = 0;
  int priority = 0;  // literal count
  std::size_t order = 0;
  int line = 0;
};

class RuleError : public std::runtime_error {
 public:
  RuleError(std::string rule_id, int line, const std::string& message);
  const std::string& rule_id() const { return rule_id_; }
  int line() const { return line_; }

 private:
  std::string rule_id_;
  int line_;
};

// Rules come back sorted by descending priority, file order breaking ties.
std::vector<ExtractionRule> compile_rules(std::string_view source, std::string_view origin = "rules");

// Every *.rules file in the directory, in file-name order.
std::vector<ExtractionRule> load_rules_dir(const std::filesystem::path& dir);

std::string pattern_to_string(const std::vector<PatternAtom>& pattern);

struct Binding {
  std::string variable;
  std::size_t first = 0;  // token span of the bound mention or noun group
  std::size_t last = 0;
  std::string entity_id;
  EntityReading reading;
};

// Other readings a bound slot could have taken, as values for one template
// element. Used by commonsense PreferReading rules.
struct Alternative {
  std::string path;  // e.g. Team
  std::vector<FieldValue> options;
};

struct Fragment {
  NewsEvent event;
  std::vector<Binding> bindings;
  std::size_t sentence_index = 0;
  std::string rule_id;
  std::vector<Alternative> alternatives;
};

std::vector<Fragment> apply_patterns(const DocumentParse& doc,
                                     const std::vector<ExtractionRule>& rules,
                                     std::vector<Diagnostic>* diagnostics = nullptr);

struct MergedEvent {
  NewsEvent event;
  std::vector<Alternative> alternatives;
};

// One event per variant, in order of first appearance. Conflicting values keep
// the earliest fragment's value and add a warning.
std::vector<MergedEvent> merge_fragment_set(const std::vector<Fragment>& fragments,
                                            std::vector<Diagnostic>* diagnostics = nullptr);
std::vector<NewsEvent> merge_fragments(const std::vector<Fragment>& fragments,
                                       std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace newsform
