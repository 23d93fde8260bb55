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

#include "newsform/extract.hpp"

#include "newsform/validate.hpp"

namespace newsform {

ExtractResources ExtractResources::load(const std::filesystem::path& lexicon_dir,
                                        const std::filesystem::path& rules_dir,
                                        const std::filesystem::path& kb_dir) {
  ExtractResources r;
  r.lexicons = LexiconSet::load_dir(lexicon_dir);
  r.rules = load_rules_dir(rules_dir);
  r.kb = KnowledgeBase::load_dir(kb_dir);
  return r;
}

ExtractResources ExtractResources::load(const std::filesystem::path& root) {
  return load(root / "lexicons", root / "rules", root / "kb");
}

ExtractResult extract(std::string_view text, const ExtractResources& resources,
                      std::optional<UtcTime> dateline) {
  ExtractResult result;
  result.form.head.dateline_time = dateline;
  result.parse = analyze(text, resources.lexicons);
  result.fragments = apply_patterns(result.parse, resources.rules, &result.diagnostics);
  auto merged = merge_fragment_set(result.fragments, &result.diagnostics);
  auto checked = apply_commonsense(std::move(merged), resources.kb);
  for (auto& d : checked.diagnostics) result.diagnostics.push_back(std::move(d));

  for (std::size_t i = 0; i < checked.events.size(); ++i) {
    const NewsEvent& event = checked.events[i].event;
    auto report = validate_event(event);
    std::string where = std::string(event_name(event)) + "[" + std::to_string(i) + "]";
    for (const auto& w : report.warnings)
      result.diagnostics.push_back(Diagnostic{"validate", w.code, w.path, w.message});
    if (report.ok()) {
      result.form.events.push_back(event);
      continue;
    }
    for (const auto& e : report.errors)
      result.diagnostics.push_back(Diagnostic{"validate", e.code, e.path, e.message});
    result.diagnostics.push_back(
        Diagnostic{"validate", "dropped-event", where, "event failed validation"});
  }
  return result;
}

}  // namespace newsform
