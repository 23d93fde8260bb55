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

#include <optional>
#include <string>
#include <vector>

#include "newsform/codes.hpp"
#include "newsform/model.hpp"

namespace newsform {

struct Issue {
  std::optional<std::size_t> event;  // index into NewsForm::events; empty for Head
  std::string path;                  // e.g. InjuryFatality/AtLocation/Latitude
  std::string code;                  // e.g. out-of-range, not-in-vocabulary
  std::string message;
  bool operator==(const Issue&) const = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
  bool operator==(const ValidationReport&) const = default;
};

// Error codes.
namespace issue {
inline constexpr const char* kNotInVocabulary = "not-in-vocabulary";
inline constexpr const char* kUnknownCode = "unknown-code";
inline constexpr const char* kOutOfRange = "out-of-range";
inline constexpr const char* kBadToken = "bad-token";
inline constexpr const char* kBadTicker = "bad-ticker";
inline constexpr const char* kBadText = "bad-text";
inline constexpr const char* kExclusive = "mutually-exclusive";
inline constexpr const char* kMissing = "missing-required";
inline constexpr const char* kAmbiguousParty = "ambiguous-party";
}  // namespace issue

// Checks every invariant of the document. Findings are ordered by document
// order; the function never throws for content problems.
ValidationReport validate(const NewsForm& doc, const CodeTables& codes = shipped_code_tables());

// Single event; paths start with the event element name.
ValidationReport validate_event(const NewsEvent& event,
                                const CodeTables& codes = shipped_code_tables());

bool in_vocabulary(const FieldSpec& spec, std::string_view value);

}  // namespace newsform
