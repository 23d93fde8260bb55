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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "newsform/codes.hpp"
#include "newsform/model.hpp"
#include "newsform/schema.hpp"
#include "newsform/validate.hpp"
#include "newsform/xml.hpp"

namespace newsform {

enum class DiagnosticKind { kSyntax, kSchema, kType };

std::string_view diagnostic_kind_name(DiagnosticKind k);

struct ParseDiagnostic {
  DiagnosticKind kind;
  std::string path;  // element path, e.g. InjuryFatality/KilledCount
  int line = 0;
  int column = 0;
  std::string message;
};

// All problems found while reading one document. A syntax error stops reading,
// so it is always the only entry; schema and type errors are collected across
// the whole tree.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<ParseDiagnostic> diagnostics);
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

// serialize_newsform() refuses documents that do not validate.
class InvalidDocument : public std::runtime_error {
 public:
  explicit InvalidDocument(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

NewsForm parse_newsform(std::string_view xml);
std::string serialize_newsform(const NewsForm& doc, const CodeTables& codes = shipped_code_tables());

// Element-level building blocks, shared with the rule engine.
NewsEvent decode_event(const xml::Element& element);
xml::Element encode_event(const NewsEvent& event);
xml::Element encode_value(std::string_view name, const FieldValue& value);
xml::Element encode_document(const NewsForm& doc);

// The one two-word closed-vocabulary value: "Martial Arts" reads as MartialArts.
std::string normalize_enum_text(const FieldSpec& spec, std::string_view text);

}  // namespace newsform
