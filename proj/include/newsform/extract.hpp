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

// Text to NewsForm: analysis, pattern rules, merging, commonsense checks and
// final validation.

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "newsform/commonsense.hpp"
#include "newsform/diagnostics.hpp"
#include "newsform/lexicon.hpp"
#include "newsform/model.hpp"
#include "newsform/pipeline.hpp"
#include "newsform/rules.hpp"

namespace newsform {

struct ExtractResources {
  LexiconSet lexicons;
  std::vector<ExtractionRule> rules;
  KnowledgeBase kb;

  // Throws ResourceError, LexiconError or RuleError.
  static ExtractResources load(const std::filesystem::path& lexicon_dir,
                               const std::filesystem::path& rules_dir,
                               const std::filesystem::path& kb_dir);
  // lexicons/, rules/ and kb/ under the root.
  static ExtractResources load(const std::filesystem::path& root);
};

struct ExtractResult {
  NewsForm form;
  std::vector<Diagnostic> diagnostics;
  DocumentParse parse;
  std::vector<Fragment> fragments;
};

// The returned form always validates; events that do not are dropped with a
// diagnostic.
ExtractResult extract(std::string_view text, const ExtractResources& resources,
                      std::optional<UtcTime> dateline = std::nullopt);

}  // namespace newsform
