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

// Gazetteer and word lexicons: surface form -> entity readings.

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newsform/codes.hpp"

namespace newsform {

enum class LexKind {
  kPersonName,
  kGivenName,
  kFamilyName,
  kTitle,
  kCity,
  kState,
  kCountry,
  kRegion,
  kContinent,
  kOrgName,
  kOrgSuffix,
  kSportsTeam,
  kCurrencyUnit,
  kUnit,
  kNumberWord,
  kPronoun,
  kProduct,
};

std::string_view lex_kind_name(LexKind k);
std::optional<LexKind> parse_lex_kind(std::string_view name);

using Attributes = std::vector<std::pair<std::string, std::string>>;

struct LexiconEntry {
  std::string surface;
  LexKind kind;
  std::string normalized;
  Attributes attributes;

  std::optional<std::string_view> attr(std::string_view key) const;
  bool operator==(const LexiconEntry&) const = default;
};

// Malformed lexicon line.
class LexiconError : public ResourceError {
 public:
  LexiconError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Multiword surfaces are matched token by token; the key of a surface is its
// whitespace-separated words joined by single spaces.
std::string surface_key(std::string_view surface, bool fold_case);

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::string name, bool case_insensitive);

  // TSV: surface<TAB>kind<TAB>normalized[<TAB>k=v;k=v], '#' comments.
  static Lexicon parse(std::string_view text, std::string name, bool case_insensitive = false);
  static Lexicon load(const std::filesystem::path& path, bool case_insensitive = false);

  // Adds an entry unless the (surface, kind, normalized) triple is present.
  // Returns whether it was added.
  bool add(LexiconEntry entry);

  std::vector<const LexiconEntry*> lookup(std::string_view surface) const;

  const std::string& name() const { return name_; }
  bool case_insensitive() const { return case_insensitive_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t max_words() const { return max_words_; }

  bool operator==(const Lexicon& other) const {
    return name_ == other.name_ && case_insensitive_ == other.case_insensitive_ &&
           entries_ == other.entries_;
  }

 private:
  std::string name_;
  bool case_insensitive_ = false;
  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, std::size_t> index_;
  std::size_t max_words_ = 0;
};

struct LexMatch {
  std::size_t length = 0;  // tokens consumed
  std::vector<const LexiconEntry*> entries;
};

class LexiconSet {
 public:
  void add(Lexicon lexicon);

  // Reads <dir>/MANIFEST: one file name per line, optional "nocase" flag.
  static LexiconSet load_dir(const std::filesystem::path& dir);

  // Union over all lexicons in load order, then file order.
  std::vector<const LexiconEntry*> lookup(std::string_view surface) const;

  // Longest multiword surface starting at tokens[start]. length 0 when none.
  LexMatch longest_match(std::span<const std::string> tokens, std::size_t start) const;

  const std::vector<Lexicon>& lexicons() const { return lexicons_; }
  std::size_t entry_count() const;

 private:
  std::vector<Lexicon> lexicons_;
  std::size_t max_words_ = 0;
};

}  // namespace newsform
