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

#include "newsform/lexicon.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "newsform/decimal.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

constexpr std::array<std::string_view, 17> kLexKindNames = {
    "PersonName", "GivenName", "FamilyName", "Title",        "City",
    "State",      "Country",   "Region",     "Continent",    "OrgName",
    "OrgSuffix",  "SportsTeam", "CurrencyUnit", "Unit",     "NumberWord",
    "Pronoun",    "Product"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_coordinate(const Attributes& attrs, std::string_view key, int limit,
                      const std::string& source, int line) {
  for (const auto& [k, v] : attrs) {
    if (k != key) continue;
    auto d = Decimal::parse(v);
    if (!d) throw LexiconError(source, line, std::string(key) + " is not a number: " + v);
    if (d->compare(Decimal(-limit)) < 0 || d->compare(Decimal(limit)) > 0)
      throw LexiconError(source, line, std::string(key) + " out of range: " + v);
  }
}

}  // namespace

std::string_view lex_kind_name(LexKind k) { return kLexKindNames[static_cast<std::size_t>(k)]; }

std::optional<LexKind> parse_lex_kind(std::string_view name) {
  for (std::size_t i = 0; i < kLexKindNames.size(); ++i)
    if (kLexKindNames[i] == name) return static_cast<LexKind>(i);
  return std::nullopt;
}

std::optional<std::string_view> LexiconEntry::attr(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return std::string_view(v);
  return std::nullopt;
}

LexiconError::LexiconError(const std::string& source, int line, const std::string& message)
    : ResourceError(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

std::string surface_key(std::string_view surface, bool fold_case) {
  std::string key;
  std::size_t i = 0;
  while (i < surface.size()) {
    while (i < surface.size() && (surface[i] == ' ' || surface[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < surface.size() && surface[i] != ' ' && surface[i] != '\t') ++i;
    if (i > start) {
      if (!key.empty()) key.push_back(' ');
      key.append(surface.substr(start, i - start));
    }
  }
  return fold_case ? text::to_lower(key) : key;
}

Lexicon::Lexicon(std::string name, bool case_insensitive)
    : name_(std::move(name)), case_insensitive_(case_insensitive) {}

bool Lexicon::add(LexiconEntry entry) {
  std::string key = surface_key(entry.surface, case_insensitive_);
  auto [lo, hi] = index_.equal_range(key);
  for (auto it = lo; it != hi; ++it) {
    const auto& e = entries_[it->second];
    if (e.kind == entry.kind && e.normalized == entry.normalized) return false;
  }
  std::size_t words = 1;
  for (char c : key)
    if (c == ' ') ++words;
  max_words_ = std::max(max_words_, words);
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(entry));
  return true;
}

Lexicon Lexicon::parse(std::string_view content, std::string name, bool case_insensitive) {
  Lexicon lex(name, case_insensitive);
  int line_no = 0;
  for (auto raw : text::split(content, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (text::trim(raw).empty() || text::trim(raw)[0] == '#') continue;
    auto cols = text::split(raw, '\t');
    while (cols.size() > 3 && text::trim(cols.back()).empty()) cols.pop_back();
    if (cols.size() != 3 && cols.size() != 4)
      throw LexiconError(name, line_no,
                         "expected 3 or 4 tab-separated columns, found " +
                             std::to_string(cols.size()));
    LexiconEntry entry;
    entry.surface = std::string(text::trim(cols[0]));
    if (entry.surface.empty()) throw LexiconError(name, line_no, "empty surface");
    auto kind = parse_lex_kind(text::trim(cols[1]));
    if (!kind) throw LexiconError(name, line_no, "unknown kind '" + std::string(cols[1]) + "'");
    entry.kind = *kind;
    entry.normalized = std::string(text::trim(cols[2]));
    if (entry.normalized.empty()) throw LexiconError(name, line_no, "empty normalized value");
    if (cols.size() == 4 && !text::trim(cols[3]).empty()) {
      std::set<std::string> keys;
      for (auto pair : text::split(text::trim(cols[3]), ';')) {
        auto eq = pair.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == pair.size())
          throw LexiconError(name, line_no, "bad attribute '" + std::string(pair) + "'");
        std::string k(text::trim(pair.substr(0, eq)));
        std::string v(text::trim(pair.substr(eq + 1)));
        if (!keys.insert(k).second)
          throw LexiconError(name, line_no, "duplicate attribute '" + k + "'");
        entry.attributes.emplace_back(std::move(k), std::move(v));
      }
    }
    check_coordinate(entry.attributes, "lat", 90, name, line_no);
    check_coordinate(entry.attributes, "lon", 180, name, line_no);
    lex.add(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path, bool case_insensitive) {
  return parse(read_file(path), path.filename().string(), case_insensitive);
}

std::vector<const LexiconEntry*> Lexicon::lookup(std::string_view surface) const {
  std::vector<const LexiconEntry*> out;
  auto [lo, hi] = index_.equal_range(surface_key(surface, case_insensitive_));
  for (auto it = lo; it != hi; ++it) out.push_back(&entries_[it->second]);
  return out;
}

void LexiconSet::add(Lexicon lexicon) {
  max_words_ = std::max(max_words_, lexicon.max_words());
  lexicons_.push_back(std::move(lexicon));
}

LexiconSet LexiconSet::load_dir(const std::filesystem::path& dir) {
  auto manifest = dir / "MANIFEST";
  std::string content = read_file(manifest);
  LexiconSet set;
  int line_no = 0;
  for (auto line : text::split(content, '\n')) {
    ++line_no;
    auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::istringstream fields{std::string(trimmed)};
    std::string file, flag;
    fields >> file >> flag;
    if (!flag.empty() && flag != "nocase")
      throw LexiconError(manifest.string(), line_no, "unknown flag '" + flag + "'");
    set.add(Lexicon::load(dir / file, flag == "nocase"));
  }
  return set;
}

std::vector<const LexiconEntry*> LexiconSet::lookup(std::string_view surface) const {
  std::vector<const LexiconEntry*> out;
  for (const auto& lex : lexicons_) {
    auto found = lex.lookup(surface);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

LexMatch LexiconSet::longest_match(std::span<const std::string> tokens, std::size_t start) const {
  std::size_t limit = std::min(max_words_, tokens.size() - std::min(start, tokens.size()));
  for (std::size_t n = limit; n >= 1; --n) {
    std::string surface = tokens[start];
    for (std::size_t i = 1; i < n; ++i) surface += " " + tokens[start + i];
    auto found = lookup(surface);
    if (!found.empty()) return LexMatch{n, std::move(found)};
  }
  return {};
}

std::size_t LexiconSet::entry_count() const {
  std::size_t n = 0;
  for (const auto& lex : lexicons_) n += lex.size();
  return n;
}

}  // namespace newsform
