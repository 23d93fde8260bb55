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

// Front half of text extraction: sentences, part-of-speech tags, noun groups,
// entity mentions and coreference ids.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "newsform/lexicon.hpp"
#include "newsform/model.hpp"

namespace newsform {

enum class Pos { kDet, kNoun, kPropn, kPron, kVerb, kAdj, kAdv, kNum, kPrep, kConj, kPunct, kSym, kOther };

std::string_view pos_name(Pos p);

struct Span {
  std::size_t start = 0;  // byte offsets into the source text, end exclusive
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  Pos pos = Pos::kOther;
  bool operator==(const Token&) const = default;
};

struct NounGroup {
  std::size_t first = 0;  // token indices, inclusive
  std::size_t last = 0;
  std::size_t head = 0;
  bool operator==(const NounGroup&) const = default;
};

enum class EntityKind {
  kPerson,
  kLocation,
  kOrganization,
  kProduct,
  kNumber,
  kPercent,
  kMoney,
  kDuration,
  kTemperature,
  kSpeed,
  kDistance,
  kDate,
};

std::string_view entity_kind_name(EntityKind k);
std::optional<EntityKind> parse_entity_kind(std::string_view name);

// Scalar with a unit: percentages, durations, temperatures, speeds, distances
// and bare numbers (empty unit).
struct Quantity {
  Decimal value;
  std::string unit;
  bool operator==(const Quantity&) const = default;
};

// Product names and dates carry their normalized text.
using ReadingValue = std::variant<Person, Location, Organization, Money, Quantity, std::string>;

struct EntityReading {
  EntityKind kind;
  ReadingValue value;
  Attributes attributes;  // lexicon extras such as sport, maker, carrier
  bool operator==(const EntityReading&) const = default;
};

std::string describe_reading(const EntityReading& r);

struct EntityMention {
  std::size_t first = 0;  // token indices, inclusive
  std::size_t last = 0;
  std::vector<EntityReading> readings;
  std::optional<std::string> resolved_id;
  bool ambiguous = false;  // pronoun with no antecedent or several candidates
  bool pronoun = false;
  bool operator==(const EntityMention&) const = default;
};

struct SentenceParse {
  Span source_span;
  std::vector<Token> tokens;
  std::vector<NounGroup> noun_groups;
  std::vector<EntityMention> mentions;
  bool operator==(const SentenceParse&) const = default;
};

struct DocumentParse {
  std::string text;
  std::vector<SentenceParse> sentences;
  // Coreference id -> merged reading of every mention sharing it.
  std::map<std::string, EntityReading> entities;
};

// Sentence spans cover all non-whitespace input in order.
std::vector<Span> split_sentences(std::string_view text);

std::vector<Token> tokenize(std::string_view text, Span span);
Pos tag_word(std::string_view word, bool sentence_initial);
std::vector<Token> tag_pos(std::string_view text, Span span);

std::vector<NounGroup> chunk_noun_groups(const std::vector<Token>& tokens);

// Family names learned from earlier sentences of the same document.
struct DocumentMemory {
  std::map<std::string, Person> family_names;
};

// Fills sentence.mentions (and may widen noun groups to cover a lexicon match).
void parse_entities(SentenceParse& sentence, const LexiconSet& lexicons,
                    DocumentMemory* memory = nullptr);

// Assigns resolved ids across the document; returns the merged entity table.
std::map<std::string, EntityReading> resolve_references(std::vector<SentenceParse>& sentences);

// Runs every stage above.
DocumentParse analyze(std::string_view text, const LexiconSet& lexicons);

// offset<TAB>text<TAB>pos per token, then NG and M overlay lines per sentence.
std::string debug_dump(const DocumentParse& doc);

}  // namespace newsform
