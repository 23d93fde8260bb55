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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "newsform/extract.hpp"
#include "newsform/model.hpp"
#include "newsform/padoof.hpp"
#include "vocabulary_oracle.hpp"

namespace newsform::testing {

std::filesystem::path test_data();
std::filesystem::path repo_data();
std::filesystem::path corpus_dir();
std::string read_file(const std::filesystem::path& path);

// Loaded once per process from the repository data directory.
const ExtractResources& shipped_resources();

extern const char* const kIntroParagraph;
extern const char* const kJospinPassage;
extern const char* const kFedWatchSentence;

// Random valid documents covering every event kind and leaf type.
class DocGenerator {
 public:
  explicit DocGenerator(std::uint32_t seed) : rng_(seed) {}

  NewsEvent event(std::size_t kind);
  NewsForm document(std::size_t max_events);

  std::mt19937& rng() { return rng_; }

  // Used by the reflection filler; not part of the intended surface.
  bool coin(double p);
  std::string text_value(const FieldSpec& spec);
  std::int64_t int_value(const FieldSpec& spec);
  Decimal decimal_value(const FieldSpec& spec);
  UtcTime time_value();

 private:
  std::mt19937 rng_;
};

// --- query oracle ------------------------------------------------------------

struct OracleClause {
  std::vector<std::string> path;
  std::string op;
  std::string value;
};

struct OracleSort {
  std::size_t kind = 0;
  std::vector<std::string> path;
  bool descending = false;
};

struct OracleQuery {
  std::optional<std::size_t> kind;
  std::vector<OracleClause> clauses;
  std::optional<OracleSort> sort;
  std::optional<std::string> since;
  std::optional<std::string> until;

  std::string text() const;
};

// One (path, text) pair per element of the encoded event, leaves and records.
struct XmlNode {
  std::string path;
  const xml::Element* element;
};
std::vector<XmlNode> xml_nodes(const xml::Element& event);
std::vector<XmlNode> xml_nodes(xml::Element&&) = delete;  // nodes point into the element

// Doc ids in expected order, computed by scanning the encoded XML of every doc.
std::vector<std::string> brute_force(const std::vector<CorpusDoc>& docs, const OracleQuery& q);

// Queries over every variant, leaf type and operator present in docs, padded
// with random combinations up to at least min_count.
std::vector<OracleQuery> generate_queries(const std::vector<CorpusDoc>& docs, std::uint32_t seed,
                                          std::size_t min_count);

// (kind, path, value) triples recomputed from the encoded XML.
std::map<PostingKey, std::set<std::string>> brute_force_postings(const std::vector<CorpusDoc>& docs);

// Document text placing value at the oracle's scope/element, and the path
// prefix under which that leaf is reported.
std::pair<std::string, std::string> vocabulary_probe(const VocabularyOracle& o, const std::string& value);

// --- CLI ---------------------------------------------------------------------

struct CommandResult {
  int status = -1;
  std::string out;
  std::string err;
};

CommandResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "");

std::filesystem::path scratch_dir(const std::string& name);

}  // namespace newsform::testing
