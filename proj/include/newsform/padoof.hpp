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

// Corpus index and query engine over NewsForm files.
//
// Query syntax:
//
//   [Variant[.Path.To.Field OP value [and Variant.Path OP value]...]]
//   [sort Variant.Path asc|desc] [since TIME] [until TIME]
//
// OP is one of = != < <= > >= contains. Values are bare words or "quoted".
// All predicates of one query must name the same variant and hold on the same
// event. Money fields take "2000000 USD" (either order); a bare variant name
// matches every event of that kind and an empty query matches every event.

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "newsform/diagnostics.hpp"
#include "newsform/model.hpp"
#include "newsform/schema.hpp"
#include "newsform/sentiment.hpp"

namespace newsform {

struct CorpusDoc {
  std::string id;  // file name without .newsform.xml
  NewsForm form;
  std::filesystem::path source;
};

struct PostingKey {
  std::size_t kind = 0;
  std::string path;   // e.g. Target/Ticker
  std::string value;  // canonical leaf text; numbers normalized
  auto operator<=>(const PostingKey&) const = default;
};

// Canonical posting text of a leaf: numbers lose trailing fractional zeros.
std::string posting_value(const FieldValue& leaf);

class CorpusIndex {
 public:
  CorpusIndex() = default;

  // Unreadable or invalid files are skipped with a diagnostic.
  static CorpusIndex build(const std::vector<std::filesystem::path>& paths,
                           std::vector<Diagnostic>* diagnostics = nullptr);
  // Every *.newsform.xml directly inside the directory.
  static CorpusIndex build_dir(const std::filesystem::path& dir,
                               std::vector<Diagnostic>* diagnostics = nullptr);

  // Documents are kept in id order; an id already present is replaced.
  void add(CorpusDoc doc);

  const std::vector<CorpusDoc>& docs() const { return docs_; }
  const CorpusDoc* find(std::string_view id) const;
  const std::map<PostingKey, std::set<std::string>>& postings() const { return postings_; }
  const std::multimap<UtcTime, std::string>& time_index() const { return time_index_; }

  bool operator==(const CorpusIndex&) const;

 private:
  void reindex();

  std::vector<CorpusDoc> docs_;
  std::map<PostingKey, std::set<std::string>> postings_;
  std::multimap<UtcTime, std::string> time_index_;
};

enum class QueryOp { kEq, kNe, kLt, kLe, kGt, kGe, kContains };

std::string_view query_op_name(QueryOp op);

struct Predicate {
  std::size_t kind = 0;
  std::vector<std::string> path;
  QueryOp op = QueryOp::kEq;
  std::string value;
};

struct SortKey {
  std::size_t kind = 0;
  std::vector<std::string> path;
  bool descending = false;
};

struct QueryExpr {
  std::optional<std::size_t> kind;  // empty: any event
  std::vector<Predicate> predicates;
  std::optional<SortKey> sort;
  std::optional<UtcTime> since;
  std::optional<UtcTime> until;
};

class QueryError : public std::runtime_error {
 public:
  QueryError(const std::string& message, std::size_t column)
      : std::runtime_error(message), column_(column) {}
  // Byte offset into the query text the message refers to.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Parses and type-checks against the schema. Throws QueryError.
QueryExpr parse_query(std::string_view text);

// Query text followed by a caret line under the error column.
std::string annotate_query_error(std::string_view text, const QueryError& error);

bool event_matches(const NewsEvent& event, const QueryExpr& q);
bool in_window(const NewsForm& form, const QueryExpr& q);

struct QueryHit {
  std::string doc_id;
  std::filesystem::path source;
  std::optional<std::string> sort_value;  // canonical text of the sort key
};

// Docs with at least one matching event. Sorted by the sort key (missing
// values last), then doc id.
std::vector<QueryHit> query(const CorpusIndex& index, const QueryExpr& q);
std::vector<QueryHit> query(const CorpusIndex& index, std::string_view text);

std::string format_hits(const std::vector<QueryHit>& hits);

enum class Bucket { kDay, kWeek };

struct BucketCount {
  UtcTime start;
  std::size_t count = 0;
  bool operator==(const BucketCount&) const = default;
};

struct StatsResult {
  std::vector<BucketCount> buckets;  // contiguous, zero-filled
  std::size_t undated = 0;           // matching events in docs without a dateline
};

// Weeks start on Monday 00:00 UTC.
UtcTime bucket_start(UtcTime t, Bucket bucket);
StatsResult stats(const CorpusIndex& index, std::size_t kind, Bucket bucket);

std::string format_stats(const StatsResult& result);

struct Tally {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t other = 0;
  std::size_t total() const { return positive + negative + other; }
  void add(Sentiment s);
  bool operator==(const Tally&) const = default;
};

struct GeoDistribution {
  std::map<std::string, Tally> countries;
  Tally unlocated;
  bool operator==(const GeoDistribution&) const = default;
};

// AtLocation/Country, then ToLocation/Country, then the first other Country
// leaf of the event.
std::optional<std::string> event_country(const NewsEvent& event);

GeoDistribution geo_distribution(const CorpusIndex& index, const QueryExpr& q,
                                 const SentimentTable& table = SentimentTable::builtin());

// country<TAB>positive<TAB>negative<TAB>other rows, then UNLOCATED.
std::string format_geo(const GeoDistribution& geo);

}  // namespace newsform
