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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsform/model.hpp"

namespace newsform {

// B/G/X buckets of the geographic view.
enum class Sentiment { kPositive, kNegative, kOther };

std::string_view sentiment_name(Sentiment s);
std::optional<Sentiment> parse_sentiment(std::string_view name);

// One row: events of `event` kind whose `field` path is present (and equals
// `value` when given) classify as `sentiment`. A field of "*" matches every
// event of the kind.
struct SentimentRule {
  std::string event;
  std::string field;
  std::optional<std::string> value;
  Sentiment sentiment = Sentiment::kOther;
  bool operator==(const SentimentRule&) const = default;
};

class SentimentTable {
 public:
  SentimentTable() = default;
  explicit SentimentTable(std::vector<SentimentRule> rules) : rules_(std::move(rules)) {}

  // Rows: event<TAB>condition<TAB>sentiment, where condition is "*", a field
  // path, or path=value. '#' starts a comment line.
  static SentimentTable parse(std::string_view text);
  static SentimentTable load(const std::filesystem::path& path);

  // The table shipped in data/kb/sentiment.tsv, compiled in.
  static const SentimentTable& builtin();

  // First matching row wins; events matching no row are kOther.
  Sentiment classify(const NewsEvent& event) const;

  const std::vector<SentimentRule>& rules() const { return rules_; }

 private:
  std::vector<SentimentRule> rules_;
};

// Classification under the built-in table. Total over all 17 kinds.
Sentiment classify_sentiment(const NewsEvent& event);

}  // namespace newsform
