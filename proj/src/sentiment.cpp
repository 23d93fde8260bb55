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

#include "newsform/sentiment.hpp"

#include <fstream>
#include <sstream>

#include "newsform/codes.hpp"
#include "newsform/schema.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

// Kept in step with data/kb/sentiment.tsv (a test compares the two).
constexpr std::string_view kBuiltinTable =
    "InjuryFatality\t*\tNegative\n"
    "War\t*\tNegative\n"
    "Earnings\tGoodBad=Bad\tNegative\n"
    "Deal\tDealStatus=Failed\tNegative\n"
    "LegalEvent\tAccusationAction\tNegative\n"
    "Weather\tDeclaredState\tNegative\n"
    "Earnings\tGoodBad=Good\tPositive\n"
    "Competition\tCompetitionOutcome=Win\tPositive\n"
    "IPO\t*\tPositive\n"
    "Negotiation\tNegotiationStatus=AgreementReached\tPositive\n"
    "NewProduct\tProductStatus=Released\tPositive\n";

}  // namespace

std::string_view sentiment_name(Sentiment s) {
  switch (s) {
    case Sentiment::kPositive: return "Positive";
    case Sentiment::kNegative: return "Negative";
    case Sentiment::kOther: return "Other";
  }
  return "Other";
}

std::optional<Sentiment> parse_sentiment(std::string_view name) {
  if (name == "Positive") return Sentiment::kPositive;
  if (name == "Negative") return Sentiment::kNegative;
  if (name == "Other") return Sentiment::kOther;
  return std::nullopt;
}

SentimentTable SentimentTable::parse(std::string_view text) {
  std::vector<SentimentRule> rules;
  int line_no = 0;
  for (auto line : text::split(text, '\n')) {
    ++line_no;
    auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto cols = text::split(trimmed, '\t');
    auto fail = [&](const std::string& why) {
      throw ResourceError("sentiment table line " + std::to_string(line_no) + ": " + why);
    };
    if (cols.size() != 3) fail("expected 3 tab-separated columns");
    SentimentRule rule;
    rule.event = std::string(cols[0]);
    auto kind = event_kind(rule.event);
    if (!kind) fail("unknown event '" + rule.event + "'");
    auto cond = cols[1];
    auto eq = cond.find('=');
    rule.field = std::string(cond.substr(0, eq));
    if (eq != std::string_view::npos) rule.value = std::string(cond.substr(eq + 1));
    if (rule.field != "*" && !resolve_path(*kind, split_path(rule.field)))
      fail("unknown field '" + rule.field + "' of " + rule.event);
    auto s = parse_sentiment(cols[2]);
    if (!s) fail("unknown sentiment '" + std::string(cols[2]) + "'");
    rule.sentiment = *s;
    rules.push_back(std::move(rule));
  }
  return SentimentTable(std::move(rules));
}

SentimentTable SentimentTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open sentiment table " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const SentimentTable& SentimentTable::builtin() {
  static const SentimentTable table = parse(kBuiltinTable);
  return table;
}

Sentiment SentimentTable::classify(const NewsEvent& event) const {
  auto name = event_name(event);
  for (const auto& rule : rules_) {
    if (rule.event != name) continue;
    if (rule.field == "*") return rule.sentiment;
    auto values = values_at(event, split_path(rule.field));
    if (values.empty()) continue;
    if (!rule.value) return rule.sentiment;
    for (const auto& v : values)
      if (leaf_text(v) == *rule.value) return rule.sentiment;
  }
  return Sentiment::kOther;
}

Sentiment classify_sentiment(const NewsEvent& event) {
  return SentimentTable::builtin().classify(event);
}

}  // namespace newsform
