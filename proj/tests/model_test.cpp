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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "newsform/codec.hpp"
#include "newsform/schema.hpp"
#include "newsform/sentiment.hpp"
#include "newsform/validate.hpp"
#include "support.hpp"
#include "vocabulary_oracle.hpp"

using namespace newsform;
using namespace newsform::testing;

namespace {

const VocabularyOracle* oracle_for(std::string scope, std::string_view element) {
  if (scope == "Competition" && element == "Sport") scope = "Organization";
  for (const auto& o : vocabulary_oracle())
    if (o.scope == scope && o.element == element) return &o;
  return nullptr;
}

std::set<std::string> canonical(const std::vector<std::string>& values) {
  std::set<std::string> out;
  for (auto v : values) out.insert(v == "Martial Arts" ? "MartialArts" : v);
  return out;
}

void collect_enums(const std::string& scope, const std::vector<FieldInfo>& fields,
                   std::map<std::pair<std::string, std::string>, FieldSpec>& out) {
  for (const auto& f : fields) {
    if (f.is_leaf() && f.spec.kind == LeafKind::kEnum) out[{scope, std::string(f.name)}] = f.spec;
  }
}

}  // namespace

TEST(VocabularyClosure, EveryListedValueIsAccepted) {
  for (const auto& o : vocabulary_oracle()) {
    for (const auto& value : o.values) {
      auto [doc, path] = vocabulary_probe(o, value);
      NewsForm form = parse_newsform(doc);
      auto report = validate(form);
      EXPECT_TRUE(report.ok()) << o.scope << "/" << o.element << " = " << value << ": "
                               << (report.errors.empty() ? "" : report.errors[0].message);
    }
  }
}

TEST(VocabularyClosure, MutatedValuesAreRejected) {
  for (const auto& o : vocabulary_oracle()) {
    std::set<std::string> allowed = canonical(o.values);
    for (const auto& value : o.values) {
      std::string lowered = value;
      std::transform(lowered.begin(), lowered.end(), lowered.begin(), ::tolower);
      for (const std::string& bad : {value + "x", lowered}) {
        if (allowed.count(bad)) continue;
        auto [doc, path] = vocabulary_probe(o, bad);
        NewsForm form = parse_newsform(doc);
        auto report = validate(form);
        ASSERT_EQ(report.errors.size(), 1u) << o.scope << "/" << o.element << " = " << bad;
        EXPECT_EQ(report.errors[0].code, issue::kNotInVocabulary);
        EXPECT_TRUE(report.errors[0].path.starts_with(path)) << report.errors[0].path;
        EXPECT_TRUE(report.errors[0].path.ends_with(o.element)) << report.errors[0].path;
      }
    }
  }
}

TEST(VocabularyClosure, SchemaVocabulariesMatchTheTables) {
  std::map<std::pair<std::string, std::string>, FieldSpec> enums;
  collect_enums("Person", record_fields(RecordType::kPerson), enums);
  collect_enums("Location", record_fields(RecordType::kLocation), enums);
  collect_enums("Organization", record_fields(RecordType::kOrganization), enums);
  for (std::size_t k = 0; k < kEventKindCount; ++k)
    collect_enums(std::string(event_name(k)), event_fields(k), enums);

  for (const auto& [key, spec] : enums) {
    const VocabularyOracle* o = oracle_for(key.first, key.second);
    ASSERT_NE(o, nullptr) << "no table for " << key.first << "/" << key.second;
    std::set<std::string> schema(spec.vocab.begin(), spec.vocab.end());
    EXPECT_EQ(schema, canonical(o->values)) << key.first << "/" << key.second;
  }
  for (const auto& o : vocabulary_oracle())
    EXPECT_TRUE(enums.count({o.scope, o.element})) << o.scope << "/" << o.element << " missing from schema";
}

TEST(VocabularyClosure, MartialArtsReadsAsOneToken) {
  auto form = parse_newsform("<NewsForm><Competition><Sport>Martial Arts</Sport></Competition></NewsForm>");
  EXPECT_EQ(std::get<Competition>(form.events[0]).sport, "MartialArts");
  EXPECT_NE(serialize_newsform(form).find("<Sport>MartialArts</Sport>"), std::string::npos);
}

TEST(Validate, ExampleDocumentHasNoErrors) {
  auto form = parse_newsform(read_file(test_data() / "earthquake.newsform.xml"));
  auto report = validate(form);
  EXPECT_TRUE(report.errors.empty());
}

TEST(Validate, LatitudeOutOfRange) {
  auto form = parse_newsform(read_file(test_data() / "earthquake.newsform.xml"));
  std::get<InjuryFatality>(form.events[0]).at_location->latitude = Decimal(95);
  auto report = validate(form);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].path, "InjuryFatality/AtLocation/Latitude");
  EXPECT_EQ(report.errors[0].code, issue::kOutOfRange);
  EXPECT_EQ(report.errors[0].event, std::optional<std::size_t>(0));
}

TEST(Validate, LatitudeBoundsAreInclusive) {
  NewsForm form;
  InjuryFatality e;
  e.at_location = Location{};
  e.at_location->latitude = Decimal(90);
  e.at_location->longitude = Decimal(-180);
  form.events.push_back(e);
  EXPECT_TRUE(validate(form).ok());
  std::get<InjuryFatality>(form.events[0]).at_location->latitude = Decimal(9001, 2);
  EXPECT_FALSE(validate(form).ok());
}

TEST(Validate, FedActionOutsideVocabulary) {
  NewsForm form;
  FedWatch fw;
  fw.fed_action = "Increase";
  form.events.push_back(fw);
  auto report = validate(form);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].path, "FedWatch/FedAction");
  EXPECT_EQ(report.errors[0].code, issue::kNotInVocabulary);
}

TEST(Validate, CodesAndTokens) {
  NewsForm form;
  InjuryFatality e;
  e.at_location = Location{};
  e.at_location->country = "XXX";
  e.at_location->state = "ZZ";
  e.cause_event = "two words";
  form.events.push_back(e);
  auto report = validate(form);
  std::set<std::string> codes;
  for (const auto& i : report.errors) codes.insert(i.code);
  EXPECT_TRUE(codes.count(issue::kUnknownCode));
  EXPECT_GE(report.errors.size(), 2u);
}

TEST(Validate, CrossFieldRules) {
  NewsForm form;
  Earnings e;
  e.earnings_amount = Money{Decimal(1), "USD"};
  e.loss = Money{Decimal(2), "USD"};
  form.events.push_back(e);
  form.events.push_back(Succession{});
  auto report = validate(form);
  ASSERT_EQ(report.errors.size(), 2u);
  EXPECT_EQ(report.errors[0].code, issue::kExclusive);
  EXPECT_EQ(report.errors[1].code, issue::kMissing);
  EXPECT_EQ(report.errors[1].event, std::optional<std::size_t>(1));
}

TEST(Validate, RandomDocumentsAreValid) {
  DocGenerator gen(7);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(validate(gen.document(4)).ok());
}

TEST(UtcTimes, BasicFormatRoundTrip) {
  auto t = parse_basic_utc("19990125T181917Z");
  ASSERT_TRUE(t);
  EXPECT_EQ(format_basic_utc(*t), "19990125T181917Z");
  EXPECT_EQ(t->time_since_epoch().count(), 917288357);
  EXPECT_FALSE(parse_basic_utc("19990125 181917"));
  EXPECT_FALSE(parse_basic_utc("19991325T181917Z"));
  EXPECT_FALSE(parse_basic_utc("19990230T000000Z"));
}

TEST(Schema, EventNamesRoundTrip) {
  for (std::size_t k = 0; k < kEventKindCount; ++k) {
    EXPECT_EQ(event_kind(event_name(k)), std::optional<std::size_t>(k));
    EXPECT_EQ(make_event(k).index(), k);
  }
  EXPECT_EQ(kEventKindCount, 17u);
  EXPECT_FALSE(event_kind("Harmed"));
}

TEST(Schema, LeavesAndPaths) {
  auto form = parse_newsform(read_file(test_data() / "earthquake.newsform.xml"));
  std::vector<std::string> paths;
  for (const auto& l : event_leaves(form.events[0])) paths.push_back(l.path);
  std::vector<std::string> expected = {"Cause", "InjuredCount", "KilledCount", "Source/Function",
                                       "AtLocation/Country", "AtLocation/Latitude", "AtLocation/Longitude"};
  std::sort(paths.begin(), paths.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(paths, expected);
  std::vector<std::string> p = {"AtLocation", "Country"};
  auto v = values_at(form.events[0], p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(std::get<std::string>(v[0]), "COL");
  EXPECT_EQ(leaf_text(FieldValue(Money{Decimal(2000000), "USD"})), "2000000 USD");
}

TEST(Sentiment, TotalOverEveryKind) {
  // Every event, empty or randomly filled, receives exactly one class.
  DocGenerator gen(11);
  for (std::size_t k = 0; k < kEventKindCount; ++k) {
    auto s = classify_sentiment(make_event(k));
    EXPECT_TRUE(s == Sentiment::kPositive || s == Sentiment::kNegative || s == Sentiment::kOther);
    for (int i = 0; i < 5; ++i) {
      auto r = classify_sentiment(gen.event(k));
      EXPECT_TRUE(r == Sentiment::kPositive || r == Sentiment::kNegative || r == Sentiment::kOther);
    }
  }
}

TEST(Sentiment, TableRows) {
  Earnings good;
  good.good_bad = "Good";
  Earnings bad;
  bad.good_bad = "Bad";
  EXPECT_EQ(classify_sentiment(good), Sentiment::kPositive);
  EXPECT_EQ(classify_sentiment(bad), Sentiment::kNegative);
  EXPECT_EQ(classify_sentiment(InjuryFatality{}), Sentiment::kNegative);
  EXPECT_EQ(classify_sentiment(Trip{}), Sentiment::kOther);
  NewProduct recalled;
  recalled.product_status = "Recalled";
  EXPECT_EQ(classify_sentiment(recalled), Sentiment::kOther);
}

TEST(Sentiment, ShippedFileMatchesBuiltin) {
  auto loaded = SentimentTable::load(repo_data() / "kb" / "sentiment.tsv");
  EXPECT_EQ(loaded.rules(), SentimentTable::builtin().rules());
}
