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

#include <chrono>

#include "newsform/codec.hpp"
#include "newsform/extract.hpp"
#include "support.hpp"

using namespace newsform;
using namespace newsform::testing;

TEST(Extract, EarthquakeParagraph) {
  auto start = std::chrono::steady_clock::now();
  auto result = extract(kIntroParagraph, shipped_resources(), parse_basic_utc("19990125T181917Z"));
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed, std::chrono::seconds(1));

  ASSERT_EQ(result.form.events.size(), 1u) << serialize_newsform(result.form);
  const auto& e = std::get<InjuryFatality>(result.form.events[0]);
  EXPECT_EQ(e.cause, "Earthquake");
  EXPECT_EQ(e.killed_count, 143);
  EXPECT_EQ(e.injured_count, 900);
  ASSERT_TRUE(e.at_location);
  EXPECT_EQ(e.at_location->country, "COL");

  // Fields the example also carries must agree with it when present.
  auto example = std::get<InjuryFatality>(parse_newsform(read_file(test_data() / "earthquake.newsform.xml")).events[0]);
  if (e.source) {
    EXPECT_EQ(e.source, example.source);
  }
  if (e.at_location->latitude) {
    EXPECT_EQ(e.at_location->latitude, example.at_location->latitude);
  }
  if (e.at_location->longitude) {
    EXPECT_EQ(e.at_location->longitude, example.at_location->longitude);
  }
  EXPECT_EQ(result.form.head, parse_newsform(read_file(test_data() / "earthquake.newsform.xml")).head);
}

TEST(Extract, FedWatchSentence) {
  auto result = extract(kFedWatchSentence, shipped_resources());
  ASSERT_EQ(result.form.events.size(), 1u);
  FedWatch expected;
  expected.fed_action = "Raise";
  expected.interest_rate = "FederalFundsTarget";
  expected.rate = Decimal(525, 2);
  EXPECT_EQ(std::get<FedWatch>(result.form.events[0]), expected);
}

TEST(Extract, AlKhartum) {
  auto result = extract("Al Khartum was injured.", shipped_resources());
  ASSERT_EQ(result.form.events.size(), 1u);
  const auto& e = std::get<InjuryFatality>(result.form.events[0]);
  ASSERT_EQ(e.injured.size(), 1u);
  EXPECT_EQ(e.injured[0].family, "Khartum");
  EXPECT_EQ(e.injured[0].given, "Al");
  EXPECT_FALSE(e.at_location);
}

TEST(Extract, EmptyTextGivesOnlyAHead) {
  auto result = extract("", shipped_resources());
  EXPECT_TRUE(result.form.events.empty());
  EXPECT_EQ(serialize_newsform(result.form), "<NewsForm>\n  <Head/>\n</NewsForm>\n");
}

TEST(Extract, OutputAlwaysValidates) {
  std::string text = std::string(kIntroParagraph) + " " + kJospinPassage + " " + kFedWatchSentence +
                     " Vodafone agreed to buy Bell Atlantic for $53 billion. He was injured. "
                     "The Senate voted 63 to 37 to pass the bill.";
  auto result = extract(text, shipped_resources());
  EXPECT_TRUE(validate(result.form).ok());
  EXPECT_NO_THROW(serialize_newsform(result.form));
}

TEST(Extract, Deterministic) {
  std::string text = std::string(kIntroParagraph) + " " + kFedWatchSentence;
  auto a = extract(text, shipped_resources());
  auto b = extract(text, shipped_resources());
  EXPECT_EQ(serialize_newsform(a.form), serialize_newsform(b.form));
  EXPECT_EQ(format_diagnostics(a.diagnostics), format_diagnostics(b.diagnostics));
}

TEST(Extract, MissingResourcesAreReported) {
  EXPECT_THROW(ExtractResources::load(repo_data() / "nowhere"), ResourceError);
}
