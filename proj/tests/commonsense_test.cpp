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

#include "newsform/commonsense.hpp"
#include "support.hpp"

using namespace newsform;
using namespace newsform::testing;

namespace {

const KnowledgeBase& kb() { return shipped_resources().kb; }

LegalEvent legal(std::string judgment, std::optional<std::string> sentence) {
  LegalEvent e;
  e.judgment = std::move(judgment);
  e.sentence_type = std::move(sentence);
  return e;
}

Competition competition(std::string sport, std::string team) {
  Competition c;
  c.sport = std::move(sport);
  c.team = Organization{};
  c.team->full_name = std::move(team);
  return c;
}

}  // namespace

TEST(KnowledgeBase, ShippedRulesLoad) {
  ASSERT_EQ(kb().rules().size(), 5u);
  EXPECT_EQ(kb().rules()[0].id, "no-sentence-without-guilt");
  EXPECT_EQ(kb().rules()[0].action, CommonsenseRule::Action::kDropField);
  EXPECT_EQ(kb().rules()[0].target, (std::vector<std::string>{"SentenceType"}));
  ASSERT_NE(kb().table("sport_of_team"), nullptr);
  EXPECT_EQ(kb().table("no_such_table"), nullptr);
}

TEST(KnowledgeBase, BadRowsAreResourceErrors) {
  KnowledgeBase k;
  EXPECT_THROW(k.add_rules("r\tLegalEvent\tcompatible A B via missing\tDropField\tm\n"), ResourceError);
  EXPECT_THROW(k.add_rules("r\tLegalEvent\tbogus check\tDropField\tm\n"), ResourceError);
  k.add_table("t", "a\tb\n");
  EXPECT_THROW(k.add_rules("r\tNoSuchEvent\tcompatible Judgment Plea via t\tDropField\tm\n"), ResourceError);
  EXPECT_THROW(k.add_rules("r\tLegalEvent\tcompatible Judgment Plea via t\tExplode\tm\n"), ResourceError);
  EXPECT_NO_THROW(k.add_rules("r\tLegalEvent\tcompatible Judgment Plea via t\tDropField\tm\n"));
}

TEST(Commonsense, InnocentCannotBeSentenced) {
  auto out = apply_commonsense(std::vector<NewsEvent>{legal("Innocent", "Jail")}, kb());
  ASSERT_EQ(out.events.size(), 1u);
  const auto& e = std::get<LegalEvent>(out.events[0]);
  EXPECT_EQ(e.judgment, "Innocent");
  EXPECT_FALSE(e.sentence_type);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].stage, "commonsense");
  EXPECT_EQ(out.diagnostics[0].code, "drop-field");
  EXPECT_EQ(out.diagnostics[0].location, "LegalEvent[0]/SentenceType");
  EXPECT_TRUE(out.diagnostics[0].message.starts_with("no-sentence-without-guilt: "));
}

TEST(Commonsense, WrongSportTeamIsRejected) {
  auto out = apply_commonsense(std::vector<NewsEvent>{competition("Baseball", "Chicago Bulls")}, kb());
  EXPECT_TRUE(out.events.empty());
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].code, "reject-fragment");
  EXPECT_EQ(out.diagnostics[0].location, "Competition[0]");
  EXPECT_TRUE(out.diagnostics[0].message.starts_with("team-plays-sport: "));
}

TEST(Commonsense, ExplicitTeamSportMustAgree) {
  Competition c = competition("Soccer", "Unknown Club");
  c.team->sport = "Hockey";
  auto out = apply_commonsense(std::vector<NewsEvent>{c}, kb());
  EXPECT_TRUE(out.events.empty());
}

TEST(Commonsense, ValidEventsPassUntouched) {
  std::vector<NewsEvent> events = {legal("Guilty", "Jail"), competition("Basketball", "Chicago Bulls"),
                                   legal("Innocent", std::nullopt), competition("Soccer", "Unknown Club")};
  auto out = apply_commonsense(events, kb());
  EXPECT_EQ(out.events, events);
  EXPECT_TRUE(out.diagnostics.empty());
}

TEST(Commonsense, AlternativeReadingIsPreferred) {
  MergedEvent m;
  m.event = competition("Basketball", "New York Yankees");
  Organization knicks;
  knicks.full_name = "New York Knicks";
  Organization yankees;
  yankees.full_name = "New York Yankees";
  m.alternatives.push_back(Alternative{"Team", {yankees, knicks}});
  auto out = apply_commonsense(std::vector<MergedEvent>{m}, kb());
  ASSERT_EQ(out.events.size(), 1u);
  EXPECT_EQ(std::get<Competition>(out.events[0].event).team->full_name, "New York Knicks");
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].code, "prefer-reading");
}

TEST(Commonsense, DirectionMustMatchRates) {
  EconomicRelease up;
  up.direction = "Up";
  up.rate = Decimal(4);
  up.previous_rate = Decimal(5);
  EconomicRelease ok = up;
  ok.direction = "Down";
  auto out = apply_commonsense(std::vector<NewsEvent>{up, ok}, kb());
  ASSERT_EQ(out.events.size(), 2u);
  EXPECT_FALSE(std::get<EconomicRelease>(out.events[0]).direction);
  EXPECT_EQ(std::get<EconomicRelease>(out.events[1]).direction, "Down");
}

TEST(Commonsense, Idempotent) {
  std::vector<NewsEvent> events = {legal("Innocent", "Jail"), competition("Baseball", "Chicago Bulls"),
                                   legal("Guilty", "Jail")};
  DocGenerator gen(99);
  for (std::size_t k = 0; k < kEventKindCount; ++k)
    for (int i = 0; i < 10; ++i) events.push_back(gen.event(k));
  auto once = apply_commonsense(events, kb());
  auto twice = apply_commonsense(once.events, kb());
  EXPECT_EQ(twice.events, once.events);
  EXPECT_TRUE(twice.diagnostics.empty()) << format_diagnostics(twice.diagnostics);
}
