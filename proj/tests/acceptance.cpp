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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "newsform/codec.hpp"
#include "newsform/commonsense.hpp"
#include "newsform/padoof.hpp"
#include "newsform/validate.hpp"
#include "support.hpp"
#include "vocabulary_oracle.hpp"

using namespace newsform;
using namespace newsform::testing;

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few reasons a check failed.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void earthquake(Check& c) {
  auto start = Clock::now();
  auto result = extract(kIntroParagraph, shipped_resources(), parse_basic_utc("19990125T181917Z"));
  double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  c.expect(result.form.events.size() == 1, "expected one event");
  if (result.form.events.size() != 1) return;
  const auto* e = std::get_if<InjuryFatality>(&result.form.events[0]);
  c.expect(e != nullptr, "event is not an InjuryFatality");
  if (!e) return;
  auto example = std::get<InjuryFatality>(parse_newsform(read_file(test_data() / "earthquake.newsform.xml")).events[0]);
  c.expect(e->cause == example.cause, "Cause");
  c.expect(e->killed_count == example.killed_count, "KilledCount");
  c.expect(e->injured_count == example.injured_count, "InjuredCount");
  c.expect(e->at_location && e->at_location->country == example.at_location->country, "AtLocation/Country");
  if (e->source) c.expect(e->source == example.source, "Source");
  if (e->at_location && e->at_location->latitude)
    c.expect(e->at_location->latitude == example.at_location->latitude, "Latitude");
  if (e->at_location && e->at_location->longitude)
    c.expect(e->at_location->longitude == example.at_location->longitude, "Longitude");
}

void fedwatch(Check& c) {
  auto result = extract(kFedWatchSentence, shipped_resources());
  FedWatch expected;
  expected.fed_action = "Raise";
  expected.interest_rate = "FederalFundsTarget";
  expected.rate = Decimal(525, 2);
  c.expect(result.form.events == std::vector<NewsEvent>{expected}, serialize_newsform(result.form));
}

void codec(Check& c) {
  std::string original = read_file(test_data() / "earthquake.newsform.xml");
  c.expect(serialize_newsform(parse_newsform(original)) == original, "example is not byte-identical");
  DocGenerator gen(20260101);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    NewsForm doc = gen.document(5);
    try {
      if (!(parse_newsform(serialize_newsform(doc)) == doc)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " of 100 generated documents changed");
}

void vocabulary(Check& c) {
  std::size_t accepted = 0, rejected = 0, total = 0;
  for (const auto& o : vocabulary_oracle()) {
    std::set<std::string> allowed;
    for (const auto& v : o.values) allowed.insert(v == "Martial Arts" ? "MartialArts" : v);
    for (const auto& value : o.values) {
      ++total;
      auto [doc, path] = vocabulary_probe(o, value);
      if (validate(parse_newsform(doc)).ok()) ++accepted;
      std::string bad = value + "x";
      if (allowed.count(bad)) continue;
      auto [bad_doc, bad_path] = vocabulary_probe(o, bad);
      auto report = validate(parse_newsform(bad_doc));
      if (report.errors.size() == 1 && report.errors[0].code == issue::kNotInVocabulary) ++rejected;
    }
  }
  c.expect(accepted == total, std::to_string(total - accepted) + " listed values refused");
  c.expect(rejected == total, std::to_string(total - rejected) + " mutated values accepted");
}

const EntityMention* mention_at(const SentenceParse& s, std::string_view word) {
  for (const auto& m : s.mentions)
    for (std::size_t i = m.first; i <= m.last; ++i)
      if (s.tokens[i].text == word) return &m;
  return nullptr;
}

void coreference(Check& c) {
  auto doc = analyze(kJospinPassage, shipped_resources().lexicons);
  c.expect(doc.sentences.size() == 3, "expected three sentences");
  if (doc.sentences.size() != 3) return;
  const EntityMention* a = mention_at(doc.sentences[0], "Jospin");
  const EntityMention* b = mention_at(doc.sentences[1], "Jospin");
  const EntityMention* h = mention_at(doc.sentences[2], "he");
  c.expect(a && b && h, "missing mention");
  if (!(a && b && h)) return;
  c.expect(a->resolved_id && a->resolved_id->starts_with("PERSON"), "no PERSON id");
  c.expect(a->resolved_id == b->resolved_id && b->resolved_id == h->resolved_id, "ids differ");
}

void disambiguation(Check& c) {
  auto result = extract("Al Khartum was injured.", shipped_resources());
  c.expect(result.form.events.size() == 1, "expected one event");
  if (result.form.events.size() != 1) return;
  const auto* e = std::get_if<InjuryFatality>(&result.form.events[0]);
  c.expect(e && e->injured.size() == 1 && e->injured[0].family == "Khartum" && e->injured[0].given == "Al",
           "Injured is not the person Al Khartum");
  c.expect(e && !e->at_location, "city reading leaked into AtLocation");
}

void commonsense(Check& c) {
  const auto& kb = shipped_resources().kb;
  LegalEvent innocent;
  innocent.judgment = "Innocent";
  innocent.sentence_type = "Jail";
  auto a = apply_commonsense(std::vector<NewsEvent>{innocent}, kb);
  c.expect(a.events.size() == 1 && !std::get<LegalEvent>(a.events[0]).sentence_type, "sentence not dropped");
  c.expect(a.diagnostics.size() == 1 && a.diagnostics[0].code == "drop-field" &&
               a.diagnostics[0].location == "LegalEvent[0]/SentenceType",
           "innocent diagnostic");

  Competition wrong;
  wrong.sport = "Baseball";
  wrong.team = Organization{};
  wrong.team->full_name = "Chicago Bulls";
  auto b = apply_commonsense(std::vector<NewsEvent>{wrong}, kb);
  c.expect(b.events.empty(), "wrong-sport competition kept");
  c.expect(b.diagnostics.size() == 1 && b.diagnostics[0].code == "reject-fragment", "wrong-sport diagnostic");

  LegalEvent guilty = innocent;
  guilty.judgment = "Guilty";
  Competition right = wrong;
  right.sport = "Basketball";
  std::vector<NewsEvent> valid = {guilty, right};
  auto v = apply_commonsense(valid, kb);
  c.expect(v.events == valid && v.diagnostics.empty(), "valid events changed");

  std::vector<NewsEvent> mixed = {innocent, wrong, guilty, right};
  DocGenerator gen(99);
  for (std::size_t k = 0; k < kEventKindCount; ++k)
    for (int i = 0; i < 10; ++i) mixed.push_back(gen.event(k));
  auto once = apply_commonsense(mixed, kb);
  auto twice = apply_commonsense(once.events, kb);
  c.expect(twice.events == once.events && twice.diagnostics.empty(), "not idempotent");
}

std::vector<std::string> ids(const std::vector<QueryHit>& hits) {
  std::vector<std::string> out;
  for (const auto& h : hits) out.push_back(h.doc_id);
  return out;
}

void query_oracle(Check& c) {
  auto start = Clock::now();
  auto index = CorpusIndex::build_dir(corpus_dir());
  c.expect(index.docs().size() == 6, "fixture corpus has " + std::to_string(index.docs().size()) + " docs");
  auto queries = generate_queries(index.docs(), 1234, 250);
  c.expect(queries.size() >= 200, "fewer than 200 queries");
  std::set<std::size_t> kinds;
  std::set<std::string> ops;
  std::size_t mismatches = 0;
  for (const auto& q : queries) {
    if (q.kind) kinds.insert(*q.kind);
    for (const auto& cl : q.clauses) ops.insert(cl.op);
    try {
      if (ids(query(index, q.text())) != brute_force(index.docs(), q)) {
        ++mismatches;
        c.expect(false, "mismatch: " + q.text());
      }
    } catch (const std::exception& e) {
      ++mismatches;
      c.expect(false, "error: " + q.text() + ": " + e.what());
    }
  }
  c.expect(kinds.size() == kEventKindCount, "not every variant queried");
  c.expect(ops.size() == 7, "not every operator used");
  c.expect(ids(query(index, "Deal.Target.Ticker = BEL")) == std::vector<std::string>{"a-bell-target"}, "BEL query");
  c.expect(ids(query(index, "InjuryFatality sort InjuryFatality.KilledCount desc")) ==
               std::vector<std::string>{"c-earthquake", "d-fed-raise", "f-products"},
           "KilledCount sort");
  double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
}

void stats_and_geo(Check& c) {
  auto index = CorpusIndex::build_dir(corpus_dir());
  auto s = stats(index, *event_kind("NewProduct"), Bucket::kDay);
  c.expect(format_stats(s) == "19990406T000000Z\t1\n19990407T000000Z\t3\n", "per-day NewProduct: " + format_stats(s));
  auto geo = format_geo(geo_distribution(index, parse_query("")));
  c.expect(geo == "BRA\t1\t0\t0\nCOL\t0\t1\t0\nSDN\t0\t2\t0\nUSA\t0\t1\t1\nUNLOCATED\t4\t2\t3\n", "geo table: " + geo);
  for (std::uint32_t seed = 1; seed <= 25; ++seed) {
    DocGenerator gen(seed);
    CorpusIndex random;
    std::size_t n = 1 + gen.rng()() % 12;
    for (std::size_t i = 0; i < n; ++i) random.add(CorpusDoc{"d" + std::to_string(i), gen.document(5), {}});
    auto g = geo_distribution(random, QueryExpr{});
    Tally sum = g.unlocated;
    for (const auto& [country, t] : g.countries) {
      sum.positive += t.positive;
      sum.negative += t.negative;
      sum.other += t.other;
    }
    Tally direct;
    for (const auto& doc : random.docs())
      for (const auto& e : doc.form.events) direct.add(classify_sentiment(e));
    c.expect(sum == direct, "conservation fails for seed " + std::to_string(seed));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"earthquake end-to-end", earthquake},
      {"fedwatch golden", fedwatch},
      {"codec round-trip", codec},
      {"vocabulary closure", vocabulary},
      {"coreference golden", coreference},
      {"disambiguation golden", disambiguation},
      {"commonsense checks", commonsense},
      {"query oracle", query_oracle},
      {"stats and geo", stats_and_geo},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    if (c.problems.empty()) {
      std::cout << "PASS " << name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << name << ": " << c.problems.front();
      if (c.problems.size() > 1) std::cout << " (+" << c.problems.size() - 1 << " more)";
      std::cout << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
