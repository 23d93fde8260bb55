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

#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "newsform/codec.hpp"
#include "newsform/codes.hpp"
#include "newsform/detail/traits.hpp"
#include "newsform/schema.hpp"

namespace newsform::testing {

namespace fs = std::filesystem;

fs::path test_data() { return NEWSFORM_TEST_DATA; }
fs::path repo_data() { return NEWSFORM_REPO_DATA; }
fs::path corpus_dir() { return test_data() / "corpus"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ExtractResources& shipped_resources() {
  static const ExtractResources res = ExtractResources::load(repo_data());
  return res;
}

const char* const kIntroParagraph =
    "An earthquake struck western Colombia on Monday, killing at least 143 people and injuring more "
    "than 900 as it toppled buildings across the country's coffee-growing heartland, civil defense "
    "officials said.";

const char* const kJospinPassage =
    "Prime Minister Lionel Jospin kept silent on the fate of a key government ally. "
    "Jospin, confronted with a political time-bomb, said nothing. "
    "Beyond saying this was an affair for justice system, he maintained an awkward silence.";

const char* const kFedWatchSentence = "The Federal Reserve raised its federal funds target to 5.25 percent.";

// --- generator ---------------------------------------------------------------

namespace {

const char* const kWords[] = {"Alpha", "river", "Bank", "of", "north", "Zed", "caf\xc3\xa9", "R&D", "<x>", "\"q\"", "O'Neil"};

struct Filler {
  DocGenerator& g;

  template <class T>
  void operator()(std::string_view, T& member, const FieldSpec& spec) {
    if constexpr (detail::is_optional_v<T>) {
      if (!g.coin(0.5)) return;
      typename T::value_type v{};
      fill(v, spec);
      member = std::move(v);
    } else if constexpr (detail::is_vector_v<T>) {
      std::size_t n = g.rng()() % 3;
      for (std::size_t i = 0; i < n; ++i) {
        typename T::value_type v{};
        fill(v, spec);
        member.push_back(std::move(v));
      }
    } else {
      fill(member, spec);
    }
  }

  void fill(std::string& v, const FieldSpec& spec) { v = g.text_value(spec); }
  void fill(std::int64_t& v, const FieldSpec& spec) { v = g.int_value(spec); }
  void fill(Decimal& v, const FieldSpec& spec) { v = g.decimal_value(spec); }
  void fill(UtcTime& v, const FieldSpec&) { v = g.time_value(); }

  void fill(Party& v, const FieldSpec& spec) {
    if (g.coin(0.5)) {
      Person p;
      fill(p, spec);
      v = p;
    } else {
      Organization o;
      fill(o, spec);
      if (!o.full_name && !o.nickname && !o.organization_type && !o.sport && !o.ticker)
        o.full_name = g.text_value(spec::kText);
      v = o;
    }
  }

  template <class R>
  void fill(R& record, const FieldSpec&) {
    // Records are never empty: an empty element carries no information.
    for (int tries = 0; tries < 20 && record == R{}; ++tries) {
      Filler inner{g};
      reflect(inner, record);
    }
  }
};

}  // namespace

bool DocGenerator::coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

std::string DocGenerator::text_value(const FieldSpec& spec) {
  auto pick = [&](const auto& seq) { return std::string(*std::next(seq.begin(), rng_() % seq.size())); };
  const auto& codes = shipped_code_tables();
  switch (spec.kind) {
    case LeafKind::kEnum:
      return pick(spec.vocab);
    case LeafKind::kCountry:
      return pick(codes.countries());
    case LeafKind::kCurrency:
      return pick(codes.currencies());
    case LeafKind::kState:
      return pick(codes.states());
    case LeafKind::kToken: {
      std::string t(1, static_cast<char>('A' + rng_() % 26));
      for (std::size_t i = rng_() % 6; i > 0; --i) t += static_cast<char>((rng_() % 2 ? 'a' : '0') + rng_() % 10);
      return t;
    }
    case LeafKind::kTicker: {
      std::string t;
      for (std::size_t i = 1 + rng_() % 4; i > 0; --i) t += static_cast<char>('A' + rng_() % 26);
      return t;
    }
    default: {
      std::string t = kWords[rng_() % std::size(kWords)];
      for (std::size_t i = rng_() % 3; i > 0; --i) t += std::string(" ") + kWords[rng_() % std::size(kWords)];
      return t;
    }
  }
}

std::int64_t DocGenerator::int_value(const FieldSpec& spec) {
  std::int64_t lo = spec.min_int.value_or(-1000);
  std::int64_t hi = spec.max_int.value_or(100000);
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Decimal DocGenerator::decimal_value(const FieldSpec& spec) {
  int scale = static_cast<int>(rng_() % 4);
  std::int64_t unit = 1;
  for (int i = 0; i < scale; ++i) unit *= 10;
  std::int64_t lo = spec.lower ? spec.lower->value.mantissa() * unit : -5000 * unit;
  std::int64_t hi = spec.upper ? spec.upper->value.mantissa() * unit : 900000 * unit;
  if (spec.lower && !spec.lower->inclusive) ++lo;
  if (spec.upper && !spec.upper->inclusive) --hi;
  return Decimal(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_), scale);
}

UtcTime DocGenerator::time_value() {
  // 1995-01-01 .. 2004-12-31
  std::int64_t s = std::uniform_int_distribution<std::int64_t>(788918400, 1104451200)(rng_);
  return UtcTime(std::chrono::seconds(s));
}

NewsEvent DocGenerator::event(std::size_t kind) {
  NewsEvent e = make_event(kind);
  for (int tries = 0; tries < 50; ++tries) {
    e = make_event(kind);
    std::visit(
        [&](auto& ev) {
          Filler f{*this};
          reflect(f, ev);
          if constexpr (std::is_same_v<std::decay_t<decltype(ev)>, Earnings>) {
            if (ev.earnings_amount && ev.loss) ev.loss.reset();
          }
        },
        e);
    NewsForm probe;
    probe.events.push_back(e);
    if (validate(probe).ok() && !event_leaves(e).empty()) return e;
  }
  throw std::runtime_error("generator could not build a valid " + std::string(event_name(kind)));
}

NewsForm DocGenerator::document(std::size_t max_events) {
  NewsForm doc;
  if (coin(0.8)) doc.head.dateline_time = time_value();
  std::size_t n = rng_() % (max_events + 1);
  for (std::size_t i = 0; i < n; ++i) doc.events.push_back(event(rng_() % kEventKindCount));
  return doc;
}

// --- query oracle ------------------------------------------------------------

std::string OracleQuery::text() const {
  auto quote = [](const std::string& v) {
    return v.empty() || v.find(' ') != std::string::npos ? "\"" + v + "\"" : v;
  };
  std::string out;
  for (const auto& c : clauses) {
    if (!out.empty()) out += " and ";
    out += std::string(event_name(*kind));
    for (const auto& step : c.path) out += "." + step;
    out += " " + c.op + " " + quote(c.value);
  }
  if (clauses.empty() && kind) out = std::string(event_name(*kind));
  if (sort) {
    out += out.empty() ? "sort " : " sort ";
    out += std::string(event_name(sort->kind));
    for (const auto& step : sort->path) out += "." + step;
    out += sort->descending ? " desc" : " asc";
  }
  if (since) out += (out.empty() ? "since " : " since ") + *since;
  if (until) out += (out.empty() ? "until " : " until ") + *until;
  return out;
}

namespace {

void walk(const xml::Element& e, const std::string& prefix, std::vector<XmlNode>& out) {
  for (const auto& child : e.children) {
    std::string path = prefix.empty() ? child.name : prefix + "/" + child.name;
    out.push_back(XmlNode{path, &child});
    walk(child, path, out);
  }
}

enum class Shape { kText, kNumber, kTime, kMoney, kRecord };

Shape shape_of(std::size_t kind, const std::vector<std::string>& path) {
  const FieldInfo* f = resolve_path(kind, path);
  if (!f) throw std::logic_error("oracle: bad path");
  if (f->record == RecordType::kMoney) return Shape::kMoney;
  if (!f->is_leaf()) return Shape::kRecord;
  if (f->spec.kind == LeafKind::kInteger || f->spec.kind == LeafKind::kDecimal) return Shape::kNumber;
  if (f->spec.kind == LeafKind::kTime) return Shape::kTime;
  return Shape::kText;
}

long double number(const std::string& s) { return std::strtold(s.c_str(), nullptr); }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string child_text(const xml::Element& e, std::string_view name) {
  for (const auto& c : e.children)
    if (c.name == name) return c.text;
  return "";
}

struct MoneyLit {
  std::string currency;
  long double amount = 0;
};

MoneyLit money_lit(const std::string& text) {
  auto sp = text.find(' ');
  std::string a = text.substr(0, sp), b = text.substr(sp + 1);
  bool a_is_cur = a.size() == 3 && std::all_of(a.begin(), a.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
  return a_is_cur ? MoneyLit{a, number(b)} : MoneyLit{b, number(a)};
}

template <class T>
bool ordered(const T& a, const T& b, const std::string& op) {
  if (op == "=") return a == b;
  if (op == "!=") return a != b;
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == ">=") return a >= b;
  return false;
}

bool node_satisfies(Shape shape, const xml::Element& e, const OracleClause& c) {
  switch (shape) {
    case Shape::kText:
      if (c.op == "contains") return lower(e.text).find(lower(c.value)) != std::string::npos;
      return c.op == "=" ? e.text == c.value : e.text != c.value;
    case Shape::kNumber:
      return ordered(number(e.text), number(c.value), c.op);
    case Shape::kTime:
      return ordered(e.text, c.value, c.op);
    case Shape::kMoney: {
      MoneyLit lit = money_lit(c.value);
      if (child_text(e, "Currency") != lit.currency) return false;
      return ordered(number(child_text(e, "Amount")), lit.amount, c.op);
    }
    case Shape::kRecord:
      return false;
  }
  return false;
}

std::vector<const xml::Element*> nodes_at(const std::vector<XmlNode>& nodes, const std::vector<std::string>& path) {
  std::string joined;
  for (const auto& s : path) joined += (joined.empty() ? "" : "/") + s;
  std::vector<const xml::Element*> out;
  for (const auto& n : nodes)
    if (n.path == joined) out.push_back(n.element);
  return out;
}

struct SortValue {
  Shape shape;
  std::string text;
  long double amount = 0;
  std::string currency;
};

// Negative when a sorts before b in ascending order.
int compare_sort(const SortValue& a, const SortValue& b) {
  switch (a.shape) {
    case Shape::kNumber:
      return a.amount < b.amount ? -1 : a.amount > b.amount ? 1 : 0;
    case Shape::kMoney:
      if (a.currency != b.currency) return a.currency < b.currency ? -1 : 1;
      return a.amount < b.amount ? -1 : a.amount > b.amount ? 1 : 0;
    default:
      return a.text < b.text ? -1 : a.text > b.text ? 1 : 0;
  }
}

}  // namespace

std::vector<XmlNode> xml_nodes(const xml::Element& event) {
  std::vector<XmlNode> out;
  walk(event, "", out);
  return out;
}

std::vector<std::string> brute_force(const std::vector<CorpusDoc>& docs, const OracleQuery& q) {
  struct Row {
    std::string id;
    std::optional<SortValue> key;
  };
  std::vector<Row> rows;
  for (const auto& doc : docs) {
    if (q.since || q.until) {
      if (!doc.form.head.dateline_time) continue;
      std::string t = format_basic_utc(*doc.form.head.dateline_time);
      if (q.since && t < *q.since) continue;
      if (q.until && t > *q.until) continue;
    }
    bool matched = false;
    std::optional<SortValue> key;
    for (const auto& event : doc.form.events) {
      xml::Element x = encode_event(event);
      if (q.kind && x.name != event_name(*q.kind)) continue;
      auto nodes = xml_nodes(x);
      bool ok = true;
      for (const auto& c : q.clauses) {
        Shape shape = shape_of(*q.kind, c.path);
        auto hits = nodes_at(nodes, c.path);
        if (std::none_of(hits.begin(), hits.end(), [&](const xml::Element* e) { return node_satisfies(shape, *e, c); }))
          ok = false;
      }
      if (!ok) continue;
      matched = true;
      if (!q.sort || x.name != event_name(q.sort->kind)) continue;
      Shape shape = shape_of(q.sort->kind, q.sort->path);
      for (const xml::Element* e : nodes_at(nodes, q.sort->path)) {
        SortValue v{shape, e->text, 0, ""};
        if (shape == Shape::kNumber) v.amount = number(e->text);
        if (shape == Shape::kMoney) {
          v.amount = number(child_text(*e, "Amount"));
          v.currency = child_text(*e, "Currency");
        }
        if (!key) {
          key = v;
          continue;
        }
        int c = compare_sort(v, *key);
        if (q.sort->descending ? c > 0 : c < 0) key = v;
      }
    }
    if (matched) rows.push_back(Row{doc.id, key});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  if (q.sort) {
    bool desc = q.sort->descending;
    std::stable_sort(rows.begin(), rows.end(), [desc](const Row& a, const Row& b) {
      if (!a.key || !b.key) return a.key.has_value() && !b.key.has_value();
      int c = compare_sort(*a.key, *b.key);
      return desc ? c > 0 : c < 0;
    });
  }
  std::vector<std::string> ids;
  for (const auto& r : rows) ids.push_back(r.id);
  return ids;
}

std::map<PostingKey, std::set<std::string>> brute_force_postings(const std::vector<CorpusDoc>& docs) {
  std::map<PostingKey, std::set<std::string>> out;
  for (const auto& doc : docs) {
    for (const auto& event : doc.form.events) {
      std::size_t kind = event.index();
      auto encoded = encode_event(event);
      for (const auto& n : xml_nodes(encoded)) {
        if (!n.element->children.empty()) continue;
        std::string value = n.element->text;
        const FieldInfo* f = resolve_path(kind, split_path(n.path));
        if (f && f->spec.kind == LeafKind::kDecimal && value.find('.') != std::string::npos) {
          while (value.back() == '0') value.pop_back();
          if (value.back() == '.') value.pop_back();
          if (value == "-0") value = "0";
        }
        out[PostingKey{kind, n.path, value}].insert(doc.id);
      }
    }
  }
  return out;
}

std::vector<OracleQuery> generate_queries(const std::vector<CorpusDoc>& docs, std::uint32_t seed,
                                          std::size_t min_count) {
  std::mt19937 rng(seed);
  const char* const kOrderOps[] = {"=", "!=", "<", "<=", ">", ">="};
  std::vector<OracleQuery> out;
  out.push_back(OracleQuery{});

  // Observed values per (kind, path).
  std::map<std::size_t, std::map<std::string, std::vector<std::string>>> seen;
  for (const auto& doc : docs)
    for (const auto& event : doc.form.events) {
      auto encoded = encode_event(event);
      for (const auto& n : xml_nodes(encoded)) {
        auto path = split_path(n.path);
        Shape shape = shape_of(event.index(), path);
        if (shape == Shape::kRecord) continue;
        std::string v = shape == Shape::kMoney
                            ? child_text(*n.element, "Amount") + " " + child_text(*n.element, "Currency")
                            : n.element->text;
        seen[event.index()][n.path].push_back(v);
      }
    }

  std::map<std::size_t, std::vector<OracleClause>> pool;
  for (std::size_t kind = 0; kind < kEventKindCount; ++kind) {
    out.push_back(OracleQuery{kind, {}, {}, {}, {}});
    auto& clauses = pool[kind];
    auto it = seen.find(kind);
    if (it == seen.end()) {
      // Kinds absent from the corpus: one predicate per top-level leaf.
      for (const auto& f : event_fields(kind)) {
        std::vector<std::string> path{std::string(f.name)};
        Shape shape = shape_of(kind, path);
        if (shape == Shape::kText)
          clauses.push_back({path, "=", f.spec.kind == LeafKind::kEnum ? std::string(f.spec.vocab[0]) : "Zed"});
        else if (shape == Shape::kNumber)
          clauses.push_back({path, ">=", "0"});
        else if (shape == Shape::kTime)
          clauses.push_back({path, "<", "20000101T000000Z"});
        else if (shape == Shape::kMoney)
          clauses.push_back({path, ">", "0 USD"});
      }
    } else {
      for (const auto& [joined, values] : it->second) {
        auto path = split_path(joined);
        Shape shape = shape_of(kind, path);
        const std::string& v = values[rng() % values.size()];
        switch (shape) {
          case Shape::kText:
            clauses.push_back({path, "=", v});
            clauses.push_back({path, "!=", v});
            clauses.push_back({path, "=", "NoSuchValue"});
            clauses.push_back({path, "contains", lower(v.substr(v.size() / 3, 3))});
            break;
          case Shape::kNumber:
          case Shape::kTime:
            for (const char* op : kOrderOps) clauses.push_back({path, op, v});
            if (shape == Shape::kNumber) clauses.push_back({path, "<", v + "1"});
            break;
          case Shape::kMoney: {
            for (const char* op : kOrderOps) clauses.push_back({path, op, v});
            auto sp = v.find(' ');
            clauses.push_back({path, "<=", v.substr(sp + 1) + " " + v.substr(0, sp)});
            clauses.push_back({path, ">", "0 JPY"});
            break;
          }
          case Shape::kRecord:
            break;
        }
      }
    }
    for (const auto& c : clauses) out.push_back(OracleQuery{kind, {c}, {}, {}, {}});
  }

  // Sort keys on every orderable or text path seen in the corpus.
  for (const auto& [kind, paths] : seen)
    for (const auto& [joined, values] : paths) {
      OracleQuery q;
      q.sort = OracleSort{kind, split_path(joined), false};
      out.push_back(q);
      q.sort->descending = true;
      out.push_back(q);
      q.kind = kind;
      out.push_back(q);
    }

  const char* const kTimes[] = {"19990101T000000Z", "19990405T120000Z", "19990406T000000Z", "19990407T235959Z",
                                "20000101T000000Z"};
  while (out.size() < min_count) {
    std::size_t kind = rng() % kEventKindCount;
    const auto& clauses = pool[kind];
    OracleQuery q;
    q.kind = kind;
    if (!clauses.empty()) {
      q.clauses.push_back(clauses[rng() % clauses.size()]);
      if (rng() % 2) q.clauses.push_back(clauses[rng() % clauses.size()]);
    }
    if (rng() % 3 == 0) q.since = kTimes[rng() % std::size(kTimes)];
    if (rng() % 3 == 0) q.until = kTimes[rng() % std::size(kTimes)];
    if (rng() % 3 == 0 && seen.count(kind)) {
      const auto& paths = seen[kind];
      auto p = std::next(paths.begin(), rng() % paths.size());
      q.sort = OracleSort{kind, split_path(p->first), rng() % 2 == 0};
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::pair<std::string, std::string> vocabulary_probe(const VocabularyOracle& o, const std::string& value) {
  std::string leaf = "<" + std::string(o.element) + ">" + value + "</" + o.element + ">";
  std::string scope = o.scope;
  if (scope == "Person")
    return {"<NewsForm><InjuryFatality><Injured>" + leaf + "</Injured></InjuryFatality></NewsForm>",
            "InjuryFatality/Injured"};
  if (scope == "Location")
    return {"<NewsForm><InjuryFatality><AtLocation>" + leaf + "</AtLocation></InjuryFatality></NewsForm>",
            "InjuryFatality/AtLocation"};
  if (scope == "Organization")
    return {"<NewsForm><Deal><Target>" + leaf + "</Target></Deal></NewsForm>", "Deal/Target"};
  return {"<NewsForm><" + scope + ">" + leaf + "</" + scope + "></NewsForm>", scope};
}

// --- CLI ---------------------------------------------------------------------

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("newsform-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CommandResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text) {
  fs::path dir = scratch_dir("cli");
  fs::path in = dir / "stdin", out = dir / "stdout", err = dir / "stderr";
  std::ofstream(in, std::ios::binary) << stdin_text;
  auto quote = [](const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
  };
  std::string cmd = quote(NEWSFORM_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " <" + quote(in.string()) + " >" + quote(out.string()) + " 2>" + quote(err.string());
  int raw = std::system(cmd.c_str());
  CommandResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

}  // namespace newsform::testing
