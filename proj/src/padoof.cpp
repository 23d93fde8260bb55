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

#include "newsform/padoof.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "newsform/codec.hpp"
#include "newsform/text_util.hpp"
#include "newsform/validate.hpp"

namespace newsform {

std::string posting_value(const FieldValue& leaf) {
  if (auto* d = std::get_if<Decimal>(&leaf)) return d->normalized().to_string();
  return leaf_text(leaf);
}

// --- index ------------------------------------------------------------------

namespace {

constexpr std::string_view kSuffix = ".newsform.xml";

std::string doc_id_of(const std::filesystem::path& path) {
  std::string name = path.filename().string();
  if (name.size() > kSuffix.size() && name.ends_with(kSuffix))
    return name.substr(0, name.size() - kSuffix.size());
  return path.stem().string();
}

}  // namespace

CorpusIndex CorpusIndex::build(const std::vector<std::filesystem::path>& paths,
                               std::vector<Diagnostic>* diagnostics) {
  CorpusIndex index;
  auto report = [&](const std::filesystem::path& p, std::string code, std::string message) {
    if (diagnostics) diagnostics->push_back(Diagnostic{"index", std::move(code), p.string(), std::move(message)});
  };
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      report(path, "unreadable", "cannot open file");
      continue;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    NewsForm form;
    try {
      form = parse_newsform(ss.str());
    } catch (const ParseError& e) {
      report(path, "parse-error", e.what());
      continue;
    }
    auto validation = validate(form);
    if (!validation.ok()) {
      const auto& first = validation.errors.front();
      report(path, "invalid", first.path + ": " + first.message);
      continue;
    }
    std::string id = doc_id_of(path);
    if (index.find(id)) {
      report(path, "duplicate-id", "a document with id " + id + " is already indexed");
      continue;
    }
    index.docs_.push_back(CorpusDoc{std::move(id), std::move(form), path});
  }
  std::sort(index.docs_.begin(), index.docs_.end(),
            [](const CorpusDoc& a, const CorpusDoc& b) { return a.id < b.id; });
  index.reindex();
  return index;
}

CorpusIndex CorpusIndex::build_dir(const std::filesystem::path& dir, std::vector<Diagnostic>* diagnostics) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().filename().string().ends_with(kSuffix))
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  return build(paths, diagnostics);
}

void CorpusIndex::add(CorpusDoc doc) {
  auto it = std::lower_bound(docs_.begin(), docs_.end(), doc.id,
                             [](const CorpusDoc& d, const std::string& id) { return d.id < id; });
  if (it != docs_.end() && it->id == doc.id)
    *it = std::move(doc);
  else
    docs_.insert(it, std::move(doc));
  reindex();
}

const CorpusDoc* CorpusIndex::find(std::string_view id) const {
  for (const auto& d : docs_)
    if (d.id == id) return &d;
  return nullptr;
}

void CorpusIndex::reindex() {
  postings_.clear();
  time_index_.clear();
  for (const auto& doc : docs_) {
    if (doc.form.head.dateline_time) time_index_.emplace(*doc.form.head.dateline_time, doc.id);
    for (const auto& event : doc.form.events) {
      std::size_t kind = event.index();
      for (const auto& leaf : event_leaves(event))
        postings_[PostingKey{kind, leaf.path, posting_value(leaf.value)}].insert(doc.id);
    }
  }
}

bool CorpusIndex::operator==(const CorpusIndex& other) const {
  if (docs_.size() != other.docs_.size()) return false;
  for (std::size_t i = 0; i < docs_.size(); ++i) {
    const auto& a = docs_[i];
    const auto& b = other.docs_[i];
    if (a.id != b.id || a.source != b.source || !(a.form == b.form)) return false;
  }
  return postings_ == other.postings_ && time_index_ == other.time_index_;
}

// --- query parsing --------------------------------------------------------------

std::string_view query_op_name(QueryOp op) {
  switch (op) {
    case QueryOp::kEq: return "=";
    case QueryOp::kNe: return "!=";
    case QueryOp::kLt: return "<";
    case QueryOp::kLe: return "<=";
    case QueryOp::kGt: return ">";
    case QueryOp::kGe: return ">=";
    case QueryOp::kContains: return "contains";
  }
  return "";
}

namespace {

struct QToken {
  std::string text;
  std::size_t column = 0;
  bool quoted = false;
  bool op = false;
};

std::vector<QToken> lex_query(std::string_view s) {
  std::vector<QToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    QToken t;
    t.column = i;
    if (c == '"') {
      std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw QueryError("unterminated quoted value", i);
      t.text = std::string(s.substr(i + 1, close - i - 1));
      t.quoted = true;
      i = close + 1;
    } else if (c == '=' || c == '<' || c == '>' || c == '!') {
      std::size_t len = (i + 1 < s.size() && s[i + 1] == '=') ? 2 : 1;
      t.text = std::string(s.substr(i, len));
      if (t.text == "!") throw QueryError("expected '!='", i);
      t.op = true;
      i += len;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '=' &&
             s[j] != '<' && s[j] != '>' && s[j] != '!' && s[j] != '"')
        ++j;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<QueryOp> parse_op(const QToken& t) {
  if (t.quoted) return std::nullopt;
  if (t.text == "=") return QueryOp::kEq;
  if (t.text == "!=") return QueryOp::kNe;
  if (t.text == "<") return QueryOp::kLt;
  if (t.text == "<=") return QueryOp::kLe;
  if (t.text == ">") return QueryOp::kGt;
  if (t.text == ">=") return QueryOp::kGe;
  if (t.text == "contains") return QueryOp::kContains;
  return std::nullopt;
}

bool is_keyword(const QToken& t) {
  return !t.quoted && (t.text == "sort" || t.text == "since" || t.text == "until" || t.text == "and");
}

struct ResolvedPath {
  std::size_t kind;
  std::vector<std::string> path;
  const FieldInfo* field;
};

// Variant.Child.Grandchild, checked step by step so errors name the bad step.
ResolvedPath resolve_dotted(const QToken& t) {
  auto parts = split_path(t.text, '.');
  if (parts.empty() || parts.front().empty()) throw QueryError("expected a field path", t.column);
  auto kind = event_kind(parts.front());
  if (!kind) throw QueryError("unknown event type '" + parts.front() + "'", t.column);
  ResolvedPath r{*kind, {}, nullptr};
  std::size_t column = t.column + parts.front().size() + 1;
  const std::vector<FieldInfo>* fields = &event_fields(*kind);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& step = parts[i];
    if (!fields) throw QueryError("'" + parts[i - 1] + "' has no child elements", column);
    const FieldInfo* f = find_field(*fields, step);
    if (!f)
      throw QueryError("unknown field '" + step + "' in " +
                           text::join(std::vector<std::string>(parts.begin(), parts.begin() + i), "."),
                       column);
    r.path.push_back(step);
    r.field = f;
    fields = f->is_leaf() ? nullptr : &record_fields(f->record);
    column += step.size() + 1;
  }
  return r;
}

bool is_ordered(const FieldInfo& f) {
  if (f.record == RecordType::kMoney) return true;
  if (!f.is_leaf()) return false;
  return f.spec.kind == LeafKind::kInteger || f.spec.kind == LeafKind::kDecimal ||
         f.spec.kind == LeafKind::kTime;
}

bool is_numeric(const FieldInfo& f) {
  return f.is_leaf() && (f.spec.kind == LeafKind::kInteger || f.spec.kind == LeafKind::kDecimal);
}

std::optional<Money> parse_money_literal(std::string_view text) {
  std::vector<std::string> parts;
  for (auto p : text::split(text, ' '))
    if (!p.empty()) parts.emplace_back(p);
  if (parts.size() != 2) return std::nullopt;
  for (int flip = 0; flip < 2; ++flip) {
    const std::string& cur = parts[flip];
    const std::string& amt = parts[1 - flip];
    if (!text::is_upper_alpha_code(cur, 3)) continue;
    if (auto d = Decimal::parse(amt)) return Money{*d, cur};
  }
  return std::nullopt;
}

void check_value(const ResolvedPath& p, QueryOp op, const QToken& value) {
  const FieldInfo& f = *p.field;
  if (!f.is_leaf() && f.record != RecordType::kMoney)
    throw QueryError("'" + text::join(p.path, ".") + "' is a " + std::string(record_type_name(f.record)) +
                         " record; name one of its leaf fields",
                     value.column);
  if (op != QueryOp::kEq && op != QueryOp::kNe && op != QueryOp::kContains && !is_ordered(f))
    throw QueryError("operator " + std::string(query_op_name(op)) + " needs a numeric, time or Money field; '" +
                         text::join(p.path, ".") + "' is not ordered",
                     value.column);
  if (op == QueryOp::kContains && (is_ordered(f)))
    throw QueryError("contains applies to text fields only", value.column);
  if (f.record == RecordType::kMoney) {
    if (!parse_money_literal(value.text))
      throw QueryError("Money values are written as \"AMOUNT CUR\", e.g. \"2000000 USD\"", value.column);
  } else if (is_numeric(f)) {
    if (!Decimal::parse(value.text)) throw QueryError("expected a number", value.column);
  } else if (f.spec.kind == LeafKind::kTime) {
    if (!parse_basic_utc(value.text)) throw QueryError("expected a time like 19990125T181917Z", value.column);
  }
}

UtcTime parse_time_token(const std::vector<QToken>& toks, std::size_t i, const std::string& keyword) {
  if (i >= toks.size()) throw QueryError("expected a time after '" + keyword + "'", toks[i - 1].column);
  auto t = parse_basic_utc(toks[i].text);
  if (!t) throw QueryError("expected a time like 19990125T181917Z", toks[i].column);
  return *t;
}

}  // namespace

QueryExpr parse_query(std::string_view text) {
  QueryExpr q;
  auto toks = lex_query(text);
  std::size_t i = 0;
  auto end_column = text.size();

  if (i < toks.size() && !is_keyword(toks[i])) {
    // Predicates, or a bare variant.
    while (true) {
      if (i >= toks.size()) throw QueryError("expected a field path", end_column);
      const QToken& path_tok = toks[i];
      if (path_tok.quoted || path_tok.op) throw QueryError("expected a field path", path_tok.column);
      ResolvedPath p = resolve_dotted(path_tok);
      if (q.kind && *q.kind != p.kind)
        throw QueryError("all predicates must name the same event type", path_tok.column);
      q.kind = p.kind;
      ++i;
      if (p.path.empty()) {
        if (!q.predicates.empty()) throw QueryError("expected a field path", path_tok.column);
        break;  // bare variant
      }
      if (i >= toks.size()) throw QueryError("expected an operator", end_column);
      auto op = parse_op(toks[i]);
      if (!op) throw QueryError("expected an operator (= != < <= > >= contains)", toks[i].column);
      ++i;
      if (i >= toks.size() || toks[i].op) throw QueryError("expected a value", i < toks.size() ? toks[i].column : end_column);
      const QToken& value = toks[i];
      check_value(p, *op, value);
      std::string v = value.text;
      if (p.field->is_leaf() && p.field->spec.kind == LeafKind::kEnum) v = normalize_enum_text(p.field->spec, v);
      q.predicates.push_back(Predicate{p.kind, p.path, *op, v});
      ++i;
      if (i < toks.size() && !toks[i].quoted && toks[i].text == "and") {
        ++i;
        continue;
      }
      break;
    }
  }

  while (i < toks.size()) {
    const QToken& kw = toks[i];
    if (kw.quoted || (kw.text != "sort" && kw.text != "since" && kw.text != "until"))
      throw QueryError("unexpected '" + kw.text + "'", kw.column);
    ++i;
    if (kw.text == "sort") {
      if (q.sort) throw QueryError("only one sort key is allowed", kw.column);
      if (i >= toks.size()) throw QueryError("expected a field path after 'sort'", end_column);
      ResolvedPath p = resolve_dotted(toks[i]);
      if (p.path.empty()) throw QueryError("expected a field path after 'sort'", toks[i].column);
      if (q.kind && *q.kind != p.kind)
        throw QueryError("sort key must name the queried event type", toks[i].column);
      if (!p.field->is_leaf() && p.field->record != RecordType::kMoney)
        throw QueryError("sort key must be a leaf or Money field", toks[i].column);
      SortKey key{p.kind, p.path, false};
      ++i;
      if (i < toks.size() && (toks[i].text == "asc" || toks[i].text == "desc")) {
        key.descending = toks[i].text == "desc";
        ++i;
      }
      q.sort = std::move(key);
    } else if (kw.text == "since") {
      q.since = parse_time_token(toks, i, kw.text);
      ++i;
    } else {
      q.until = parse_time_token(toks, i, kw.text);
      ++i;
    }
  }
  return q;
}

std::string annotate_query_error(std::string_view text, const QueryError& error) {
  std::string out = "query error: " + std::string(error.what()) + "\n  " + std::string(text) + "\n  ";
  out += std::string(std::min(error.column(), text.size()), ' ');
  out += "^\n";
  return out;
}

// --- evaluation -------------------------------------------------------------------

namespace {

bool contains_ci(std::string_view hay, std::string_view needle) {
  return text::to_lower(hay).find(text::to_lower(needle)) != std::string::npos;
}

bool apply_order(std::strong_ordering c, QueryOp op) {
  switch (op) {
    case QueryOp::kEq: return c == 0;
    case QueryOp::kNe: return c != 0;
    case QueryOp::kLt: return c < 0;
    case QueryOp::kLe: return c <= 0;
    case QueryOp::kGt: return c > 0;
    case QueryOp::kGe: return c >= 0;
    case QueryOp::kContains: return false;
  }
  return false;
}

bool value_satisfies(const FieldValue& v, const Predicate& p) {
  if (auto* s = std::get_if<std::string>(&v)) {
    if (p.op == QueryOp::kContains) return contains_ci(*s, p.value);
    return p.op == QueryOp::kEq ? *s == p.value : *s != p.value;
  }
  if (auto* i = std::get_if<std::int64_t>(&v)) return apply_order(Decimal(*i).compare(*Decimal::parse(p.value)), p.op);
  if (auto* d = std::get_if<Decimal>(&v)) return apply_order(d->compare(*Decimal::parse(p.value)), p.op);
  if (auto* t = std::get_if<UtcTime>(&v)) return apply_order(*t <=> *parse_basic_utc(p.value), p.op);
  if (auto* m = std::get_if<Money>(&v)) {
    auto lit = parse_money_literal(p.value);
    // Amounts in another currency are not comparable and never match.
    if (m->currency != lit->currency) return false;
    return apply_order(m->amount.compare(lit->amount), p.op);
  }
  return false;
}

std::strong_ordering compare_values(const FieldValue& a, const FieldValue& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (auto* s = std::get_if<std::string>(&a)) return *s <=> std::get<std::string>(b);
  if (auto* i = std::get_if<std::int64_t>(&a)) return *i <=> std::get<std::int64_t>(b);
  if (auto* d = std::get_if<Decimal>(&a)) return d->compare(std::get<Decimal>(b));
  if (auto* t = std::get_if<UtcTime>(&a)) return *t <=> std::get<UtcTime>(b);
  if (auto* m = std::get_if<Money>(&a)) {
    const auto& n = std::get<Money>(b);
    if (auto c = m->currency <=> n.currency; c != 0) return c;
    return m->amount.compare(n.amount);
  }
  return leaf_text(a) <=> leaf_text(b);
}

// Candidate doc ids from equality postings; empty optional = no narrowing.
std::optional<std::set<std::string>> candidates(const CorpusIndex& index, const QueryExpr& q) {
  std::optional<std::set<std::string>> out;
  for (const auto& p : q.predicates) {
    if (p.op != QueryOp::kEq) continue;
    const FieldInfo* f = resolve_path(p.kind, p.path);
    if (!f || !f->is_leaf() || is_numeric(*f) || f->spec.kind == LeafKind::kTime) continue;
    auto it = index.postings().find(PostingKey{p.kind, text::join(p.path, "/"), p.value});
    std::set<std::string> ids = it == index.postings().end() ? std::set<std::string>{} : it->second;
    if (!out) {
      out = std::move(ids);
    } else {
      std::set<std::string> both;
      std::set_intersection(out->begin(), out->end(), ids.begin(), ids.end(), std::inserter(both, both.end()));
      out = std::move(both);
    }
  }
  return out;
}

}  // namespace

bool event_matches(const NewsEvent& event, const QueryExpr& q) {
  if (q.kind && event.index() != *q.kind) return false;
  for (const auto& p : q.predicates) {
    auto values = values_at(event, p.path);
    if (std::none_of(values.begin(), values.end(), [&](const FieldValue& v) { return value_satisfies(v, p); }))
      return false;
  }
  return true;
}

bool in_window(const NewsForm& form, const QueryExpr& q) {
  if (!q.since && !q.until) return true;
  if (!form.head.dateline_time) return false;
  if (q.since && *form.head.dateline_time < *q.since) return false;
  if (q.until && *form.head.dateline_time > *q.until) return false;
  return true;
}

std::vector<QueryHit> query(const CorpusIndex& index, const QueryExpr& q) {
  struct Row {
    QueryHit hit;
    std::optional<FieldValue> key;
  };
  std::vector<Row> rows;
  auto narrowed = candidates(index, q);
  for (const auto& doc : index.docs()) {
    if (narrowed && !narrowed->count(doc.id)) continue;
    if (!in_window(doc.form, q)) continue;
    bool matched = false;
    std::optional<FieldValue> key;
    for (const auto& event : doc.form.events) {
      if (!event_matches(event, q)) continue;
      matched = true;
      if (!q.sort || event.index() != q.sort->kind) continue;
      for (auto& v : values_at(event, q.sort->path)) {
        if (!key) {
          key = v;
          continue;
        }
        auto c = compare_values(v, *key);
        if (q.sort->descending ? c > 0 : c < 0) key = v;
      }
    }
    if (!matched) continue;
    Row row{QueryHit{doc.id, doc.source, std::nullopt}, key};
    if (key) row.hit.sort_value = leaf_text(*key);
    rows.push_back(std::move(row));
  }
  // Docs are already in id order; a stable sort keeps it for equal keys.
  if (q.sort) {
    bool desc = q.sort->descending;
    std::stable_sort(rows.begin(), rows.end(), [desc](const Row& a, const Row& b) {
      if (!a.key || !b.key) return a.key.has_value() && !b.key.has_value();
      auto c = compare_values(*a.key, *b.key);
      return desc ? c > 0 : c < 0;
    });
  }
  std::vector<QueryHit> hits;
  for (auto& r : rows) hits.push_back(std::move(r.hit));
  return hits;
}

std::vector<QueryHit> query(const CorpusIndex& index, std::string_view text) {
  return query(index, parse_query(text));
}

std::string format_hits(const std::vector<QueryHit>& hits) {
  std::string out;
  for (const auto& h : hits)
    out += h.doc_id + "\t" + h.source.string() + "\t" + h.sort_value.value_or("") + "\n";
  return out;
}

// --- stats -----------------------------------------------------------------------

UtcTime bucket_start(UtcTime t, Bucket bucket) {
  auto day = std::chrono::floor<std::chrono::days>(t);
  if (bucket == Bucket::kDay) return UtcTime(day);
  std::chrono::weekday wd{day};
  return UtcTime(day - std::chrono::days(wd.iso_encoding() - 1));
}

StatsResult stats(const CorpusIndex& index, std::size_t kind, Bucket bucket) {
  StatsResult result;
  std::map<UtcTime, std::size_t> counts;
  for (const auto& doc : index.docs()) {
    std::size_t n = std::count_if(doc.form.events.begin(), doc.form.events.end(),
                                  [&](const NewsEvent& e) { return e.index() == kind; });
    if (n == 0) continue;
    if (!doc.form.head.dateline_time) {
      result.undated += n;
      continue;
    }
    counts[bucket_start(*doc.form.head.dateline_time, bucket)] += n;
  }
  if (counts.empty()) return result;
  auto step = bucket == Bucket::kDay ? std::chrono::days(1) : std::chrono::days(7);
  for (UtcTime t = counts.begin()->first; t <= counts.rbegin()->first; t += step) {
    auto it = counts.find(t);
    result.buckets.push_back(BucketCount{t, it == counts.end() ? 0 : it->second});
  }
  return result;
}

std::string format_stats(const StatsResult& result) {
  std::string out;
  for (const auto& b : result.buckets) out += format_basic_utc(b.start) + "\t" + std::to_string(b.count) + "\n";
  if (result.undated > 0) out += "UNDATED\t" + std::to_string(result.undated) + "\n";
  return out;
}

// --- geography ----------------------------------------------------------------------

void Tally::add(Sentiment s) {
  switch (s) {
    case Sentiment::kPositive: ++positive; break;
    case Sentiment::kNegative: ++negative; break;
    case Sentiment::kOther: ++other; break;
  }
}

std::optional<std::string> event_country(const NewsEvent& event) {
  for (const char* loc : {"AtLocation", "ToLocation"}) {
    std::vector<std::string> path{loc, "Country"};
    if (!resolve_path(event.index(), path)) continue;
    auto values = values_at(event, path);
    if (!values.empty()) return leaf_text(values.front());
  }
  for (const auto& leaf : event_leaves(event))
    if (leaf.kind == LeafKind::kCountry) return leaf_text(leaf.value);
  return std::nullopt;
}

GeoDistribution geo_distribution(const CorpusIndex& index, const QueryExpr& q, const SentimentTable& table) {
  GeoDistribution geo;
  for (const auto& doc : index.docs()) {
    if (!in_window(doc.form, q)) continue;
    for (const auto& event : doc.form.events) {
      if (!event_matches(event, q)) continue;
      Sentiment s = table.classify(event);
      if (auto country = event_country(event))
        geo.countries[*country].add(s);
      else
        geo.unlocated.add(s);
    }
  }
  return geo;
}

std::string format_geo(const GeoDistribution& geo) {
  std::string out;
  auto row = [&](const std::string& name, const Tally& t) {
    out += name + "\t" + std::to_string(t.positive) + "\t" + std::to_string(t.negative) + "\t" +
           std::to_string(t.other) + "\n";
  };
  for (const auto& [country, t] : geo.countries) row(country, t);
  row("UNLOCATED", geo.unlocated);
  return out;
}

}  // namespace newsform
