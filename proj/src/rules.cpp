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

#include "newsform/rules.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "newsform/codec.hpp"
#include "newsform/detail/traits.hpp"
#include "newsform/text_util.hpp"
#include "newsform/validate.hpp"

namespace newsform {

std::string Diagnostic::to_line() const {
  return stage + "\t" + code + "\t" + location + "\t" + message;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) out += d.to_line() + "\n";
  return out;
}

RuleError::RuleError(std::string rule_id, int line, const std::string& message)
    : std::runtime_error("rule " + rule_id + " (line " + std::to_string(line) + "): " + message),
      rule_id_(std::move(rule_id)),
      line_(line) {}

namespace {

// --- compiling -----------------------------------------------------------------

struct RuleText {
  std::string id;
  std::string pattern;
  std::string templ;
  int line = 0;
};

int tag_balance(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '<') continue;
    if (i + 1 < s.size() && s[i + 1] == '/') {
      --depth;
      continue;
    }
    auto close = s.find('>', i);
    if (close == std::string_view::npos) return depth + 1;  // unterminated tag
    if (s[close - 1] != '/') ++depth;
    i = close;
  }
  return depth;
}

std::vector<RuleText> split_rules(std::string_view source, std::string_view origin) {
  std::vector<RuleText> out;
  std::optional<RuleText> current;
  int line_no = 0;
  auto finish = [&]() {
    if (!current) return;
    if (tag_balance(current->templ) != 0 || text::trim(current->templ).empty())
      throw RuleError(current->id, current->line, "incomplete template");
    out.push_back(std::move(*current));
    current.reset();
  };
  for (auto raw : text::split(source, '\n')) {
    ++line_no;
    auto line = text::trim(raw);
    if (!current) {
      if (line.empty() || line[0] == '#') continue;
      RuleText r;
      r.line = line_no;
      r.id = std::string(origin) + ":" + std::to_string(line_no);
      if (line[0] == '@') {
        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) throw RuleError(r.id, line_no, "rule id without a pattern");
        r.id = std::string(line.substr(1, space - 1));
        line = text::trim(line.substr(space));
      }
      auto arrow = line.find("=>");
      if (arrow == std::string_view::npos) throw RuleError(r.id, line_no, "missing '=>'");
      r.pattern = std::string(text::trim(line.substr(0, arrow)));
      r.templ = std::string(text::trim(line.substr(arrow + 2)));
      current = std::move(r);
    } else {
      if (line.empty()) throw RuleError(current->id, current->line, "incomplete template");
      current->templ += std::string(line);
    }
    if (!current->templ.empty() && tag_balance(current->templ) == 0) finish();
  }
  finish();
  return out;
}

std::vector<std::string> pattern_words(std::string_view pattern) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : pattern) {
    if (c == ' ' || c == '\t') {
      flush();
    } else if (c == '[' || c == ']') {
      flush();
      words.emplace_back(1, c);
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return words;
}

std::vector<PatternAtom> parse_pattern(const std::vector<std::string>& words, std::size_t& i,
                                       bool nested, const RuleText& rt) {
  std::vector<PatternAtom> atoms;
  while (i < words.size()) {
    const std::string& w = words[i];
    if (w == "]") {
      if (!nested) throw RuleError(rt.id, rt.line, "unbalanced ']'");
      ++i;
      return atoms;
    }
    ++i;
    PatternAtom atom;
    if (w == "[") {
      atom.type = PatternAtom::Type::kOptional;
      atom.children = parse_pattern(words, i, true, rt);
      if (atom.children.empty()) throw RuleError(rt.id, rt.line, "empty optional group");
    } else if (w[0] == '?') {
      atom.type = PatternAtom::Type::kSlot;
      auto colon = w.find(':');
      std::string kind = w.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
      auto k = parse_entity_kind(kind);
      if (!k) throw RuleError(rt.id, rt.line, "unknown slot kind '" + kind + "'");
      atom.slot_kind = *k;
      atom.variable = colon == std::string::npos ? kind : w.substr(colon + 1);
      if (atom.variable.empty() || !text::is_token(atom.variable))
        throw RuleError(rt.id, rt.line, "bad slot variable in '" + w + "'");
    } else if (w[0] == '*' && w.size() > 1 && text::is_all_digits(w.substr(1))) {
      atom.type = PatternAtom::Type::kSkip;
      atom.max_skip = std::stoul(w.substr(1));
    } else {
      // Literal words are split the way sentences are tokenized.
      auto tokens = tokenize(w, Span{0, w.size()});
      for (const auto& t : tokens) {
        PatternAtom lit;
        lit.literal = text::to_lower(t.text);
        atoms.push_back(std::move(lit));
      }
      continue;
    }
    atoms.push_back(std::move(atom));
  }
  if (nested) throw RuleError(rt.id, rt.line, "unbalanced '['");
  return atoms;
}

void collect_slots(const std::vector<PatternAtom>& atoms, std::map<std::string, EntityKind>& slots,
                   int& literals, const RuleText& rt) {
  for (const auto& a : atoms) {
    switch (a.type) {
      case PatternAtom::Type::kLiteral: ++literals; break;
      case PatternAtom::Type::kSlot: {
        auto [it, inserted] = slots.emplace(a.variable, a.slot_kind);
        if (!inserted && it->second != a.slot_kind)
          throw RuleError(rt.id, rt.line, "variable ?" + a.variable + " bound to two kinds");
        break;
      }
      case PatternAtom::Type::kOptional: collect_slots(a.children, slots, literals, rt); break;
      case PatternAtom::Type::kSkip: break;
    }
  }
}

bool slot_fits(EntityKind kind, const FieldInfo& field) {
  switch (field.record) {
    case RecordType::kPerson: return kind == EntityKind::kPerson;
    case RecordType::kOrganization: return kind == EntityKind::kOrganization;
    case RecordType::kParty:
      return kind == EntityKind::kPerson || kind == EntityKind::kOrganization;
    case RecordType::kLocation: return kind == EntityKind::kLocation;
    case RecordType::kMoney: return kind == EntityKind::kMoney;
    case RecordType::kMeasure:
      return kind == EntityKind::kTemperature || kind == EntityKind::kSpeed ||
             kind == EntityKind::kDistance;
    case RecordType::kNone: break;
  }
  switch (field.spec.kind) {
    case LeafKind::kText: return true;
    case LeafKind::kInteger: return kind == EntityKind::kNumber;
    case LeafKind::kDecimal: return kind == EntityKind::kNumber || kind == EntityKind::kPercent;
    default: return false;
  }
}

void check_template(const xml::Element& el, const std::vector<FieldInfo>& fields,
                    const std::string& path, const std::map<std::string, EntityKind>& slots,
                    const RuleText& rt) {
  if (!el.attributes.empty()) throw RuleError(rt.id, rt.line, "attributes in template");
  for (const auto& child : el.children) {
    std::string child_path = path + "/" + child.name;
    const FieldInfo* field = find_field(fields, child.name);
    if (!field)
      throw RuleError(rt.id, rt.line,
                      "<" + child.name + "> is not an element of " + path + " in the schema");
    if (child.children.empty()) {
      auto value = text::trim(child.text);
      if (!value.empty() && value[0] == '?') {
        std::string var(value.substr(1));
        auto it = slots.find(var);
        if (it == slots.end())
          throw RuleError(rt.id, rt.line, "unbound template variable ?" + var);
        if (!slot_fits(it->second, *field))
          throw RuleError(rt.id, rt.line,
                          "?" + var + " (" + std::string(entity_kind_name(it->second)) +
                              ") cannot fill " + child_path);
      } else if (!field->is_leaf() && !value.empty()) {
        throw RuleError(rt.id, rt.line, child_path + " needs child elements or a ?variable");
      }
    } else {
      if (field->is_leaf()) throw RuleError(rt.id, rt.line, child_path + " is a leaf element");
      check_template(child, record_fields(field->record), child_path, slots, rt);
    }
  }
}

bool is_variable_leaf(const xml::Element& el) {
  return el.children.empty() && !text::trim(el.text).empty() && text::trim(el.text)[0] == '?';
}

xml::Element strip_variables(const xml::Element& el) {
  xml::Element out(el.name, el.text);
  for (const auto& c : el.children)
    if (!is_variable_leaf(c)) out.children.push_back(strip_variables(c));
  return out;
}

ExtractionRule compile_one(const RuleText& rt, std::size_t order) {
  ExtractionRule rule;
  rule.id = rt.id;
  rule.line = rt.line;
  rule.order = order;
  auto words = pattern_words(rt.pattern);
  std::size_t i = 0;
  rule.pattern = parse_pattern(words, i, false, rt);
  if (rule.pattern.empty()) throw RuleError(rt.id, rt.line, "empty pattern");

  std::map<std::string, EntityKind> slots;
  collect_slots(rule.pattern, slots, rule.priority, rt);

  try {
    rule.templ = xml::read(rt.templ);
  } catch (const xml::SyntaxError& e) {
    throw RuleError(rt.id, rt.line, std::string("template: ") + e.what());
  }
  auto kind = event_kind(rule.templ.name);
  if (!kind) throw RuleError(rt.id, rt.line, "<" + rule.templ.name + "> is not an event type");
  rule.event_kind = *kind;
  check_template(rule.templ, event_fields(*kind), rule.templ.name, slots, rt);

  // Constant parts must already be valid values.
  try {
    auto event = decode_event(strip_variables(rule.templ));
    for (const auto& issue : validate_event(event).errors)
      if (issue.code != issue::kMissing)
        throw RuleError(rt.id, rt.line, issue.path + ": " + issue.message);
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics())
      if (d.message.rfind("missing required", 0) != 0)
        throw RuleError(rt.id, rt.line, d.path + ": " + d.message);
  }
  return rule;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<ExtractionRule> compile_rules(std::string_view source, std::string_view origin) {
  std::vector<ExtractionRule> rules;
  for (const auto& rt : split_rules(source, origin)) rules.push_back(compile_one(rt, rules.size()));
  std::stable_sort(rules.begin(), rules.end(), [](const auto& a, const auto& b) {
    return a.priority > b.priority;
  });
  return rules;
}

std::vector<ExtractionRule> load_rules_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ResourceError("rules directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".rules") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::string combined;
  std::vector<ExtractionRule> all;
  for (const auto& f : files) {
    auto rules = compile_rules(read_text(f), f.filename().string());
    for (auto& r : rules) all.push_back(std::move(r));
  }
  // Re-establish one global order: priority, then file order.
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  for (std::size_t i = 0; i < all.size(); ++i) all[i].order = i;
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.priority > b.priority;
  });
  return all;
}

std::string pattern_to_string(const std::vector<PatternAtom>& pattern) {
  std::vector<std::string> parts;
  for (const auto& a : pattern) {
    switch (a.type) {
      case PatternAtom::Type::kLiteral: parts.push_back(a.literal); break;
      case PatternAtom::Type::kSlot: {
        std::string s = "?" + std::string(entity_kind_name(a.slot_kind));
        if (a.variable != entity_kind_name(a.slot_kind)) s += ":" + a.variable;
        parts.push_back(s);
        break;
      }
      case PatternAtom::Type::kOptional: parts.push_back("[ " + pattern_to_string(a.children) + " ]"); break;
      case PatternAtom::Type::kSkip: parts.push_back("*" + std::to_string(a.max_skip)); break;
    }
  }
  return text::join(parts, " ");
}

// --- matching ---------------------------------------------------------------------

namespace {

struct SlotChoice {
  std::size_t end;  // one past the last consumed token
  std::size_t mention;
  std::size_t reading;
  std::size_t first;
  std::size_t last;
};

class Matcher {
 public:
  Matcher(const SentenceParse& s) : s_(s) {
    lower_.reserve(s.tokens.size());
    for (const auto& t : s.tokens) lower_.push_back(text::to_lower(t.text));
  }

  struct Result {
    std::size_t end = 0;
    std::vector<std::pair<std::string, SlotChoice>> bindings;
  };

  // Longest match of the whole pattern starting at token `start`.
  std::optional<Result> longest(const std::vector<PatternAtom>& pattern, std::size_t start) {
    std::optional<Result> best;
    std::vector<std::pair<std::string, SlotChoice>> bindings;
    std::vector<const PatternAtom*> flat;
    for (const auto& a : pattern) flat.push_back(&a);
    match(flat, 0, start, bindings, [&](std::size_t end) {
      if (!best || end > best->end) best = Result{end, bindings};
    });
    return best;
  }

 private:
  using Sink = std::function<void(std::size_t)>;

  void match(const std::vector<const PatternAtom*>& atoms, std::size_t ai, std::size_t ti,
             std::vector<std::pair<std::string, SlotChoice>>& bindings, const Sink& sink) {
    if (ai == atoms.size()) {
      sink(ti);
      return;
    }
    const PatternAtom& a = *atoms[ai];
    switch (a.type) {
      case PatternAtom::Type::kLiteral:
        if (ti < lower_.size() && lower_[ti] == a.literal) match(atoms, ai + 1, ti + 1, bindings, sink);
        return;
      case PatternAtom::Type::kSkip:
        for (std::size_t n = 0; n <= a.max_skip && ti + n <= lower_.size(); ++n)
          match(atoms, ai + 1, ti + n, bindings, sink);
        return;
      case PatternAtom::Type::kOptional: {
        std::vector<const PatternAtom*> with;
        for (const auto& c : a.children) with.push_back(&c);
        for (std::size_t k = ai + 1; k < atoms.size(); ++k) with.push_back(atoms[k]);
        match(with, 0, ti, bindings, sink);
        match(atoms, ai + 1, ti, bindings, sink);
        return;
      }
      case PatternAtom::Type::kSlot:
        for (const auto& choice : slot_choices(a.slot_kind, ti)) {
          bindings.emplace_back(a.variable, choice);
          match(atoms, ai + 1, choice.end, bindings, sink);
          bindings.pop_back();
        }
        return;
    }
  }

  std::optional<std::size_t> reading_of_kind(const EntityMention& m, EntityKind kind) const {
    for (std::size_t r = 0; r < m.readings.size(); ++r)
      if (m.readings[r].kind == kind) return r;
    return std::nullopt;
  }

  // A slot consumes a mention starting here, or a noun group starting here
  // that contains a compatible mention.
  std::vector<SlotChoice> slot_choices(EntityKind kind, std::size_t ti) const {
    std::vector<SlotChoice> out;
    for (std::size_t mi = 0; mi < s_.mentions.size(); ++mi) {
      const auto& m = s_.mentions[mi];
      if (m.first != ti) continue;
      if (auto r = reading_of_kind(m, kind)) out.push_back(SlotChoice{m.last + 1, mi, *r, m.first, m.last});
    }
    for (const auto& g : s_.noun_groups) {
      if (g.first != ti) continue;
      std::optional<SlotChoice> pick;
      for (std::size_t mi = 0; mi < s_.mentions.size(); ++mi) {
        const auto& m = s_.mentions[mi];
        if (m.first < g.first || m.last > g.last) continue;
        if (auto r = reading_of_kind(m, kind)) {
          bool has_head = m.first <= g.head && g.head <= m.last;
          if (!pick || has_head) pick = SlotChoice{g.last + 1, mi, *r, g.first, g.last};
          if (has_head) break;
        }
      }
      if (pick && std::none_of(out.begin(), out.end(),
                               [&](const SlotChoice& c) { return c.end == pick->end; }))
        out.push_back(*pick);
    }
    return out;
  }

  const SentenceParse& s_;
  std::vector<std::string> lower_;
};

std::string person_text(const Person& p) {
  std::vector<std::string> parts;
  for (const auto* f : {&p.prefix, &p.given, &p.additional, &p.family})
    if (*f) parts.push_back(**f);
  if (parts.empty() && p.function) parts.push_back(*p.function);
  return text::join(parts, " ");
}

std::string location_text(const Location& l) {
  for (const auto* f : {&l.city, &l.region, &l.state, &l.country, &l.continent})
    if (*f) return **f;
  return "";
}

bool empty_record(const ReadingValue& v) {
  if (auto* p = std::get_if<Person>(&v)) return *p == Person{};
  if (auto* o = std::get_if<Organization>(&v)) return *o == Organization{};
  if (auto* l = std::get_if<Location>(&v)) return *l == Location{};
  return false;
}

// The value a reading contributes to a template element.
std::optional<FieldValue> value_for(const FieldInfo& field, const ReadingValue& value,
                                    std::string_view surface) {
  if (field.record != RecordType::kNone) {
    return std::visit(
        [&](const auto& v) -> std::optional<FieldValue> {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Quantity>) {
            if (field.record != RecordType::kMeasure) return std::nullopt;
            return FieldValue{Measure{v.value, v.unit.empty() ? Text{} : Text{v.unit}}};
          } else if constexpr (std::is_same_v<V, std::string>) {
            return std::nullopt;
          } else {
            return FieldValue{v};
          }
        },
        value);
  }
  switch (field.spec.kind) {
    case LeafKind::kInteger:
      if (auto* q = std::get_if<Quantity>(&value); q && q->value.is_integer()) {
        auto n = q->value.normalized();
        std::int64_t m = n.mantissa();
        for (int s = n.scale(); s > 0; --s) m /= 10;
        return FieldValue{m};
      }
      return std::nullopt;
    case LeafKind::kDecimal:
      if (auto* q = std::get_if<Quantity>(&value)) return FieldValue{q->value};
      return std::nullopt;
    case LeafKind::kText:
      if (auto* s = std::get_if<std::string>(&value)) return FieldValue{*s};
      if (auto* p = std::get_if<Person>(&value)) return FieldValue{person_text(*p)};
      if (auto* o = std::get_if<Organization>(&value); o && o->full_name) return FieldValue{*o->full_name};
      if (auto* l = std::get_if<Location>(&value); l && !location_text(*l).empty())
        return FieldValue{location_text(*l)};
      return FieldValue{std::string(surface)};
    default: return std::nullopt;
  }
}

struct Filler {
  const DocumentParse& doc;
  const SentenceParse& sentence;
  const std::map<std::string, Binding>& bindings;
  std::vector<Alternative> alternatives;
  std::vector<Diagnostic>* diagnostics;
  std::string rule_id;

  std::string surface(const Binding& b) const {
    const auto& t = sentence.tokens;
    return doc.text.substr(t[b.first].start, t[b.last].end - t[b.first].start);
  }

  // Returns false when the element must be left out.
  bool fill(xml::Element& el, const std::vector<FieldInfo>& fields, const std::string& path) {
    std::vector<xml::Element> kept;
    for (auto& child : el.children) {
      const FieldInfo* field = find_field(fields, child.name);
      std::string child_path = path.empty() ? child.name : path + "/" + child.name;
      if (is_variable_leaf(child)) {
        std::string var(text::trim(child.text).substr(1));
        const Binding& b = bindings.at(var);
        ReadingValue value = b.reading.value;
        // Coreferent mentions share one merged value.
        if (auto it = doc.entities.find(b.entity_id);
            it != doc.entities.end() && it->second.kind == b.reading.kind &&
            value.index() == it->second.value.index() && !empty_record(it->second.value))
          value = it->second.value;
        if (empty_record(value)) continue;
        auto fv = value_for(*field, value, surface(b));
        if (!fv) continue;
        kept.push_back(encode_value(child.name, *fv));
        note_alternatives(b, *field, child_path);
      } else if (!child.children.empty()) {
        if (fill(child, record_fields(field->record), child_path)) kept.push_back(std::move(child));
      } else {
        kept.push_back(std::move(child));
      }
    }
    el.children = std::move(kept);
    return !el.children.empty();
  }

  void note_alternatives(const Binding& b, const FieldInfo& field, const std::string& path) {
    for (const auto& m : sentence.mentions) {
      if (m.first != b.first && !(b.first <= m.first && m.last <= b.last)) continue;
      if (std::find(m.readings.begin(), m.readings.end(), b.reading) == m.readings.end()) continue;
      Alternative alt{path, {}};
      for (const auto& r : m.readings) {
        if (r.kind != b.reading.kind) continue;
        if (auto fv = value_for(field, r.value, "")) alt.options.push_back(*fv);
      }
      if (alt.options.size() > 1) alternatives.push_back(std::move(alt));
      return;
    }
  }
};

}  // namespace

std::vector<Fragment> apply_patterns(const DocumentParse& doc, const std::vector<ExtractionRule>& rules,
                                     std::vector<Diagnostic>* diagnostics) {
  std::vector<Fragment> fragments;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& sentence = doc.sentences[si];
    Matcher matcher(sentence);
    for (const auto& rule : rules) {
      std::size_t start = 0;
      while (start < sentence.tokens.size()) {
        auto result = matcher.longest(rule.pattern, start);
        if (!result || result->end == start) {
          ++start;
          continue;
        }
        Fragment f;
        f.sentence_index = si;
        f.rule_id = rule.id;
        std::map<std::string, Binding> by_var;
        for (const auto& [var, choice] : result->bindings) {
          const auto& m = sentence.mentions[choice.mention];
          Binding b{var, choice.first, choice.last, m.resolved_id.value_or(""),
                    m.readings[choice.reading]};
          by_var.insert_or_assign(var, b);
          f.bindings.push_back(std::move(b));
        }
        xml::Element el = rule.templ;
        Filler filler{doc, sentence, by_var, {}, diagnostics, rule.id};
        filler.fill(el, event_fields(rule.event_kind), "");
        try {
          f.event = decode_event(el);
          if (event_leaves(f.event).empty()) {
            start = result->end;
            continue;
          }
          f.alternatives = std::move(filler.alternatives);
          fragments.push_back(std::move(f));
        } catch (const ParseError& e) {
          if (diagnostics)
            diagnostics->push_back(Diagnostic{"pattern", "bad-fragment",
                                              "sentence " + std::to_string(si + 1),
                                              rule.id + ": " + e.what()});
        }
        start = result->end;
      }
    }
  }
  return fragments;
}

// --- merging ------------------------------------------------------------------

namespace {

struct PointerCollector {
  std::vector<const void*> ptrs;
  template <class T>
  void operator()(std::string_view, const T& member, const FieldSpec&) {
    ptrs.push_back(&member);
  }
};

std::string value_text(const auto& v) {
  using V = std::decay_t<decltype(v)>;
  if constexpr (std::is_same_v<V, std::string>) return v;
  else if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
  else if constexpr (std::is_same_v<V, Decimal>) return v.to_string();
  else if constexpr (std::is_same_v<V, UtcTime>) return format_basic_utc(v);
  else return "<record>";
}

struct Merger {
  std::vector<Diagnostic>* diagnostics;
  std::string event_label;

  void conflict(const std::string& path, const std::string& kept, const std::string& dropped) {
    if (diagnostics)
      diagnostics->push_back(Diagnostic{"merge", "conflict", event_label + "/" + path,
                                        "kept " + kept + ", dropped " + dropped});
  }

  template <class R>
  void merge(R& into, const R& from, const std::string& path) {
    PointerCollector source;
    reflect(source, from);
    std::size_t index = 0;
    auto visit = [&](std::string_view name, auto& member, const FieldSpec&) {
      using T = std::decay_t<decltype(member)>;
      const T& other = *static_cast<const T*>(source.ptrs[index++]);
      std::string child_path = path.empty() ? std::string(name) : path + "/" + std::string(name);
      merge_member(member, other, child_path);
    };
    reflect(visit, into);
  }

  template <class T>
  void merge_member(T& into, const T& from, const std::string& path) {
    if constexpr (detail::is_optional_v<T>) {
      if (!from) return;
      if (!into) {
        into = from;
        return;
      }
      merge_value(*into, *from, path);
    } else if constexpr (detail::is_vector_v<T>) {
      for (const auto& item : from)
        if (std::find(into.begin(), into.end(), item) == into.end()) into.push_back(item);
    } else {
      merge_value(into, from, path);
    }
  }

  template <class V>
  void merge_value(V& into, const V& from, const std::string& path) {
    if constexpr (std::is_same_v<V, Party>) {
      if (into.index() != from.index()) {
        conflict(path, "the first party", "a party of another kind");
        return;
      }
      std::visit([&](auto& a) { merge(a, std::get<std::decay_t<decltype(a)>>(from), path); }, into);
    } else if constexpr (std::is_same_v<V, std::string> || std::is_same_v<V, std::int64_t> ||
                         std::is_same_v<V, Decimal> || std::is_same_v<V, UtcTime>) {
      if (!(into == from)) conflict(path, value_text(into), value_text(from));
    } else {
      merge(into, from, path);
    }
  }
};

}  // namespace

std::vector<MergedEvent> merge_fragment_set(const std::vector<Fragment>& fragments,
                                            std::vector<Diagnostic>* diagnostics) {
  std::vector<const Fragment*> ordered;
  for (const auto& f : fragments) ordered.push_back(&f);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Fragment* a, const Fragment* b) {
    return a->sentence_index < b->sentence_index;
  });
  std::vector<MergedEvent> events;
  for (const Fragment* f : ordered) {
    auto it = std::find_if(events.begin(), events.end(),
                           [&](const MergedEvent& e) { return e.event.index() == f->event.index(); });
    if (it == events.end()) {
      events.push_back(MergedEvent{f->event, f->alternatives});
      continue;
    }
    Merger merger{diagnostics, std::string(event_name(f->event))};
    std::visit(
        [&](auto& into) {
          merger.merge(into, std::get<std::decay_t<decltype(into)>>(f->event), "");
        },
        it->event);
    for (const auto& alt : f->alternatives)
      if (std::none_of(it->alternatives.begin(), it->alternatives.end(),
                       [&](const Alternative& a) { return a.path == alt.path; }))
        it->alternatives.push_back(alt);
  }
  return events;
}

std::vector<NewsEvent> merge_fragments(const std::vector<Fragment>& fragments,
                                       std::vector<Diagnostic>* diagnostics) {
  std::vector<NewsEvent> out;
  for (auto& e : merge_fragment_set(fragments, diagnostics)) out.push_back(std::move(e.event));
  return out;
}

}  // namespace newsform
