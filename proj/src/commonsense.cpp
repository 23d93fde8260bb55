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

#include "newsform/commonsense.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "newsform/codes.hpp"
#include "newsform/detail/traits.hpp"
#include "newsform/schema.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

std::string_view action_code(CommonsenseRule::Action action) {
  switch (action) {
    case CommonsenseRule::Action::kRejectFragment: return "reject-fragment";
    case CommonsenseRule::Action::kDropField: return "drop-field";
    case CommonsenseRule::Action::kPreferReading: return "prefer-reading";
  }
  return "";
}

namespace {

std::vector<std::vector<std::string>> tsv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  for (auto raw : text::split(text, '\n')) {
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (text::trim(raw).empty() || text::trim(raw)[0] == '#') {
      rows.emplace_back();  // keeps line numbers aligned
      continue;
    }
    std::vector<std::string> row;
    for (auto cell : text::split(raw, '\t')) row.emplace_back(text::trim(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void bad_row(std::string_view origin, std::size_t line, const std::string& msg) {
  throw ResourceError(std::string(origin) + ":" + std::to_string(line) + ": " + msg);
}

bool valid_path(std::size_t kind, const std::vector<std::string>& path) {
  return !path.empty() && resolve_path(kind, path) != nullptr;
}

}  // namespace

void KnowledgeBase::add_table(std::string name, std::string_view text) {
  KbTable rows;
  for (auto& row : tsv_rows(text))
    if (!row.empty()) rows.push_back(std::move(row));
  tables_.insert_or_assign(std::move(name), std::move(rows));
}

const KbTable* KnowledgeBase::table(std::string_view name) const {
  auto it = tables_.find(name);
  return it == tables_.end() ? nullptr : &it->second;
}

void KnowledgeBase::add_rules(std::string_view text, std::string_view origin) {
  auto rows = tsv_rows(text);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    std::size_t line = i + 1;
    if (row.empty()) continue;
    if (row.size() != 5) bad_row(origin, line, "expected 5 tab-separated columns");
    CommonsenseRule rule;
    rule.id = row[0];
    rule.scope = row[1];
    rule.message = row[4];
    auto kind = event_kind(rule.scope);
    if (!kind) bad_row(origin, line, "unknown scope '" + rule.scope + "'");

    std::vector<std::string> words;
    for (auto w : text::split(row[2], ' '))
      if (!w.empty()) words.emplace_back(w);
    auto need_table = [&](const std::string& name) {
      if (!table(name)) bad_row(origin, line, "unknown table '" + name + "'");
      return name;
    };
    auto path = [&](const std::string& p) {
      auto parts = split_path(p);
      if (!valid_path(*kind, parts)) bad_row(origin, line, "'" + p + "' is not a path of " + rule.scope);
      return parts;
    };
    auto& check = rule.check;
    if (words.size() == 5 && words[0] == "compatible" && words[3] == "via") {
      check.type = CommonsenseCheck::Type::kCompatible;
      check.a = path(words[1]);
      check.b = path(words[2]);
      check.table = need_table(words[4]);
    } else if ((words.size() == 3 || words.size() == 5) && words[0] == "equal") {
      check.type = CommonsenseCheck::Type::kEqual;
      check.a = path(words[1]);
      check.b = path(words[2]);
      if (words.size() == 5) {
        if (words[3] != "via") bad_row(origin, line, "expected 'via'");
        auto colon = words[4].find(':');
        if (colon == std::string::npos) bad_row(origin, line, "expected TABLE:KEY after 'via'");
        check.table = need_table(words[4].substr(0, colon));
        check.key = path(words[4].substr(colon + 1));
      }
    } else if (words.size() == 6 && words[0] == "ordered" && words[4] == "via") {
      check.type = CommonsenseCheck::Type::kOrdered;
      check.a = path(words[1]);
      check.b = path(words[2]);
      check.c = path(words[3]);
      check.table = need_table(words[5]);
    } else {
      bad_row(origin, line, "unrecognized check '" + row[2] + "'");
    }

    std::string action = row[3];
    std::string target;
    if (auto colon = action.find(':'); colon != std::string::npos) {
      target = action.substr(colon + 1);
      action = action.substr(0, colon);
    }
    if (action == "RejectFragment") {
      rule.action = CommonsenseRule::Action::kRejectFragment;
      if (!target.empty()) bad_row(origin, line, "RejectFragment takes no path");
    } else if (action == "DropField") {
      rule.action = CommonsenseRule::Action::kDropField;
      rule.target = target.empty()
                        ? (check.type == CommonsenseCheck::Type::kOrdered ? check.a : check.b)
                        : path(target);
    } else if (action == "PreferReading") {
      rule.action = CommonsenseRule::Action::kPreferReading;
      rule.target = target.empty() ? std::vector<std::string>{check.b.front()} : path(target);
    } else {
      bad_row(origin, line, "unknown action '" + row[3] + "'");
    }
    rules_.push_back(std::move(rule));
  }
}

KnowledgeBase KnowledgeBase::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ResourceError("kb directory not found: " + dir.string());
  KnowledgeBase kb;
  std::vector<std::filesystem::path> tables;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto& p = entry.path();
    if (p.extension() != ".tsv") continue;
    auto stem = p.stem().string();
    if (stem != "commonsense" && stem != "sentiment") tables.push_back(p);
  }
  std::sort(tables.begin(), tables.end());
  for (const auto& p : tables) kb.add_table(p.stem().string(), read_file(p));
  auto rules = dir / "commonsense.tsv";
  if (std::filesystem::exists(rules)) kb.add_rules(read_file(rules), "commonsense.tsv");
  return kb;
}

// --- evaluation ----------------------------------------------------------------

namespace {

std::vector<std::string> texts_at(const NewsEvent& event, const std::vector<std::string>& path) {
  std::vector<std::string> out;
  for (const auto& v : values_at(event, path)) {
    if (std::holds_alternative<std::string>(v) || std::holds_alternative<std::int64_t>(v) ||
        std::holds_alternative<Decimal>(v) || std::holds_alternative<UtcTime>(v))
      out.push_back(leaf_text(v));
  }
  return out;
}

std::optional<Decimal> decimal_at(const NewsEvent& event, const std::vector<std::string>& path) {
  for (const auto& v : values_at(event, path)) {
    if (auto* d = std::get_if<Decimal>(&v)) return *d;
    if (auto* i = std::get_if<std::int64_t>(&v)) return Decimal(*i);
  }
  return std::nullopt;
}

bool cell_matches(const std::string& cell, const std::string& value) {
  return cell == "*" || cell == value;
}

// True when the event satisfies the check (vacuously when operands are absent).
bool holds(const CommonsenseRule& rule, const NewsEvent& event, const KnowledgeBase& kb) {
  const auto& c = rule.check;
  switch (c.type) {
    case CommonsenseCheck::Type::kCompatible: {
      auto as = texts_at(event, c.a);
      auto bs = texts_at(event, c.b);
      if (as.empty() || bs.empty()) return true;
      const KbTable& table = *kb.table(c.table);
      for (const auto& a : as)
        for (const auto& b : bs) {
          bool allowed = std::any_of(table.begin(), table.end(), [&](const auto& row) {
            return row.size() >= 2 && cell_matches(row[0], a) && cell_matches(row[1], b);
          });
          if (!allowed) return false;
        }
      return true;
    }
    case CommonsenseCheck::Type::kEqual: {
      auto as = texts_at(event, c.a);
      if (as.empty()) return true;
      auto bs = texts_at(event, c.b);
      if (bs.empty() && !c.table.empty()) {
        const KbTable& table = *kb.table(c.table);
        for (const auto& key : texts_at(event, c.key))
          for (const auto& row : table)
            if (row.size() >= 2 && row[0] == key) bs.push_back(row[1]);
      }
      if (bs.empty()) return true;
      return std::any_of(bs.begin(), bs.end(), [&](const auto& b) { return b == as.front(); });
    }
    case CommonsenseCheck::Type::kOrdered: {
      auto dirs = texts_at(event, c.a);
      auto x = decimal_at(event, c.b);
      auto y = decimal_at(event, c.c);
      if (dirs.empty() || !x || !y) return true;
      auto order = x->compare(*y);
      std::string rel = order < 0 ? "<" : order > 0 ? ">" : "=";
      const KbTable& table = *kb.table(c.table);
      bool listed = false;
      for (const auto& row : table) {
        if (row.size() < 2 || row[0] != dirs.front()) continue;
        listed = true;
        if (row[1] == rel) return true;
      }
      return !listed;
    }
  }
  return true;
}

// Clears every value at `path`; returns whether anything was removed.
template <class R>
bool clear_path(R& record, std::span<const std::string> path);

template <class T>
bool clear_member(T& member, std::span<const std::string> rest) {
  if (rest.empty()) {
    if constexpr (detail::is_optional_v<T>) {
      bool had = member.has_value();
      member.reset();
      return had;
    } else if constexpr (detail::is_vector_v<T>) {
      bool had = !member.empty();
      member.clear();
      return had;
    } else {
      return false;  // required leaf
    }
  } else if constexpr (detail::is_optional_v<T>) {
    if (!member) return false;
    using V = typename T::value_type;
    if constexpr (std::is_same_v<V, Party>) {
      return std::visit([&](auto& alt) { return clear_path(alt, rest); }, *member);
    } else if constexpr (record_type_of<V>() != RecordType::kNone) {
      return clear_path(*member, rest);
    } else {
      return false;
    }
  } else if constexpr (detail::is_vector_v<T>) {
    bool changed = false;
    for (auto& item : member) {
      using V = typename T::value_type;
      if constexpr (std::is_same_v<V, Party>)
        changed |= std::visit([&](auto& alt) { return clear_path(alt, rest); }, item);
      else
        changed |= clear_path(item, rest);
    }
    return changed;
  } else {
    return false;
  }
}

template <class R>
bool clear_path(R& record, std::span<const std::string> path) {
  bool changed = false;
  auto visit = [&](std::string_view name, auto& member, const FieldSpec&) {
    if (name == path.front()) changed |= clear_member(member, path.subspan(1));
  };
  reflect(visit, record);
  return changed;
}

bool clear_event_path(NewsEvent& event, const std::vector<std::string>& path) {
  return std::visit([&](auto& e) { return clear_path(e, std::span<const std::string>(path)); }, event);
}

// Sets a top-level child to a record value of matching type.
bool set_child(NewsEvent& event, const std::string& name, const FieldValue& value) {
  bool done = false;
  std::visit(
      [&](auto& e) {
        auto visit = [&](std::string_view child, auto& member, const FieldSpec&) {
          if (child != name) return;
          using T = std::decay_t<decltype(member)>;
          if constexpr (detail::is_optional_v<T>) {
            using V = typename T::value_type;
            if constexpr (std::is_same_v<V, Party>) {
              if (auto* p = std::get_if<Person>(&value)) member = Party{*p}, done = true;
              if (auto* o = std::get_if<Organization>(&value)) member = Party{*o}, done = true;
            } else if constexpr (std::is_constructible_v<FieldValue, V>) {
              if (auto* v = std::get_if<V>(&value)) member = *v, done = true;
            }
          }
        };
        reflect(visit, e);
      },
      event);
  return done;
}

std::string location_of(std::size_t index, const NewsEvent& event, const std::vector<std::string>& path) {
  std::string loc = std::string(event_name(event)) + "[" + std::to_string(index) + "]";
  if (!path.empty()) loc += "/" + text::join(path, "/");
  return loc;
}

}  // namespace

CommonsenseResult apply_commonsense(std::vector<MergedEvent> events, const KnowledgeBase& kb) {
  CommonsenseResult result;
  std::vector<bool> rejected(events.size(), false);
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto& merged = events[i];
    bool changed = true;
    while (changed && !rejected[i]) {
      changed = false;
      for (const auto& rule : kb.rules()) {
        if (rule.scope != event_name(merged.event)) continue;
        if (holds(rule, merged.event, kb)) continue;
        std::string where = location_of(i, merged.event, rule.target);
        switch (rule.action) {
          case CommonsenseRule::Action::kRejectFragment:
            rejected[i] = true;
            result.diagnostics.push_back(Diagnostic{"commonsense", std::string(action_code(rule.action)),
                                                    location_of(i, merged.event, {}),
                                                    rule.id + ": " + rule.message});
            break;
          case CommonsenseRule::Action::kDropField:
            if (clear_event_path(merged.event, rule.target)) {
              changed = true;
              result.diagnostics.push_back(Diagnostic{"commonsense", std::string(action_code(rule.action)),
                                                      where, rule.id + ": " + rule.message});
            }
            break;
          case CommonsenseRule::Action::kPreferReading: {
            std::string target = text::join(rule.target, "/");
            for (const auto& alt : merged.alternatives) {
              if (alt.path != target) continue;
              for (const auto& option : alt.options) {
                NewsEvent candidate = merged.event;
                if (!set_child(candidate, target, option) || !holds(rule, candidate, kb)) continue;
                merged.event = std::move(candidate);
                changed = true;
                result.diagnostics.push_back(Diagnostic{"commonsense", std::string(action_code(rule.action)),
                                                        where, rule.id + ": " + rule.message});
                break;
              }
              if (changed) break;
            }
            break;
          }
        }
        if (changed || rejected[i]) break;
      }
    }
  }
  for (std::size_t i = 0; i < events.size(); ++i)
    if (!rejected[i]) result.events.push_back(std::move(events[i]));
  return result;
}

CommonsenseEvents apply_commonsense(const std::vector<NewsEvent>& events, const KnowledgeBase& kb) {
  std::vector<MergedEvent> merged;
  for (const auto& e : events) merged.push_back(MergedEvent{e, {}});
  auto r = apply_commonsense(std::move(merged), kb);
  CommonsenseEvents out;
  for (auto& e : r.events) out.events.push_back(std::move(e.event));
  out.diagnostics = std::move(r.diagnostics);
  return out;
}

}  // namespace newsform
