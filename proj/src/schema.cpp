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

#include "newsform/schema.hpp"

#include <array>
#include <utility>

#include "newsform/detail/traits.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

struct FieldsCollector {
  std::vector<FieldInfo>& out;

  template <class T>
  void operator()(std::string_view name, const T&, const FieldSpec& spec) {
    FieldInfo f{name, spec};
    if constexpr (detail::is_optional_v<T>) {
      f.record = record_type_of<typename T::value_type>();
    } else if constexpr (detail::is_vector_v<T>) {
      f.repeated = true;
      f.record = record_type_of<typename T::value_type>();
    } else {
      f.required = true;
    }
    out.push_back(f);
  }
};

template <class R>
std::vector<FieldInfo> collect_fields() {
  std::vector<FieldInfo> out;
  FieldsCollector c{out};
  const R record{};
  reflect(c, record);
  return out;
}

std::vector<FieldInfo> party_fields() {
  auto out = collect_fields<Person>();
  for (const auto& f : collect_fields<Organization>())
    if (!find_field(out, f.name)) out.push_back(f);
  return out;
}

template <std::size_t... I>
std::array<std::vector<FieldInfo>, kEventKindCount> all_event_fields(std::index_sequence<I...>) {
  return {collect_fields<std::variant_alternative_t<I, NewsEvent>>()...};
}

// --- values_at -------------------------------------------------------------

void collect(const Party& party, std::span<const std::string> path, std::vector<FieldValue>& out);

template <class V>
void collect(const V& value, std::span<const std::string> path, std::vector<FieldValue>& out);

struct PathStep {
  std::span<const std::string> path;
  std::vector<FieldValue>& out;

  template <class T>
  void operator()(std::string_view name, const T& member, const FieldSpec&) {
    if (name != path.front()) return;
    auto rest = path.subspan(1);
    if constexpr (detail::is_optional_v<T>) {
      if (member) collect(*member, rest, out);
    } else if constexpr (detail::is_vector_v<T>) {
      for (const auto& item : member) collect(item, rest, out);
    } else {
      collect(member, rest, out);
    }
  }
};

template <class V>
void collect(const V& value, std::span<const std::string> path, std::vector<FieldValue>& out) {
  if constexpr (std::is_same_v<V, std::string> || std::is_same_v<V, std::int64_t> ||
                std::is_same_v<V, Decimal> || std::is_same_v<V, UtcTime>) {
    if (path.empty()) out.emplace_back(value);
  } else {
    if (path.empty()) {
      out.emplace_back(value);
      return;
    }
    PathStep step{path, out};
    reflect(step, value);
  }
}

void collect(const Party& party, std::span<const std::string> path, std::vector<FieldValue>& out) {
  std::visit([&](const auto& alt) { collect(alt, path, out); }, party);
}

// --- event_leaves ----------------------------------------------------------

struct LeafWalker {
  std::string prefix;
  std::vector<Leaf>& out;

  template <class T>
  void operator()(std::string_view name, const T& member, const FieldSpec& spec) {
    std::string path = prefix.empty() ? std::string(name) : prefix + "/" + std::string(name);
    if constexpr (detail::is_optional_v<T>) {
      if (member) visit_value(path, *member, spec);
    } else if constexpr (detail::is_vector_v<T>) {
      for (const auto& item : member) visit_value(path, item, spec);
    } else {
      visit_value(path, member, spec);
    }
  }

  template <class V>
  void visit_value(const std::string& path, const V& value, const FieldSpec& spec) {
    if constexpr (std::is_same_v<V, std::string> || std::is_same_v<V, std::int64_t> ||
                  std::is_same_v<V, Decimal> || std::is_same_v<V, UtcTime>) {
      out.push_back(Leaf{path, spec.kind, FieldValue(value)});
    } else if constexpr (std::is_same_v<V, Party>) {
      std::visit([&](const auto& alt) { visit_value(path, alt, spec); }, value);
    } else {
      LeafWalker inner{path, out};
      reflect(inner, value);
    }
  }
};

}  // namespace

std::string_view record_type_name(RecordType t) {
  switch (t) {
    case RecordType::kNone: return "leaf";
    case RecordType::kPerson: return "Person";
    case RecordType::kLocation: return "Location";
    case RecordType::kOrganization: return "Organization";
    case RecordType::kMoney: return "Money";
    case RecordType::kMeasure: return "Measure";
    case RecordType::kParty: return "Organization-or-Person";
  }
  return "?";
}

const std::vector<FieldInfo>& record_fields(RecordType type) {
  static const std::vector<FieldInfo> kEmpty;
  static const auto kPerson = collect_fields<Person>();
  static const auto kLocation = collect_fields<Location>();
  static const auto kOrganization = collect_fields<Organization>();
  static const auto kMoney = collect_fields<Money>();
  static const auto kMeasure = collect_fields<Measure>();
  static const auto kParty = party_fields();
  switch (type) {
    case RecordType::kPerson: return kPerson;
    case RecordType::kLocation: return kLocation;
    case RecordType::kOrganization: return kOrganization;
    case RecordType::kMoney: return kMoney;
    case RecordType::kMeasure: return kMeasure;
    case RecordType::kParty: return kParty;
    case RecordType::kNone: break;
  }
  return kEmpty;
}

const std::vector<FieldInfo>& event_fields(std::size_t kind) {
  static const auto kAll = all_event_fields(std::make_index_sequence<kEventKindCount>{});
  return kAll.at(kind);
}

const std::vector<FieldInfo>& head_fields() {
  static const auto kHead = collect_fields<Head>();
  return kHead;
}

const FieldInfo* find_field(const std::vector<FieldInfo>& fields, std::string_view name) {
  for (const auto& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

const FieldInfo* resolve_path(std::size_t kind, std::span<const std::string> path) {
  if (path.empty() || kind >= kEventKindCount) return nullptr;
  const std::vector<FieldInfo>* fields = &event_fields(kind);
  const FieldInfo* found = nullptr;
  for (const auto& step : path) {
    if (!fields) return nullptr;
    found = find_field(*fields, step);
    if (!found) return nullptr;
    fields = found->is_leaf() ? nullptr : &record_fields(found->record);
  }
  return found;
}

std::string leaf_text(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, Decimal>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, UtcTime>) {
          return format_basic_utc(x);
        } else {
          std::vector<std::string> parts;
          std::vector<Leaf> leaves;
          LeafWalker w{"", leaves};
          reflect(w, x);
          for (const auto& l : leaves) parts.push_back(leaf_text(l.value));
          return text::join(parts, " ");
        }
      },
      v);
}

std::vector<FieldValue> values_at(const NewsEvent& event, std::span<const std::string> path) {
  std::vector<FieldValue> out;
  if (path.empty()) return out;
  std::visit(
      [&](const auto& e) {
        PathStep step{path, out};
        reflect(step, e);
      },
      event);
  return out;
}

std::vector<Leaf> event_leaves(const NewsEvent& event) {
  std::vector<Leaf> out;
  std::visit(
      [&](const auto& e) {
        LeafWalker w{"", out};
        reflect(w, e);
      },
      event);
  return out;
}

std::vector<std::string> split_path(std::string_view path, char sep) {
  std::vector<std::string> out;
  for (auto part : text::split(path, sep)) out.emplace_back(part);
  return out;
}

}  // namespace newsform
