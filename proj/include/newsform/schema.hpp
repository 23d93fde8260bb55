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

#pragma once

// Runtime view of the NewsForm content model, derived from the reflect()
// declarations in model.hpp.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "newsform/model.hpp"

namespace newsform {

enum class RecordType { kNone, kPerson, kLocation, kOrganization, kMoney, kMeasure, kParty };

std::string_view record_type_name(RecordType t);

template <class T>
constexpr RecordType record_type_of() {
  if constexpr (std::is_same_v<T, Person>) return RecordType::kPerson;
  else if constexpr (std::is_same_v<T, Location>) return RecordType::kLocation;
  else if constexpr (std::is_same_v<T, Organization>) return RecordType::kOrganization;
  else if constexpr (std::is_same_v<T, Money>) return RecordType::kMoney;
  else if constexpr (std::is_same_v<T, Measure>) return RecordType::kMeasure;
  else if constexpr (std::is_same_v<T, Party>) return RecordType::kParty;
  else return RecordType::kNone;
}

struct FieldInfo {
  std::string_view name;
  FieldSpec spec;
  RecordType record = RecordType::kNone;  // kNone for leaves
  bool repeated = false;
  bool required = false;

  bool is_leaf() const { return record == RecordType::kNone; }
};

// Children of a record type. For kParty this is the Person children followed by
// the Organization-only children.
const std::vector<FieldInfo>& record_fields(RecordType type);
const std::vector<FieldInfo>& event_fields(std::size_t kind);
const std::vector<FieldInfo>& head_fields();

const FieldInfo* find_field(const std::vector<FieldInfo>& fields, std::string_view name);

// Resolves Child/Grandchild/... below an event kind. Returns nullptr when any
// step is not a child of the previous one.
const FieldInfo* resolve_path(std::size_t kind, std::span<const std::string> path);

// Typed value found at a path.
using FieldValue = std::variant<std::string, std::int64_t, Decimal, UtcTime, Money, Measure,
                                Person, Location, Organization>;

// Canonical text of a leaf value (as it appears in XML).
std::string leaf_text(const FieldValue& v);

// All values at `path` inside the event, in document order. Repeated fields
// contribute one value per element; Party steps descend into whichever
// alternative is present.
std::vector<FieldValue> values_at(const NewsEvent& event, std::span<const std::string> path);

struct Leaf {
  std::string path;  // e.g. "AtLocation/Country"
  LeafKind kind;
  FieldValue value;
};

// Every populated leaf of the event in canonical order.
std::vector<Leaf> event_leaves(const NewsEvent& event);

std::vector<std::string> split_path(std::string_view path, char sep = '/');

}  // namespace newsform
