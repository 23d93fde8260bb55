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

#include "newsform/model.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace newsform {

namespace {

template <std::size_t... I>
constexpr auto make_name_table(std::index_sequence<I...>) {
  return std::array<std::string_view, sizeof...(I)>{
      std::variant_alternative_t<I, NewsEvent>::kName...};
}

constexpr auto kEventNames = make_name_table(std::make_index_sequence<kEventKindCount>{});

template <std::size_t... I>
NewsEvent make_event_impl(std::size_t index, std::index_sequence<I...>) {
  NewsEvent out;
  ((index == I ? (out.emplace<I>(), true) : false) || ...);
  return out;
}

bool parse_digits(std::string_view s, int& out) {
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return !s.empty();
}

}  // namespace

std::string format_basic_utc(UtcTime t) {
  auto day = std::chrono::floor<std::chrono::days>(t);
  std::chrono::year_month_day ymd{day};
  std::chrono::hh_mm_ss hms{t - day};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d%02u%02uT%02ld%02ld%02ldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

std::optional<UtcTime> parse_basic_utc(std::string_view text) {
  if (text.size() != 16 || text[8] != 'T' || text[15] != 'Z') return std::nullopt;
  int year, month, day, hour, minute, second;
  if (!parse_digits(text.substr(0, 4), year) || !parse_digits(text.substr(4, 2), month) ||
      !parse_digits(text.substr(6, 2), day) || !parse_digits(text.substr(9, 2), hour) ||
      !parse_digits(text.substr(11, 2), minute) || !parse_digits(text.substr(13, 2), second))
    return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{static_cast<unsigned>(month)},
                                  std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) return std::nullopt;
  return std::chrono::sys_days{ymd} + std::chrono::hours{hour} + std::chrono::minutes{minute} +
         std::chrono::seconds{second};
}

std::string_view event_name(const NewsEvent& event) { return kEventNames[event.index()]; }

std::string_view event_name(std::size_t kind_index) { return kEventNames.at(kind_index); }

std::optional<std::size_t> event_kind(std::string_view name) {
  for (std::size_t i = 0; i < kEventNames.size(); ++i)
    if (kEventNames[i] == name) return i;
  return std::nullopt;
}

NewsEvent make_event(std::size_t kind_index) {
  return make_event_impl(kind_index, std::make_index_sequence<kEventKindCount>{});
}

std::span<const std::string_view> event_names() { return kEventNames; }

bool is_person_only_child(std::string_view name) {
  static constexpr std::string_view kNames[] = {"Additional", "Age",    "Country", "Family",
                                                "Function",   "Given",  "Prefix",  "Sex",
                                                "Suffix"};
  for (auto n : kNames)
    if (n == name) return true;
  return false;
}

bool is_organization_only_child(std::string_view name) {
  static constexpr std::string_view kNames[] = {"FullName", "Nickname", "OrganizationType",
                                                "Sport", "Ticker"};
  for (auto n : kNames)
    if (n == name) return true;
  return false;
}

}  // namespace newsform
