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

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace newsform {

// Raised when a shipped data file (code table, lexicon, rule file, knowledge
// base) cannot be read.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource root: $NEWSFORM_DATA when set, otherwise the data/ directory of the
// source tree this library was built from.
std::filesystem::path data_root();

// ISO 3166 alpha-3 countries, ISO 4217 currencies and USPS state/province
// abbreviations, one code per line in codes/{iso3166,iso4217,usps}.txt.
class CodeTables {
 public:
  static CodeTables load(const std::filesystem::path& codes_dir);

  bool is_country(std::string_view code) const { return countries_.count(std::string(code)) > 0; }
  bool is_currency(std::string_view code) const { return currencies_.count(std::string(code)) > 0; }
  bool is_state(std::string_view code) const { return states_.count(std::string(code)) > 0; }

  const std::set<std::string>& countries() const { return countries_; }
  const std::set<std::string>& currencies() const { return currencies_; }
  const std::set<std::string>& states() const { return states_; }

 private:
  std::set<std::string> countries_;
  std::set<std::string> currencies_;
  std::set<std::string> states_;
};

// Tables loaded once from data_root()/codes.
const CodeTables& shipped_code_tables();

}  // namespace newsform
