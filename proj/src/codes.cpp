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

#include "newsform/codes.hpp"

#include <cstdlib>
#include <fstream>

#include "newsform/text_util.hpp"

#ifndef NEWSFORM_DEFAULT_DATA_DIR
#define NEWSFORM_DEFAULT_DATA_DIR "data"
#endif

namespace newsform {

namespace {

std::set<std::string> load_code_file(const std::filesystem::path& path, std::size_t length) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open code table " + path.string());
  std::set<std::string> codes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto code = text::trim(line);
    if (code.empty() || code[0] == '#') continue;
    if (!text::is_upper_alpha_code(code, length))
      throw ResourceError(path.string() + ":" + std::to_string(line_no) + ": bad code '" +
                          std::string(code) + "'");
    codes.emplace(code);
  }
  return codes;
}

}  // namespace

std::filesystem::path data_root() {
  if (const char* env = std::getenv("NEWSFORM_DATA"); env && *env) return env;
  return NEWSFORM_DEFAULT_DATA_DIR;
}

CodeTables CodeTables::load(const std::filesystem::path& codes_dir) {
  CodeTables t;
  t.countries_ = load_code_file(codes_dir / "iso3166.txt", 3);
  t.currencies_ = load_code_file(codes_dir / "iso4217.txt", 3);
  t.states_ = load_code_file(codes_dir / "usps.txt", 2);
  return t;
}

const CodeTables& shipped_code_tables() {
  static const CodeTables tables = CodeTables::load(data_root() / "codes");
  return tables;
}

}  // namespace newsform
