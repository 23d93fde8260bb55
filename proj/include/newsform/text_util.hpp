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

#include <string>
#include <string_view>
#include <vector>

namespace newsform::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
bool starts_with_upper(std::string_view s);
bool is_all_digits(std::string_view s);

// Well-formed UTF-8 that XML 1.0 can carry: no C0 controls other than tab and
// newline, no carriage return.
bool is_xml_safe_utf8(std::string_view s);

// [A-Za-z][A-Za-z0-9]*
bool is_token(std::string_view s);

bool is_upper_alpha_code(std::string_view s, std::size_t length);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace newsform::text
