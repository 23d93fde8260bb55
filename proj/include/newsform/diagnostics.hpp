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
#include <vector>

namespace newsform {

// One line-delimited record: stage<TAB>code<TAB>location<TAB>message.
struct Diagnostic {
  std::string stage;     // pattern, merge, commonsense, validate
  std::string code;
  std::string location;  // e.g. LegalEvent[0]/SentenceType or sentence 2
  std::string message;

  std::string to_line() const;
  bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace newsform
