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

// Minimal XML element-tree reader and writer.
//
// The reader handles the subset a NewsForm needs: elements, attributes (which
// it records so the caller can reject them), character data with the five
// predefined entities and numeric references, CDATA, comments, processing
// instructions and a DOCTYPE line. No namespaces, no DTD processing.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newsform::xml {

struct Element {
  std::string name;
  std::string text;  // character data; meaningful only when children is empty
  std::vector<Element> children;
  std::vector<std::pair<std::string, std::string>> attributes;
  int line = 0;
  int column = 0;
  bool mixed_content = false;     // non-whitespace text next to child elements
  bool inline_children = false;   // writer hint: keep children on one line

  Element() = default;
  explicit Element(std::string n) : name(std::move(n)) {}
  Element(std::string n, std::string t) : name(std::move(n)), text(std::move(t)) {}
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses one document and returns its root element. Throws SyntaxError.
Element read(std::string_view text);

// Two-space indented layout, one element per line unless inline_children is
// set, empty elements self-closed, trailing newline, no XML declaration.
std::string write(const Element& root);

std::string escape_text(std::string_view text);

}  // namespace newsform::xml
