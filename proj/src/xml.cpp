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

#include "newsform/xml.hpp"

#include <cstdint>

namespace newsform::xml {

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  Element document() {
    if (s_.substr(0, 3) == "\xEF\xBB\xBF") advance(3);
    skip_misc();
    if (at_end()) fail("document has no root element");
    if (peek() != '<') fail("expected '<'");
    Element root = element();
    skip_misc();
    if (!at_end()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, line_, column_);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view what) const { return s_.substr(pos_, what.size()) == what; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i) {
      if (s_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void expect(std::string_view what) {
    if (!looking_at(what)) fail("expected '" + std::string(what) + "'");
    advance(what.size());
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) advance();
  }

  void skip_until(std::string_view terminator, const char* what) {
    auto end = s_.find(terminator, pos_);
    if (end == std::string_view::npos) fail(std::string("unterminated ") + what);
    advance(end - pos_ + terminator.size());
  }

  // Whitespace, comments, processing instructions and DOCTYPE outside the root.
  void skip_misc() {
    while (true) {
      skip_space();
      if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<!DOCTYPE")) {
        int depth = 0;
        while (!at_end()) {
          char c = peek();
          advance();
          if (c == '[') ++depth;
          if (c == ']') --depth;
          if (c == '>' && depth <= 0) break;
        }
      } else {
        return;
      }
    }
  }

  std::string name() {
    if (!is_name_start(peek())) fail("expected a name");
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) advance();
    return std::string(s_.substr(start, pos_ - start));
  }

  void reference(std::string& out) {
    expect("&");
    if (peek() == '#') {
      advance();
      bool hex = false;
      if (peek() == 'x') {
        hex = true;
        advance();
      }
      std::uint32_t cp = 0;
      int digits = 0;
      while (!at_end() && peek() != ';') {
        char c = peek();
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else fail("bad character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
        if (cp > 0x10ffff) fail("character reference out of range");
        ++digits;
        advance();
      }
      if (digits == 0) fail("empty character reference");
      expect(";");
      if (cp == 0 || (cp >= 0xd800 && cp <= 0xdfff)) fail("invalid character reference");
      append_utf8(out, cp);
      return;
    }
    std::string entity = name();
    expect(";");
    if (entity == "lt") out.push_back('<');
    else if (entity == "gt") out.push_back('>');
    else if (entity == "amp") out.push_back('&');
    else if (entity == "quot") out.push_back('"');
    else if (entity == "apos") out.push_back('\'');
    else fail("unknown entity '&" + entity + ";'");
  }

  std::string attribute_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    advance();
    std::string value;
    while (!at_end() && peek() != quote) {
      if (peek() == '<') fail("'<' in attribute value");
      if (peek() == '&') {
        reference(value);
      } else {
        value.push_back(peek());
        advance();
      }
    }
    if (at_end()) fail("unterminated attribute value");
    advance();
    return value;
  }

  Element element() {
    Element el;
    el.line = line_;
    el.column = column_;
    expect("<");
    el.name = name();
    while (true) {
      bool had_space = !at_end() && is_space(peek());
      skip_space();
      if (looking_at("/>")) {
        advance(2);
        return el;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) fail("expected whitespace, '>' or '/>'");
      std::string attr = name();
      skip_space();
      expect("=");
      skip_space();
      for (const auto& a : el.attributes)
        if (a.first == attr) fail("duplicate attribute '" + attr + "'");
      el.attributes.emplace_back(attr, attribute_value());
    }

    std::string text;
    bool significant_text = false;
    while (true) {
      if (at_end()) fail("unterminated element <" + el.name + ">");
      if (looking_at("</")) {
        advance(2);
        std::string closing = name();
        if (closing != el.name)
          fail("mismatched end tag </" + closing + ">, expected </" + el.name + ">");
        skip_space();
        expect(">");
        break;
      }
      if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<![CDATA[")) {
        advance(9);
        auto end = s_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        text.append(s_.substr(pos_, end - pos_));
        significant_text = true;
        advance(end - pos_ + 3);
      } else if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        el.children.push_back(element());
      } else if (peek() == '&') {
        reference(text);
        significant_text = true;
      } else {
        char c = peek();
        if (c == '\r') {
          // Line-end normalization.
          advance();
          if (peek() == '\n') advance();
          text.push_back('\n');
          continue;
        }
        if (!is_space(c)) significant_text = true;
        if (c == '>' && text.size() >= 2 && text.compare(text.size() - 2, 2, "]]") == 0)
          fail("']]>' in character data");
        text.push_back(c);
        advance();
      }
    }
    if (el.children.empty()) {
      el.text = std::move(text);
    } else if (significant_text) {
      el.mixed_content = true;
    }
    return el;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void write_inline(const Element& el, std::string& out) {
  if (el.children.empty()) {
    if (el.text.empty()) {
      out += "<" + el.name + "/>";
    } else {
      out += "<" + el.name + ">" + escape_text(el.text) + "</" + el.name + ">";
    }
    return;
  }
  out += "<" + el.name + ">";
  for (const auto& child : el.children) write_inline(child, out);
  out += "</" + el.name + ">";
}

void write_block(const Element& el, int depth, std::string& out) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent;
  if (el.children.empty() || el.inline_children) {
    write_inline(el, out);
    out += "\n";
    return;
  }
  out += "<" + el.name + ">\n";
  for (const auto& child : el.children) write_block(child, depth + 1, out);
  out += indent + "</" + el.name + ">\n";
}

}  // namespace

Element read(std::string_view text) { return Reader(text).document(); }

std::string write(const Element& root) {
  std::string out;
  write_block(root, 0, out);
  return out;
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace newsform::xml
