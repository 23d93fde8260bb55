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

#include "newsform/codec.hpp"

#include <charconv>
#include <set>

#include "newsform/detail/traits.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

std::string summarize(const std::vector<ParseDiagnostic>& diags) {
  if (diags.empty()) return "parse error";
  const auto& d = diags.front();
  std::string out = std::string(diagnostic_kind_name(d.kind)) + " error";
  if (d.line > 0) out += " at " + std::to_string(d.line) + ":" + std::to_string(d.column);
  if (!d.path.empty()) out += " (" + d.path + ")";
  out += ": " + d.message;
  if (diags.size() > 1) out += " (+" + std::to_string(diags.size() - 1) + " more)";
  return out;
}

std::string summarize(const ValidationReport& report) {
  if (report.errors.empty()) return "invalid document";
  const auto& e = report.errors.front();
  std::string out = "invalid document: " + e.path + ": " + e.message;
  if (report.errors.size() > 1) out += " (+" + std::to_string(report.errors.size() - 1) + " more)";
  return out;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t start = s[0] == '-' ? 1 : 0;
  if (!text::is_all_digits(s.substr(start))) return std::nullopt;
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

class Decoder {
 public:
  explicit Decoder(std::vector<ParseDiagnostic>& diags) : diags_(diags) {}

  void report(DiagnosticKind kind, const std::string& path, const xml::Element& el,
              std::string message) {
    diags_.push_back(ParseDiagnostic{kind, path, el.line, el.column, std::move(message)});
  }

  // Attributes and mixed content are rejected on every element.
  void check_shape(const std::string& path, const xml::Element& el) {
    if (!el.attributes.empty())
      report(DiagnosticKind::kSchema, path, el,
             "attributes are not allowed (found '" + el.attributes.front().first + "')");
    if (el.mixed_content)
      report(DiagnosticKind::kSchema, path, el, "text is not allowed next to child elements");
  }

  template <class R>
  void record(const std::string& path, const xml::Element& el, R& out) {
    check_shape(path, el);
    if (el.children.empty() && !text::trim(el.text).empty()) {
      report(DiagnosticKind::kType, path, el, "expected child elements, found text");
      return;
    }
    std::set<std::string_view> required_seen;
    for (const auto& child : el.children) {
      std::string child_path = path + "/" + child.name;
      Assign<R> assign{*this, child, child_path, required_seen};
      reflect(assign, out);
      if (!assign.matched)
        report(DiagnosticKind::kSchema, child_path, child,
               "unknown element <" + child.name + "> in " + last_step(path));
    }
    RequiredCheck check{*this, path, el, required_seen};
    reflect(check, out);
  }

  void value(const std::string& path, const xml::Element& el, Party& out) {
    bool org = false;
    for (const auto& child : el.children)
      if (is_organization_only_child(child.name)) org = true;
    if (org) {
      Organization o;
      record(path, el, o);
      out = std::move(o);
    } else {
      Person p;
      record(path, el, p);
      out = std::move(p);
    }
  }

  template <class R>
  void value(const std::string& path, const xml::Element& el, R& out) {
    record(path, el, out);
  }

  bool leaf(const std::string& path, const xml::Element& el) {
    check_shape(path, el);
    if (!el.children.empty()) {
      report(DiagnosticKind::kType, path, el, "expected text, found child elements");
      return false;
    }
    return true;
  }

  void value(const std::string& path, const xml::Element& el, std::string& out,
             const FieldSpec& spec) {
    if (!leaf(path, el)) return;
    if (spec.kind == LeafKind::kText) {
      out = el.text;
    } else {
      out = normalize_enum_text(spec, text::trim(el.text));
    }
  }

  void value(const std::string& path, const xml::Element& el, std::int64_t& out,
             const FieldSpec&) {
    if (!leaf(path, el)) return;
    auto v = parse_integer(text::trim(el.text));
    if (!v) {
      report(DiagnosticKind::kType, path, el, "expected an integer, found '" + el.text + "'");
      return;
    }
    out = *v;
  }

  void value(const std::string& path, const xml::Element& el, Decimal& out, const FieldSpec&) {
    if (!leaf(path, el)) return;
    auto v = Decimal::parse(text::trim(el.text));
    if (!v) {
      report(DiagnosticKind::kType, path, el, "expected a decimal number, found '" + el.text + "'");
      return;
    }
    out = *v;
  }

  void value(const std::string& path, const xml::Element& el, UtcTime& out, const FieldSpec&) {
    if (!leaf(path, el)) return;
    auto v = parse_basic_utc(text::trim(el.text));
    if (!v) {
      report(DiagnosticKind::kType, path, el,
             "expected a UTC time YYYYMMDDTHHMMSSZ, found '" + el.text + "'");
      return;
    }
    out = *v;
  }

  template <class R>
  void value(const std::string& path, const xml::Element& el, R& out, const FieldSpec&) {
    value(path, el, out);
  }

 private:
  static std::string last_step(const std::string& path) {
    auto slash = path.rfind('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
  }

  template <class R>
  struct Assign {
    Decoder& decoder;
    const xml::Element& child;
    const std::string& path;
    std::set<std::string_view>& required_seen;
    bool matched = false;

    template <class T>
    void operator()(std::string_view name, T& member, const FieldSpec& spec) {
      if (name != child.name) return;
      matched = true;
      if constexpr (detail::is_optional_v<T>) {
        if (member) {
          decoder.report(DiagnosticKind::kSchema, path, child,
                         "duplicate element <" + child.name + ">");
          return;
        }
        typename T::value_type v{};
        decoder.value(path, child, v, spec);
        member = std::move(v);
      } else if constexpr (detail::is_vector_v<T>) {
        typename T::value_type v{};
        decoder.value(path, child, v, spec);
        member.push_back(std::move(v));
      } else {
        if (!required_seen.insert(name).second) {
          decoder.report(DiagnosticKind::kSchema, path, child,
                         "duplicate element <" + child.name + ">");
          return;
        }
        decoder.value(path, child, member, spec);
      }
    }
  };

  struct RequiredCheck {
    Decoder& decoder;
    const std::string& path;
    const xml::Element& el;
    const std::set<std::string_view>& seen;

    template <class T>
    void operator()(std::string_view name, T&, const FieldSpec&) {
      if constexpr (!detail::is_optional_v<T> && !detail::is_vector_v<T>) {
        if (!seen.count(name))
          decoder.report(DiagnosticKind::kSchema, path, el,
                         "missing required element <" + std::string(name) + ">");
      }
    }
  };

  std::vector<ParseDiagnostic>& diags_;
};

// --- encoding ----------------------------------------------------------------

xml::Element encode_leaf(std::string_view name, std::string text) {
  return xml::Element(std::string(name), std::move(text));
}

template <class R>
xml::Element encode_record(std::string_view name, const R& record);

xml::Element encode_any(std::string_view name, const std::string& v) { return encode_leaf(name, v); }
xml::Element encode_any(std::string_view name, std::int64_t v) {
  return encode_leaf(name, std::to_string(v));
}
xml::Element encode_any(std::string_view name, const Decimal& v) {
  return encode_leaf(name, v.to_string());
}
xml::Element encode_any(std::string_view name, const UtcTime& v) {
  return encode_leaf(name, format_basic_utc(v));
}
xml::Element encode_any(std::string_view name, const Party& v) {
  return std::visit([&](const auto& alt) { return encode_record(name, alt); }, v);
}
template <class R>
xml::Element encode_any(std::string_view name, const R& v) {
  return encode_record(name, v);
}

struct Encoder {
  xml::Element& parent;

  template <class T>
  void operator()(std::string_view name, const T& member, const FieldSpec&) {
    if constexpr (detail::is_optional_v<T>) {
      if (member) parent.children.push_back(encode_any(name, *member));
    } else if constexpr (detail::is_vector_v<T>) {
      for (const auto& item : member) parent.children.push_back(encode_any(name, item));
    } else {
      parent.children.push_back(encode_any(name, member));
    }
  }
};

template <class R>
xml::Element encode_record(std::string_view name, const R& record) {
  xml::Element el{std::string(name)};
  Encoder enc{el};
  reflect(enc, record);
  // A nested record holding a single leaf stays on one line:
  //   <Source><Function>Civil Defense Official</Function></Source>
  el.inline_children = el.children.size() == 1 && el.children.front().children.empty();
  return el;
}

}  // namespace

std::string_view diagnostic_kind_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::kSyntax: return "syntax";
    case DiagnosticKind::kSchema: return "schema";
    case DiagnosticKind::kType: return "type";
  }
  return "?";
}

ParseError::ParseError(std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

InvalidDocument::InvalidDocument(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

std::string normalize_enum_text(const FieldSpec& spec, std::string_view text) {
  if (spec.kind == LeafKind::kEnum && spec.vocab_name == "Sport" && text == "Martial Arts")
    return "MartialArts";
  return std::string(text);
}

namespace {

void decode_event_into(Decoder& decoder, const xml::Element& element,
                       std::vector<ParseDiagnostic>& diags, std::optional<NewsEvent>& out) {
  auto kind = event_kind(element.name);
  if (!kind) {
    diags.push_back(ParseDiagnostic{DiagnosticKind::kSchema, element.name, element.line,
                                    element.column,
                                    "unknown element <" + element.name + "> (not an event type)"});
    return;
  }
  NewsEvent event = make_event(*kind);
  std::visit([&](auto& e) { decoder.record(element.name, element, e); }, event);
  out = std::move(event);
}

}  // namespace

NewsEvent decode_event(const xml::Element& element) {
  std::vector<ParseDiagnostic> diags;
  Decoder decoder(diags);
  std::optional<NewsEvent> event;
  decode_event_into(decoder, element, diags, event);
  if (!diags.empty()) throw ParseError(std::move(diags));
  return std::move(*event);
}

NewsForm parse_newsform(std::string_view text) {
  xml::Element root;
  try {
    root = xml::read(text);
  } catch (const xml::SyntaxError& e) {
    // Strip the "line:col: " prefix the reader put on the message.
    std::string message = e.what();
    auto colon = message.find(": ");
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError({ParseDiagnostic{DiagnosticKind::kSyntax, "", e.line(), e.column(), message}});
  }

  std::vector<ParseDiagnostic> diags;
  Decoder decoder(diags);
  NewsForm doc;
  if (root.name != "NewsForm") {
    diags.push_back(ParseDiagnostic{DiagnosticKind::kSchema, root.name, root.line, root.column,
                                    "root element must be <NewsForm>, found <" + root.name + ">"});
    throw ParseError(std::move(diags));
  }
  decoder.check_shape("NewsForm", root);
  bool seen_head = false;
  for (const auto& child : root.children) {
    if (child.name == "Head") {
      if (seen_head) {
        diags.push_back(ParseDiagnostic{DiagnosticKind::kSchema, "Head", child.line, child.column,
                                        "duplicate element <Head>"});
        continue;
      }
      seen_head = true;
      decoder.record("Head", child, doc.head);
      continue;
    }
    std::optional<NewsEvent> event;
    decode_event_into(decoder, child, diags, event);
    if (event) doc.events.push_back(std::move(*event));
  }
  if (!diags.empty()) throw ParseError(std::move(diags));
  return doc;
}

xml::Element encode_event(const NewsEvent& event) {
  return std::visit(
      [](const auto& e) {
        auto el = encode_record(std::decay_t<decltype(e)>::kName, e);
        el.inline_children = false;
        return el;
      },
      event);
}

xml::Element encode_value(std::string_view name, const FieldValue& value) {
  return std::visit([&](const auto& v) { return encode_any(name, v); }, value);
}

xml::Element encode_document(const NewsForm& doc) {
  xml::Element root{"NewsForm"};
  auto head = encode_record("Head", doc.head);
  head.inline_children = false;
  root.children.push_back(std::move(head));
  for (const auto& event : doc.events) root.children.push_back(encode_event(event));
  return root;
}

std::string serialize_newsform(const NewsForm& doc, const CodeTables& codes) {
  auto report = validate(doc, codes);
  if (!report.ok()) throw InvalidDocument(std::move(report));
  return xml::write(encode_document(doc));
}

}  // namespace newsform
