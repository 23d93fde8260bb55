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

#include "newsform/validate.hpp"

#include "newsform/detail/traits.hpp"
#include "newsform/text_util.hpp"

namespace newsform {

namespace {

bool is_ticker(std::string_view s) {
  auto alnum = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); };
  auto dot = s.find('.');
  auto base = s.substr(0, dot);
  if (base.empty() || base.size() > 6) return false;
  for (char c : base)
    if (!alnum(c)) return false;
  if (dot == std::string_view::npos) return true;
  auto suffix = s.substr(dot + 1);
  if (suffix.empty() || suffix.size() > 4) return false;
  for (char c : suffix)
    if (!alnum(c)) return false;
  return true;
}

std::string describe_bound(const FieldSpec& spec) {
  std::string out;
  out += spec.lower ? (spec.lower->inclusive ? "[" : "(") + spec.lower->value.to_string() : "(-inf";
  out += ", ";
  out += spec.upper ? spec.upper->value.to_string() + (spec.upper->inclusive ? "]" : ")") : "+inf)";
  return out;
}

class Validator {
 public:
  Validator(const CodeTables& codes, ValidationReport& report, std::optional<std::size_t> event,
            std::string path)
      : codes_(codes), report_(report), event_(event), path_(std::move(path)) {}

  template <class T>
  void operator()(std::string_view name, const T& member, const FieldSpec& spec) {
    std::string path = path_ + "/" + std::string(name);
    if constexpr (detail::is_optional_v<T>) {
      if (member) check(path, *member, spec);
    } else if constexpr (detail::is_vector_v<T>) {
      for (std::size_t i = 0; i < member.size(); ++i)
        check(path + "[" + std::to_string(i) + "]", member[i], spec);
    } else {
      check(path, member, spec);
    }
  }

  void error(const std::string& path, const char* code, std::string message) {
    report_.errors.push_back(Issue{event_, path, code, std::move(message)});
  }

  void check(const std::string& path, const std::string& value, const FieldSpec& spec) {
    if (!text::is_xml_safe_utf8(value)) {
      error(path, issue::kBadText, "text is not valid UTF-8 or contains control characters");
      return;
    }
    switch (spec.kind) {
      case LeafKind::kEnum:
        if (!in_vocabulary(spec, value))
          error(path, issue::kNotInVocabulary,
                "'" + value + "' is not a " + std::string(spec.vocab_name) + " value");
        break;
      case LeafKind::kToken:
        if (!text::is_token(value))
          error(path, issue::kBadToken, "'" + value + "' is not a single alphanumeric token");
        break;
      case LeafKind::kCountry:
        if (!text::is_upper_alpha_code(value, 3) || !codes_.is_country(value))
          error(path, issue::kUnknownCode, "'" + value + "' is not an ISO 3166 alpha-3 code");
        break;
      case LeafKind::kCurrency:
        if (!text::is_upper_alpha_code(value, 3) || !codes_.is_currency(value))
          error(path, issue::kUnknownCode, "'" + value + "' is not an ISO 4217 currency code");
        break;
      case LeafKind::kState:
        if (!text::is_upper_alpha_code(value, 2) || !codes_.is_state(value))
          error(path, issue::kUnknownCode, "'" + value + "' is not a USPS state abbreviation");
        break;
      case LeafKind::kTicker:
        if (!is_ticker(value)) error(path, issue::kBadTicker, "'" + value + "' is not a ticker");
        break;
      default:
        break;
    }
  }

  void check(const std::string& path, std::int64_t value, const FieldSpec& spec) {
    if ((spec.min_int && value < *spec.min_int) || (spec.max_int && value > *spec.max_int)) {
      std::string range = "[" + (spec.min_int ? std::to_string(*spec.min_int) : "-inf") + ", " +
                          (spec.max_int ? std::to_string(*spec.max_int) : "+inf") + "]";
      error(path, issue::kOutOfRange, std::to_string(value) + " is outside " + range);
    }
  }

  void check(const std::string& path, const Decimal& value, const FieldSpec& spec) {
    bool bad = false;
    if (spec.lower) {
      auto c = value.compare(spec.lower->value);
      bad |= spec.lower->inclusive ? c < 0 : c <= 0;
    }
    if (spec.upper) {
      auto c = value.compare(spec.upper->value);
      bad |= spec.upper->inclusive ? c > 0 : c >= 0;
    }
    if (bad)
      error(path, issue::kOutOfRange, value.to_string() + " is outside " + describe_bound(spec));
  }

  void check(const std::string&, const UtcTime&, const FieldSpec&) {}

  void check(const std::string& path, const Party& party, const FieldSpec& spec) {
    if (const auto* org = std::get_if<Organization>(&party)) {
      // Without an Organization-only child the element reads back as a Person.
      if (!org->full_name && !org->nickname && !org->organization_type && !org->sport &&
          !org->ticker)
        error(path, issue::kAmbiguousParty,
              "Organization needs FullName, Nickname, OrganizationType, Sport or Ticker to be "
              "distinguishable from a Person");
    }
    std::visit([&](const auto& alt) { check(path, alt, spec); }, party);
  }

  template <class R>
  void check(const std::string& path, const R& record, const FieldSpec&) {
    Validator inner(codes_, report_, event_, path);
    reflect(inner, record);
  }

 private:
  const CodeTables& codes_;
  ValidationReport& report_;
  std::optional<std::size_t> event_;
  std::string path_;
};

// Cross-field invariants of individual event kinds.
void check_event(Validator& v, const std::string& path, const Earnings& e) {
  if (e.earnings_amount && e.loss)
    v.error(path, issue::kExclusive, "EarningsAmount and Loss cannot both be present");
}

void check_event(Validator& v, const std::string& path, const Succession& e) {
  if (!e.person_in && !e.person_out)
    v.error(path, issue::kMissing, "a Succession needs In or Out");
}

template <class E>
void check_event(Validator&, const std::string&, const E&) {}

void validate_into(const NewsEvent& event, const CodeTables& codes, ValidationReport& report,
                   std::optional<std::size_t> index) {
  std::visit(
      [&](const auto& e) {
        std::string path(std::decay_t<decltype(e)>::kName);
        Validator v(codes, report, index, path);
        reflect(v, e);
        check_event(v, path, e);
      },
      event);
}

}  // namespace

bool in_vocabulary(const FieldSpec& spec, std::string_view value) {
  for (auto allowed : spec.vocab)
    if (allowed == value) return true;
  return false;
}

ValidationReport validate(const NewsForm& doc, const CodeTables& codes) {
  ValidationReport report;
  Validator head(codes, report, std::nullopt, "Head");
  reflect(head, doc.head);
  for (std::size_t i = 0; i < doc.events.size(); ++i) validate_into(doc.events[i], codes, report, i);
  return report;
}

ValidationReport validate_event(const NewsEvent& event, const CodeTables& codes) {
  ValidationReport report;
  validate_into(event, codes, report, std::nullopt);
  return report;
}

}  // namespace newsform
