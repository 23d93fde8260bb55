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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace newsform {

// Exact base-10 number: value = mantissa * 10^-scale.
//
// Equality is structural, so "5.0" and "5" are different values that compare
// equivalent under compare(). The textual scale is preserved through parse and
// to_string, which keeps canonical XML byte-stable.
class Decimal {
 public:
  static constexpr int kMaxScale = 18;

  constexpr Decimal() = default;
  constexpr Decimal(std::int64_t mantissa, int scale = 0)
      : mantissa_(mantissa), scale_(static_cast<std::uint8_t>(scale)) {}

  // Accepts -?digits(.digits)?; no exponent, no leading '+', no whitespace.
  static std::optional<Decimal> parse(std::string_view text);

  std::string to_string() const;

  constexpr std::int64_t mantissa() const { return mantissa_; }
  constexpr int scale() const { return scale_; }

  // Numeric ordering independent of scale.
  std::strong_ordering compare(const Decimal& other) const;

  // Multiplies by 10^exponent exactly; nullopt on overflow.
  std::optional<Decimal> shifted(int exponent) const;

  // Drops trailing fractional zeros: 2000000.0 -> 2000000.
  Decimal normalized() const;

  double to_double() const;
  bool is_integer() const;

  bool operator==(const Decimal&) const = default;

 private:
  std::int64_t mantissa_ = 0;
  std::uint8_t scale_ = 0;
};

inline bool numerically_equal(const Decimal& a, const Decimal& b) {
  return a.compare(b) == std::strong_ordering::equal;
}

}  // namespace newsform
