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

#include "newsform/decimal.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace newsform {

namespace {

constexpr std::int64_t kPow10[] = {1LL,
                                   10LL,
                                   100LL,
                                   1000LL,
                                   10000LL,
                                   100000LL,
                                   1000000LL,
                                   10000000LL,
                                   100000000LL,
                                   1000000000LL,
                                   10000000000LL,
                                   100000000000LL,
                                   1000000000000LL,
                                   10000000000000LL,
                                   100000000000000LL,
                                   1000000000000000LL,
                                   10000000000000000LL,
                                   100000000000000000LL,
                                   1000000000000000000LL};

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  std::string digits;
  int scale = 0;
  bool seen_point = false;
  std::size_t int_digits = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) {
        ++scale;
      } else {
        ++int_digits;
      }
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (int_digits == 0) return std::nullopt;
  if (seen_point && scale == 0) return std::nullopt;
  if (scale > kMaxScale) return std::nullopt;

  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) return std::nullopt;
  return Decimal(negative ? -value : value, scale);
}

std::string Decimal::to_string() const {
  std::uint64_t magnitude = static_cast<std::uint64_t>(mantissa_);
  if (mantissa_ < 0) magnitude = 0 - magnitude;
  std::string digits = std::to_string(magnitude);
  if (scale_ > 0) {
    if (digits.size() <= scale_) digits.insert(0, scale_ - digits.size() + 1, '0');
    digits.insert(digits.size() - scale_, 1, '.');
  }
  if (mantissa_ < 0) digits.insert(0, 1, '-');
  return digits;
}

std::strong_ordering Decimal::compare(const Decimal& other) const {
  // Bring both to the larger scale in 128-bit arithmetic.
  int common = scale_ > other.scale_ ? scale_ : other.scale_;
  __int128 a = static_cast<__int128>(mantissa_) * kPow10[common - scale_];
  __int128 b = static_cast<__int128>(other.mantissa_) * kPow10[common - other.scale_];
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Decimal> Decimal::shifted(int exponent) const {
  int scale = scale_;
  __int128 m = mantissa_;
  while (exponent > 0) {
    if (scale > 0) {
      --scale;
    } else {
      m *= 10;
      if (m > std::numeric_limits<std::int64_t>::max() || m < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    }
    --exponent;
  }
  while (exponent < 0) {
    if (scale >= kMaxScale) return std::nullopt;
    ++scale;
    ++exponent;
  }
  return Decimal(static_cast<std::int64_t>(m), scale);
}

Decimal Decimal::normalized() const {
  std::int64_t m = mantissa_;
  int s = scale_;
  while (s > 0 && m % 10 == 0) {
    m /= 10;
    --s;
  }
  return Decimal(m, s);
}

double Decimal::to_double() const {
  return static_cast<double>(mantissa_) / static_cast<double>(kPow10[scale_]);
}

bool Decimal::is_integer() const { return normalized().scale() == 0; }

}  // namespace newsform
