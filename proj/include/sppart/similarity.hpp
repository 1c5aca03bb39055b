// Copyright 2026 The sppart Authors.
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

#ifndef SPPART_SIMILARITY_HPP_
#define SPPART_SIMILARITY_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "sppart/error.hpp"

namespace sppart {

// Fixed-point scale shared by every exact quantity in the library: decimal
// text is parsed into integer multiples of 1e-6 and never rounded.
inline constexpr std::int64_t kScale = 1'000'000;
inline constexpr int kScaleDigits = 6;

// Parses "0.25", "1", ".5", "3.000001". At most six fractional digits; a
// leading '-' is accepted only when `allow_negative` is set. Throws a parse
// error with a short reason otherwise.
inline std::int64_t ParseMicros(std::string_view text,
                                bool allow_negative = false) {
  auto fail = [&](const char* why) {
    Fail(ErrorCode::kParse,
         "bad decimal '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    if (negative && !allow_negative) fail("negative value");
    ++pos;
  }
  std::int64_t whole = 0;
  int whole_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (whole > (INT64_MAX / kScale) / 10) fail("out of range");
    whole = whole * 10 + (text[pos] - '0');
    ++whole_digits;
    ++pos;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (frac_digits == kScaleDigits) fail("more than 6 fractional digits");
      frac = frac * 10 + (text[pos] - '0');
      ++frac_digits;
      ++pos;
    }
  }
  if (pos != text.size()) fail("unexpected character");
  if (whole_digits + frac_digits == 0) fail("no digits");
  for (int d = frac_digits; d < kScaleDigits; ++d) frac *= 10;
  const std::int64_t micros = whole * kScale + frac;
  return negative ? -micros : micros;
}

// Canonical shortest text for a micro-scaled value: 1000000 -> "1",
// 400000 -> "0.4", 0 -> "0".
inline std::string FormatMicros(std::int64_t micros) {
  std::string out;
  if (micros < 0) {
    out.push_back('-');
    micros = -micros;
  }
  out += std::to_string(micros / kScale);
  std::int64_t frac = micros % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, kScaleDigits - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

// Exact similarity (or sum of similarities), stored in units of 1e-6.
class Similarity {
 public:
  constexpr Similarity() = default;

  static constexpr Similarity FromMicros(std::int64_t micros) {
    Similarity s;
    s.micros_ = micros;
    return s;
  }
  static constexpr Similarity FromInt(std::int64_t whole) {
    return FromMicros(whole * kScale);
  }
  static Similarity Parse(std::string_view text) {
    return FromMicros(ParseMicros(text));
  }

  constexpr std::int64_t micros() const { return micros_; }
  double ToDouble() const { return static_cast<double>(micros_) / kScale; }
  std::string ToString() const { return FormatMicros(micros_); }

  constexpr Similarity& operator+=(Similarity other) {
    micros_ += other.micros_;
    return *this;
  }
  constexpr Similarity& operator-=(Similarity other) {
    micros_ -= other.micros_;
    return *this;
  }
  friend constexpr Similarity operator+(Similarity a, Similarity b) {
    return a += b;
  }
  friend constexpr Similarity operator-(Similarity a, Similarity b) {
    return a -= b;
  }
  friend constexpr auto operator<=>(Similarity, Similarity) = default;

  friend std::ostream& operator<<(std::ostream& os, Similarity s) {
    return os << s.ToString();
  }

 private:
  std::int64_t micros_ = 0;
};

// Non-negative reduced fraction, used for loss fractions and ratios.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction Of(std::int64_t num, std::int64_t den) {
    if (den == 0) return {0, 1};
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
  }

  double ToDouble() const { return static_cast<double>(num) / den; }
  std::string ToString() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

// value / reference as an exact fraction.
inline Fraction Ratio(Similarity value, Similarity reference) {
  return Fraction::Of(value.micros(), reference.micros());
}

// value >= (num/den) * reference, exactly.
inline bool AtLeastFractionOf(Similarity value, std::int64_t num,
                              std::int64_t den, Similarity reference) {
  return static_cast<__int128>(value.micros()) * den >=
         static_cast<__int128>(reference.micros()) * num;
}

}  // namespace sppart

#endif  // SPPART_SIMILARITY_HPP_
