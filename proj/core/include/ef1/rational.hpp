// Copyright 2026 The Authors.
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

#ifndef EF1_RATIONAL_HPP_
#define EF1_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ef1 {

// Exact fraction over 64-bit integers. The denominator is always positive and
// the fraction is kept in lowest terms, so structural equality is value
// equality. Intermediate products are formed in 128 bits; a result that does
// not fit back into 64 bits throws Error(kOverflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q" or "p" with an optional leading '-'. Whitespace is rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  // Always "p/q", including "3/1". Used for serialized values.
  std::string to_fraction_string() const;
  // Rounded half away from zero to `places` digits, e.g. "1.090909".
  std::string to_decimal(int places = 6) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  struct Reduced {};
  // Trusts the caller: den > 0 and gcd(num, den) = 1.
  constexpr Rational(Reduced, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  friend struct RationalAccess;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace ef1

#endif  // EF1_RATIONAL_HPP_
