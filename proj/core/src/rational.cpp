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

#include "ef1/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "ef1/error.hpp"

namespace ef1 {
namespace {

__extension__ typedef __int128 i128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOverflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

struct RationalAccess {
  static Rational make(i128 numerator, i128 denominator) {
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    const i128 g = gcd128(numerator, denominator);
    if (g > 1) {
      numerator /= g;
      denominator /= g;
    }
    return Rational(Rational::Reduced{}, narrow(numerator), narrow(denominator));
  }
};

namespace {
Rational from_wide(i128 numerator, i128 denominator) {
  return RationalAccess::make(numerator, denominator);
}
}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return narrow(gcd128(a, b));
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const i128 g = gcd128(a, b);
  return narrow(abs128(static_cast<i128>(a) / g * b));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  *this = from_wide(numerator, denominator);
}


Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const std::int64_t p = parse_int(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::kParseError,
                "denominator must be unsigned in '" + std::string(text) + "'");
  }
  const std::int64_t q = parse_int(den_text, text);
  if (q == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  i128 scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const i128 mag = abs128(num_);
  // round half away from zero
  const i128 scaled = (mag * scale * 2 + den_) / (2 * static_cast<i128>(den_));
  const i128 whole = scaled / scale;
  const i128 frac = scaled % scale;

  std::string out = num_ < 0 && scaled != 0 ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  if (places > 0) {
    std::string digits = std::to_string(static_cast<long long>(frac));
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
  const i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
  return l <=> r;
}

}  // namespace ef1
