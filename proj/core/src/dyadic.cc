// Copyright 2026 The cgtherm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgt/dyadic.h"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cgt {
namespace {

BigInt PowerOfTwo(std::uint32_t k) { return BigInt(1) << k; }

// Returns k if |value| == 2^k, nullopt otherwise.
std::optional<std::uint32_t> Log2Exact(const BigInt& value) {
  if (value <= 0) return std::nullopt;
  std::uint32_t k = static_cast<std::uint32_t>(boost::multiprecision::msb(value));
  if (value != PowerOfTwo(k)) return std::nullopt;
  return k;
}

BigInt ParseDigits(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

std::size_t CountDigits(std::string_view s, std::size_t pos) {
  std::size_t n = 0;
  while (pos + n < s.size() &&
         std::isdigit(static_cast<unsigned char>(s[pos + n]))) {
    ++n;
  }
  return n;
}

}  // namespace

Dyadic Dyadic::FromParts(BigInt numerator, std::uint32_t exponent) {
  Dyadic d;
  d.numerator_ = std::move(numerator);
  d.exponent_ = exponent;
  d.Normalize();
  return d;
}

void Dyadic::Normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  BigInt magnitude = abs(numerator_);
  std::uint32_t twos =
      static_cast<std::uint32_t>(boost::multiprecision::lsb(magnitude));
  std::uint32_t k = std::min(twos, exponent_);
  if (k > 0) {
    numerator_ /= PowerOfTwo(k);
    exponent_ -= k;
  }
}

Dyadic Dyadic::Parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Dyadic {
    throw std::invalid_argument("bad number '" + std::string(text) + "': " +
                                why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t n = CountDigits(text, pos);
  if (n == 0) return fail("expected digits");
  BigInt whole = ParseDigits(text.substr(pos, n));
  pos += n;
  Dyadic result;
  if (pos == text.size()) {
    result = FromParts(whole, 0);
  } else if (text[pos] == '.') {
    ++pos;
    std::size_t f = CountDigits(text, pos);
    if (f == 0) return fail("expected fraction digits");
    BigInt frac = ParseDigits(text.substr(pos, f));
    pos += f;
    if (pos != text.size()) return fail("trailing characters");
    BigInt five_pow = 1;
    for (std::size_t i = 0; i < f; ++i) five_pow *= 5;
    BigInt ten_pow = five_pow * PowerOfTwo(static_cast<std::uint32_t>(f));
    BigInt scaled = whole * ten_pow + frac;
    if (scaled % five_pow != 0) return fail("not a dyadic rational");
    result = FromParts(scaled / five_pow, static_cast<std::uint32_t>(f));
  } else if (text[pos] == '/') {
    ++pos;
    std::size_t d = CountDigits(text, pos);
    if (d == 0) return fail("expected denominator");
    BigInt denominator = ParseDigits(text.substr(pos, d));
    pos += d;
    std::uint32_t exponent = 0;
    if (pos < text.size() && text[pos] == '^') {
      if (denominator != 2) return fail("power denominator must be 2^q");
      ++pos;
      std::size_t e = CountDigits(text, pos);
      if (e == 0) return fail("expected exponent");
      exponent = static_cast<std::uint32_t>(
          std::stoul(std::string(text.substr(pos, e))));
      pos += e;
    } else {
      auto log = Log2Exact(denominator);
      if (!log) return fail("not a dyadic rational");
      exponent = *log;
    }
    if (pos != text.size()) return fail("trailing characters");
    result = FromParts(whole, exponent);
  } else {
    return fail("trailing characters");
  }
  return negative ? -result : result;
}

BigInt Dyadic::Floor() const {
  if (exponent_ == 0) return numerator_;
  BigInt denominator = PowerOfTwo(exponent_);
  BigInt q = numerator_ / denominator;
  if (numerator_ < 0 && q * denominator != numerator_) q -= 1;
  return q;
}

BigInt Dyadic::Ceil() const {
  if (exponent_ == 0) return numerator_;
  return Floor() + 1;
}

Dyadic Dyadic::Scaled(int k) const {
  if (k >= 0) {
    std::uint32_t up = static_cast<std::uint32_t>(k);
    if (up <= exponent_) return FromParts(numerator_, exponent_ - up);
    return FromParts(numerator_ * PowerOfTwo(up - exponent_), 0);
  }
  return FromParts(numerator_, exponent_ + static_cast<std::uint32_t>(-k));
}

Dyadic Dyadic::DividedBy(long long divisor) const {
  auto log = Log2Exact(BigInt(divisor < 0 ? -divisor : divisor));
  if (!log) {
    throw std::domain_error("division by " + std::to_string(divisor) +
                            " leaves the dyadic rationals");
  }
  Dyadic result = Scaled(-static_cast<int>(*log));
  return divisor < 0 ? -result : result;
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.numerator_ = -d.numerator_;
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (exponent_ >= other.exponent_) {
    numerator_ += other.numerator_ * PowerOfTwo(exponent_ - other.exponent_);
  } else {
    numerator_ = numerator_ * PowerOfTwo(other.exponent_ - exponent_) +
                 other.numerator_;
    exponent_ = other.exponent_;
  }
  Normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(long long factor) {
  numerator_ *= factor;
  Normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.Sign(), sb = b.Sign();
  if (sa != sb) return sa <=> sb;
  if (a.exponent_ == b.exponent_) {
    return a.numerator_ < b.numerator_   ? std::strong_ordering::less
           : a.numerator_ > b.numerator_ ? std::strong_ordering::greater
                                         : std::strong_ordering::equal;
  }
  BigInt lhs = a.numerator_, rhs = b.numerator_;
  if (a.exponent_ < b.exponent_) {
    lhs *= PowerOfTwo(b.exponent_ - a.exponent_);
  } else {
    rhs *= PowerOfTwo(a.exponent_ - b.exponent_);
  }
  return lhs < rhs   ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
}

std::string Dyadic::ToString() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + PowerOfTwo(exponent_).str();
}

std::string Dyadic::ToPow2String() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

double Dyadic::ToDouble() const {
  return std::ldexp(numerator_.convert_to<double>(),
                    -static_cast<int>(exponent_));
}

std::size_t Dyadic::Hash() const {
  const auto& backend = numerator_.backend();
  std::size_t h = exponent_ * 0x9e3779b97f4a7c15ULL;
  for (unsigned i = 0; i < backend.size(); ++i) {
    h = (h ^ static_cast<std::size_t>(backend.limbs()[i])) * 0x100000001b3ULL;
  }
  return h ^ static_cast<std::size_t>(Sign() + 1);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.ToString();
}

Dyadic Max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }
Dyadic Min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }

Dyadic SimplestBetween(const std::optional<Dyadic>& lo,
                       const std::optional<Dyadic>& hi) {
  if (!lo && !hi) return Dyadic(0);
  if (!lo) {
    if (hi->Sign() > 0) return Dyadic(0);
    return Dyadic::FromParts(hi->Ceil() - 1, 0);
  }
  if (!hi) {
    if (lo->Sign() < 0) return Dyadic(0);
    return Dyadic::FromParts(lo->Floor() + 1, 0);
  }
  if (!(*lo < *hi)) {
    throw std::invalid_argument("SimplestBetween: empty interval (" +
                                lo->ToString() + ", " + hi->ToString() + ")");
  }
  if (lo->Sign() < 0 && hi->Sign() > 0) return Dyadic(0);
  if (hi->Sign() <= 0) return -SimplestBetween(-*hi, -*lo);
  // 0 <= lo < hi.
  Dyadic next_integer = Dyadic::FromParts(lo->Floor() + 1, 0);
  if (next_integer < *hi) return next_integer;
  for (std::uint32_t q = 1;; ++q) {
    Dyadic candidate = Dyadic::FromParts(lo->Scaled(static_cast<int>(q)).Floor() + 1, q);
    if (candidate < *hi) return candidate;
  }
}

}  // namespace cgt
