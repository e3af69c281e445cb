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

#ifndef CGT_DYADIC_H_
#define CGT_DYADIC_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

// An exact number numerator / 2^exponent. Always kept in lowest terms:
// either exponent == 0 or the numerator is odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : numerator_(value) {}  // NOLINT: implicit by intent
  Dyadic(int value) : numerator_(value) {}        // NOLINT

  // numerator / 2^exponent, reduced.
  static Dyadic FromParts(BigInt numerator, std::uint32_t exponent);

  // Accepts "p", "p/d" with d a power of two, "p/2^q", and decimal literals
  // whose fraction is dyadic ("1.25"). Throws std::invalid_argument otherwise.
  static Dyadic Parse(std::string_view text);

  const BigInt& numerator() const { return numerator_; }
  std::uint32_t exponent() const { return exponent_; }

  bool IsInteger() const { return exponent_ == 0; }
  bool IsZero() const { return numerator_ == 0; }
  int Sign() const { return numerator_.sign(); }

  BigInt Floor() const;
  BigInt Ceil() const;

  // this * 2^k (k may be negative).
  Dyadic Scaled(int k) const;
  Dyadic Half() const { return Scaled(-1); }
  Dyadic Abs() const { return Sign() < 0 ? -*this : *this; }

  // Division by +-2^k; any other divisor throws std::domain_error because
  // the quotient would leave the dyadic rationals.
  Dyadic DividedBy(long long divisor) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(long long factor);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, long long k) { return a *= k; }
  friend Dyadic operator*(long long k, Dyadic a) { return a *= k; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "p" for integers, "p/d" otherwise (d = 2^exponent).
  std::string ToString() const;
  // "p" for integers, "p/2^q" otherwise.
  std::string ToPow2String() const;
  // Closest double; display only.
  double ToDouble() const;

  std::size_t Hash() const;

 private:
  void Normalize();

  BigInt numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

Dyadic Max(const Dyadic& a, const Dyadic& b);
Dyadic Min(const Dyadic& a, const Dyadic& b);

// The simplest dyadic strictly between lo and hi; an absent bound is
// unbounded on that side. Requires lo < hi when both are present.
Dyadic SimplestBetween(const std::optional<Dyadic>& lo,
                       const std::optional<Dyadic>& hi);

struct DyadicHash {
  std::size_t operator()(const Dyadic& d) const { return d.Hash(); }
};

}  // namespace cgt

#endif  // CGT_DYADIC_H_
