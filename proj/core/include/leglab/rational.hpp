// Copyright 2026 The leglab Authors
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

#ifndef LEGLAB_RATIONAL_HPP
#define LEGLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace leglab {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational number, always in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
///
/// Values are immutable in spirit: every operation produces a new canonical
/// value and there is no shared mutable state, so Rationals are safe to copy
/// and use across threads.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}
  Rational(int n) : value_(n) {}
  Rational(const Integer& n) : value_(n) {}

  /// num/den, canonicalized. Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses the canonical text form: "num/den" with den omitted when 1,
  /// e.g. "-1/30" or "3". Unreduced input such as "2/4" is accepted and
  /// canonicalized. Throws std::invalid_argument on malformed text and
  /// std::domain_error on a zero denominator.
  static Rational from_string(std::string_view text);

  /// Canonical text form: "num/den", with "/den" omitted when den == 1.
  std::string to_string() const;

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
    return c <=> 0;
  }

 private:
  mpq_class value_;
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent; negative exponents invert. Throws std::domain_error for
/// 0 raised to a negative power.
Rational pow(const Rational& base, int exponent);

/// n! as an exact integer. A negative argument always means a violated
/// parity or range constraint in the caller, so it is rejected with
/// std::domain_error rather than mapped to a default.
Integer factorial(long n);

/// binomial(n, k) with the convention that out-of-range k (k < 0 or k > n)
/// yields 0. Throws std::domain_error for n < 0.
Integer binomial(long n, long k);

/// base^exponent for exact integers.
Integer pow(const Integer& base, unsigned long exponent);

}  // namespace leglab

#endif  // LEGLAB_RATIONAL_HPP
