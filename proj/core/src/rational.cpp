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

#include "leglab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace leglab {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text, /*allow_sign=*/true)) {
      throw std::invalid_argument("Rational: malformed text \"" + std::string(text) + "\"");
    }
    return Rational(Integer(std::string(text)));
  }
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_integer_text(num_text, /*allow_sign=*/true) ||
      !is_integer_text(den_text, /*allow_sign=*/false)) {
    throw std::invalid_argument("Rational: malformed text \"" + std::string(text) + "\"");
  }
  return Rational(Integer(std::string(num_text)), Integer(std::string(den_text)));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero() && exponent < 0) {
    throw std::domain_error("Rational: zero raised to a negative power");
  }
  const unsigned long e =
      exponent > 0 ? static_cast<unsigned long>(exponent)
                   : static_cast<unsigned long>(-static_cast<long>(exponent));
  const Rational powered(pow(base.numerator(), e), pow(base.denominator(), e));
  return exponent > 0 ? powered : Rational(1) / powered;
}

Integer factorial(long n) {
  if (n < 0) {
    throw std::domain_error("factorial: negative argument");
  }
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0) {
    throw std::domain_error("binomial: negative row index");
  }
  if (k < 0 || k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

}  // namespace leglab
