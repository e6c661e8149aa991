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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_support.hpp"

using leglab::Integer;
using leglab::Rational;

namespace {

bool is_canonical(const Rational& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return r.denominator() > 0 && g == 1;
}

}  // namespace

TEST_CASE("rational: construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational: text form round trips") {
  CHECK(Rational::from_string("-1/30") == Rational(-1, 30));
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK(Rational(-1, 30).to_string() == "-1/30");
  CHECK(Rational(3).to_string() == "3");

  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("+3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("rational: arithmetic") {
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational: ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5).sign() == 1);
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational().sign() == 0);
}

TEST_CASE("rational: pow") {
  CHECK(leglab::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(leglab::pow(Rational(2, 3), 0) == Rational(1));
  CHECK(leglab::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(leglab::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rational: factorial and binomial") {
  CHECK(leglab::factorial(0) == 1);
  CHECK(leglab::factorial(5) == 120);
  CHECK(leglab::factorial(20) == Integer("2432902008176640000"));
  CHECK_THROWS_AS(leglab::factorial(-1), std::domain_error);

  CHECK(leglab::binomial(4, 2) == 6);
  CHECK(leglab::binomial(3, 5) == 0);
  CHECK(leglab::binomial(3, -1) == 0);
  CHECK(leglab::binomial(0, 0) == 1);
  CHECK_THROWS_AS(leglab::binomial(-2, 1), std::domain_error);

  // (n+k+2)! past 64-bit range stays exact.
  CHECK(leglab::factorial(31) % leglab::factorial(30) == 0);
  CHECK(leglab::factorial(31) / leglab::factorial(30) == 31);
}

TEST_CASE("rational: results stay canonical under random arithmetic") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 500; ++i) {
    const Rational a = leglab::testing::random_rational(rng);
    const Rational b = leglab::testing::random_rational(rng);
    CHECK(is_canonical(a + b));
    CHECK(is_canonical(a - b));
    CHECK(is_canonical(a * b));
    if (!b.is_zero()) CHECK(is_canonical(a / b));
  }
}
