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

#ifndef LEGLAB_POLY_HPP
#define LEGLAB_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "leglab/rational.hpp"

namespace leglab {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree order (index i holds the coefficient of x^i).
///
/// Canonical form: the highest-index coefficient is nonzero; the zero
/// polynomial is the empty list. Its degree is "minus infinity", reported
/// as std::nullopt rather than any integer. All constructors canonicalize,
/// so equality is plain coefficient-list equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(int degree, const Rational& coefficient = Rational(1));

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(int i) const;

  bool operator==(const Poly&) const = default;

 private:
  void canonicalize();

  std::vector<Rational> coeffs_;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator-(const Poly& p);
Poly operator*(const Poly& p, const Poly& q);
Poly operator*(const Rational& s, const Poly& p);
Poly operator*(const Poly& p, const Rational& s);

/// base^exponent by repeated multiplication; exponent must be >= 0.
Poly pow(const Poly& base, int exponent);

/// order-fold formal derivative by the power rule; order 0 returns p.
Poly derivative(const Poly& p, int order = 1);

/// Term-wise antiderivative with zero constant term.
Poly antiderivative(const Poly& p);

/// Exact value of the definite integral of p over [a, b].
Rational integrate_definite(const Poly& p, const Rational& a, const Rational& b);

/// Exact evaluation at a rational point via Horner's scheme.
Rational eval(const Poly& p, const Rational& x0);

/// Prints the canonical coefficient-list form, e.g. ["-1/2","0","3/2"].
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace leglab

#endif  // LEGLAB_POLY_HPP
