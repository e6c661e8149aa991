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

#include "leglab/poly.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace leglab {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  canonicalize();
}

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  canonicalize();
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(int degree, const Rational& coefficient) {
  if (degree < 0) {
    throw std::invalid_argument("Poly::monomial: negative degree");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = coefficient;
  return Poly(std::move(coeffs));
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coefficient(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly operator+(const Poly& p, const Poly& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> sum(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (i < a.size()) sum[i] += a[i];
    if (i < b.size()) sum[i] += b[i];
  }
  return Poly(std::move(sum));
}

Poly operator-(const Poly& p) { return Rational(-1) * p; }

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] += a[i] * b[j];
    }
  }
  return Poly(std::move(prod));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> scaled;
  scaled.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) scaled.push_back(s * c);
  return Poly(std::move(scaled));
}

Poly operator*(const Poly& p, const Rational& s) { return s * p; }

Poly pow(const Poly& base, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("Poly pow: negative exponent");
  }
  Poly result = Poly::constant(Rational(1));
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

Poly derivative(const Poly& p, int order) {
  if (order < 0) {
    throw std::invalid_argument("derivative: negative order");
  }
  Poly current = p;
  for (int step = 0; step < order; ++step) {
    const auto& c = current.coefficients();
    if (c.size() <= 1) return Poly();
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
      d[i - 1] = Rational(static_cast<long>(i)) * c[i];
    }
    current = Poly(std::move(d));
  }
  return current;
}

Poly antiderivative(const Poly& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return Poly();
  std::vector<Rational> f(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    f[i + 1] = c[i] / Rational(static_cast<long>(i) + 1);
  }
  return Poly(std::move(f));
}

Rational integrate_definite(const Poly& p, const Rational& a, const Rational& b) {
  const Poly f = antiderivative(p);
  return eval(f, b) - eval(f, a);
}

Rational eval(const Poly& p, const Rational& x0) {
  const auto& c = p.coefficients();
  Rational value;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    value = value * x0 + *it;
  }
  return value;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) os << ',';
    os << '"' << c[i] << '"';
  }
  return os << ']';
}

}  // namespace leglab
