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

#include "leglab/families.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace leglab::families {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative index");
  }
}

int parse_index(std::string_view text, std::string_view original) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw std::invalid_argument("FamilySpec: malformed index in \"" +
                                std::string(original) + "\"");
  }
  return value;
}

constexpr std::string_view kind_names[] = {"legendre", "bernoulli", "euler",
                                           "hermite", "bernstein"};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("FamilySpec: expected \"<family>:<index>\", got \"" +
                                std::string(text) + "\"");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view indices = text.substr(colon + 1);

  FamilySpec spec;
  if (name == "legendre") {
    spec.kind = Kind::Legendre;
  } else if (name == "bernoulli") {
    spec.kind = Kind::Bernoulli;
  } else if (name == "euler") {
    spec.kind = Kind::Euler;
  } else if (name == "hermite") {
    spec.kind = Kind::Hermite;
  } else if (name == "bernstein") {
    spec.kind = Kind::Bernstein;
  } else {
    throw std::invalid_argument("FamilySpec: unknown family \"" + std::string(name) + "\"");
  }

  const auto comma = indices.find(',');
  if (spec.kind == Kind::Bernstein) {
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("FamilySpec: bernstein needs \"k,n\", got \"" +
                                  std::string(text) + "\"");
    }
    spec.k = parse_index(indices.substr(0, comma), text);
    spec.n = parse_index(indices.substr(comma + 1), text);
    if (*spec.k > spec.n) {
      throw std::invalid_argument("FamilySpec: bernstein requires k <= n");
    }
  } else {
    if (comma != std::string_view::npos) {
      throw std::invalid_argument("FamilySpec: \"" + std::string(name) +
                                  "\" takes a single index");
    }
    spec.n = parse_index(indices, text);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(kind_names[static_cast<int>(kind)]);
  out += ':';
  if (kind == Kind::Bernstein) {
    out += std::to_string(k.value());
    out += ',';
  }
  out += std::to_string(n);
  return out;
}

Poly generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::Legendre:
      return legendre(spec.n);
    case Kind::Bernoulli:
      return bernoulli_poly(spec.n);
    case Kind::Euler:
      return euler_poly(spec.n);
    case Kind::Hermite:
      return hermite_poly(spec.n);
    case Kind::Bernstein:
      if (!spec.k.has_value()) {
        throw std::invalid_argument("FamilySpec: bernstein requires k");
      }
      return bernstein_poly(*spec.k, spec.n);
  }
  throw std::invalid_argument("FamilySpec: unknown kind");
}

Poly legendre_rodrigues(int n) {
  require_nonnegative(n, "legendre_rodrigues");
  const Poly base = pow(Poly{Rational(-1), Rational(0), Rational(1)}, n);
  const Rational scale(Integer(1), factorial(n) * pow(Integer(2), static_cast<unsigned long>(n)));
  return scale * derivative(base, n);
}

Poly legendre_recurrence(int n) {
  require_nonnegative(n, "legendre_recurrence");
  Poly prev = Poly::constant(Rational(1));  // P_0
  if (n == 0) return prev;
  Poly current = Poly::monomial(1);  // P_1
  const Poly x = Poly::monomial(1);
  for (int m = 1; m < n; ++m) {
    Poly next = (Rational(2 * m + 1) * (x * current) - Rational(m) * prev) *
                Rational(1, m + 1);
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

Poly legendre_ode_residual(int n) {
  require_nonnegative(n, "legendre_ode_residual");
  const Poly p = legendre(n);
  const Poly one_minus_x2{Rational(1), Rational(0), Rational(-1)};
  return derivative(one_minus_x2 * derivative(p)) +
         Rational(static_cast<long>(n) * (n + 1)) * p;
}

std::vector<Rational> bernoulli_numbers(int n_max) {
  require_nonnegative(n_max, "bernoulli_numbers");
  std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational sum;
    for (int k = 0; k < n; ++k) {
      sum += Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    }
    b[static_cast<std::size_t>(n)] = -sum / Rational(n + 1);
  }
  return b;
}

Rational bernoulli_number(int n) {
  require_nonnegative(n, "bernoulli_number");
  return bernoulli_numbers(n).back();
}

Poly bernoulli_poly(int n) {
  require_nonnegative(n, "bernoulli_poly");
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    coeffs[static_cast<std::size_t>(j)] =
        Rational(binomial(n, j)) * b[static_cast<std::size_t>(n - j)];
  }
  return Poly(std::move(coeffs));
}

std::vector<Poly> euler_polys(int n_max) {
  require_nonnegative(n_max, "euler_polys");
  std::vector<Poly> e;
  e.reserve(static_cast<std::size_t>(n_max) + 1);
  e.push_back(Poly::constant(Rational(1)));
  for (int n = 1; n <= n_max; ++n) {
    Poly sum;
    for (int k = 0; k < n; ++k) {
      sum = sum + Rational(binomial(n, k)) * e[static_cast<std::size_t>(k)];
    }
    e.push_back(Poly::monomial(n) - Rational(1, 2) * sum);
  }
  return e;
}

Poly euler_poly(int n) {
  require_nonnegative(n, "euler_poly");
  return euler_polys(n).back();
}

Rational euler_number(int n) {
  require_nonnegative(n, "euler_number");
  return Rational(pow(Integer(2), static_cast<unsigned long>(n))) *
         eval(euler_poly(n), Rational(1, 2));
}

Rational euler_at_zero(int n) {
  require_nonnegative(n, "euler_at_zero");
  return eval(euler_poly(n), Rational(0));
}

Poly hermite_poly(int n) {
  require_nonnegative(n, "hermite_poly");
  Poly prev = Poly::constant(Rational(1));  // H_0
  if (n == 0) return prev;
  Poly current = Poly::monomial(1, Rational(2));  // H_1
  const Poly two_x = Poly::monomial(1, Rational(2));
  for (int m = 1; m < n; ++m) {
    Poly next = two_x * current - Rational(2 * m) * prev;
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

Rational hermite_number(int n) {
  require_nonnegative(n, "hermite_number");
  return eval(hermite_poly(n), Rational(0));
}

Poly bernstein_poly(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("bernstein_poly: requires 0 <= k <= n");
  }
  const Poly one_minus_x{Rational(1), Rational(-1)};
  return Rational(binomial(n, k)) * (pow(Poly::monomial(1), k) * pow(one_minus_x, n - k));
}

}  // namespace leglab::families
