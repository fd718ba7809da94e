// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fq.hpp"

namespace gspc {

// Dense univariate polynomial over a prime field.  Coefficients are stored
// lowest degree first; the zero polynomial is the empty vector and every
// nonzero polynomial has a nonzero top coefficient.
struct Poly {
  std::vector<uint64_t> c;

  Poly() = default;
  explicit Poly(std::vector<uint64_t> coeffs) : c(std::move(coeffs)) {}

  bool is_zero() const { return c.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c.size()) - 1; }
  uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }

  auto operator<=>(const Poly&) const = default;
};

// Drops leading zeros so the representation invariant holds.
Poly poly_trim(Poly f);

Poly poly_from(const Fq& F, std::vector<int64_t> coeffs);

uint64_t poly_eval(const Fq& F, const Poly& f, uint64_t x);
Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, const Poly& a, uint64_t s);
Poly poly_monic(const Fq& F, const Poly& a);  // a must be nonzero
Poly poly_derivative(const Fq& F, const Poly& a);

// Quotient and remainder; den must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& num, const Poly& den);

// Monic gcd; at least one argument must be nonzero.
Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b);

// Largest m with (x - a)^m dividing f; f must be nonzero.
int root_multiplicity(const Fq& F, const Poly& f, uint64_t a);

// x^deg(f) * f(1/x), normalized monic.  Roots are the inverses of the
// nonzero roots of f.  f must be nonzero.
Poly poly_reverse_monic(const Fq& F, const Poly& f);

// Human-readable form, highest degree first: "x^4+2x^3+x+2", "0".
std::string poly_to_string(const Poly& f);

}  // namespace gspc
