// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "poly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace gspc {

Poly poly_trim(Poly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

Poly poly_from(const Fq& F, std::vector<int64_t> coeffs) {
  Poly p;
  p.c.reserve(coeffs.size());
  for (int64_t v : coeffs) p.c.push_back(F.reduce(v));
  return poly_trim(std::move(p));
}

uint64_t poly_eval(const Fq& F, const Poly& f, uint64_t x) {
  uint64_t acc = 0;
  for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
  return acc;
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
  return poly_trim(std::move(r));
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
  return poly_trim(std::move(r));
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Fq& F, const Poly& a, uint64_t s) {
  Poly r = a;
  for (auto& v : r.c) v = F.mul(v, s);
  return poly_trim(std::move(r));
}

Poly poly_monic(const Fq& F, const Poly& a) {
  if (a.is_zero()) throw UsageError("monic normalization of zero polynomial");
  return poly_scale(F, a, F.inv(a.c.back()));
}

Poly poly_derivative(const Fq& F, const Poly& a) {
  Poly r;
  if (a.c.size() < 2) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], i % F.ell());
  return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw UsageError("polynomial division by zero");
  Poly rem = num;
  if (rem.degree() < den.degree()) return {Poly{}, rem};
  Poly quo;
  quo.c.assign(rem.c.size() - den.c.size() + 1, 0);
  uint64_t lead_inv = F.inv(den.c.back());
  for (size_t k = quo.c.size(); k-- > 0;) {
    if (rem.c.size() < k + den.c.size()) continue;
    uint64_t coef = F.mul(rem.coeff(k + den.c.size() - 1), lead_inv);
    if (coef == 0) continue;
    quo.c[k] = coef;
    for (size_t j = 0; j < den.c.size(); ++j) {
      rem.c[k + j] = F.sub(rem.c[k + j], F.mul(coef, den.c[j]));
    }
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quo)), poly_trim(std::move(rem))};
}

Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(F, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(F, x);
}

int root_multiplicity(const Fq& F, const Poly& f, uint64_t a) {
  if (f.is_zero()) throw UsageError("root multiplicity in zero polynomial");
  a %= F.ell();
  Poly g = f;
  int m = 0;
  while (!g.is_zero() && poly_eval(F, g, a) == 0) {
    // Synthetic division by (x - a); the remainder is g(a) = 0.
    Poly q;
    q.c.assign(g.c.size() - 1, 0);
    uint64_t carry = 0;
    for (size_t i = g.c.size(); i-- > 1;) {
      carry = F.add(g.c[i], F.mul(carry, a));
      q.c[i - 1] = carry;
    }
    g = poly_trim(std::move(q));
    ++m;
  }
  return m;
}

Poly poly_reverse_monic(const Fq& F, const Poly& f) {
  if (f.is_zero()) throw UsageError("reversal of zero polynomial");
  Poly r;
  r.c.assign(f.c.rbegin(), f.c.rend());
  return poly_monic(F, poly_trim(std::move(r)));
}

std::string poly_to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    uint64_t v = f.c[i];
    if (v == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << v;
    } else {
      if (v != 1) os << v;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace gspc
