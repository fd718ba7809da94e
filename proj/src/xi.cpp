// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "xi.hpp"

#include <string>

#include "census.hpp"
#include "errors.hpp"
#include "orders.hpp"

namespace gspc {

std::optional<PropertyTag> parse_property(std::string_view name) {
  if (name == "E" || name == "eigen1") return PropertyTag::E;
  if (name == "N") return PropertyTag::N;
  if (name == "R") return PropertyTag::RLiteral;
  if (name == "Rproof") return PropertyTag::RProof;
  return std::nullopt;
}

const char* property_name(PropertyTag tag) {
  switch (tag) {
    case PropertyTag::E: return "E";
    case PropertyTag::N: return "N";
    case PropertyTag::RLiteral: return "R";
    case PropertyTag::RProof: return "Rproof";
  }
  return "?";
}

Poly xi_expand(const Fq& F, const XiPoint& p) {
  validate_census_params(p.g, p.gamma, F.ell());
  if (p.free_coeffs.size() != p.g) throw UsageError("wrong number of free coefficients");
  unsigned g = p.g;
  Poly f;
  f.c.assign(2 * g + 1, 0);
  f.c[2 * g] = 1;
  // free_coeffs[k] is c_{2g-1-k}; the loop below mirrors the upper half
  // down with the functional-equation weights.
  for (unsigned k = 0; k < g; ++k) {
    f.c[2 * g - 1 - k] = p.free_coeffs[k] % F.ell();
  }
  for (unsigned i = 0; i <= g; ++i) {
    f.c[i] = F.mul(F.pow(p.gamma, g - i), f.c[2 * g - i]);
  }
  return poly_trim(std::move(f));
}

uint64_t xi_enumerate(const Fq& F, unsigned g, uint64_t gamma, uint64_t budget,
                      const std::function<void(const XiPoint&, const Poly&)>& fn) {
  validate_census_params(g, gamma, F.ell());
  mpz_class size = pow_ui(F.ell(), g);
  if (size > budget) {
    throw BudgetError("coefficient space has " + size.get_str() +
                      " points, budget " + std::to_string(budget));
  }
  XiPoint p;
  p.g = g;
  p.gamma = gamma;
  p.free_coeffs.assign(g, 0);
  uint64_t visited = 0;
  for (;;) {
    fn(p, xi_expand(F, p));
    ++visited;
    // Odometer with the last coordinate fastest.
    size_t i = p.free_coeffs.size();
    while (i > 0) {
      --i;
      if (++p.free_coeffs[i] < F.ell()) break;
      p.free_coeffs[i] = 0;
      if (i == 0) return visited;
    }
    if (p.free_coeffs.empty()) return visited;
  }
}

namespace {

// Divides out every factor (x - 1) and (x + 1); true iff what remains is
// constant, i.e. all roots of g lay in {1, -1}.
bool roots_only_pm_one(const Fq& F, Poly h) {
  uint64_t one = 1, minus_one = F.neg(1);
  Poly xm1 = poly_from(F, {-1, 1});
  Poly xp1 = poly_from(F, {1, 1});
  while (h.degree() > 0 && poly_eval(F, h, one) == 0) h = poly_divmod(F, h, xm1).first;
  while (h.degree() > 0 && poly_eval(F, h, minus_one) == 0) h = poly_divmod(F, h, xp1).first;
  return h.degree() == 0;
}

}  // namespace

bool has_property(const Fq& F, const Poly& f, PropertyTag tag) {
  if (f.is_zero()) throw UsageError("property test on zero polynomial");
  switch (tag) {
    case PropertyTag::E:
      return poly_eval(F, f, 1) == 0;
    case PropertyTag::N:
      return poly_eval(F, f, 1) != 0;
    default:
      break;
  }
  if (F.ell() < 3) {
    throw UsageError("root-pairing properties need ell >= 3");
  }
  if (f.c[0] == 0) throw UsageError("root-pairing properties need f(0) != 0");
  Poly rev = poly_reverse_monic(F, f);
  Poly common = poly_gcd(F, f, rev);
  uint64_t minus_one = F.neg(1);
  if (tag == PropertyTag::RLiteral) {
    if (!roots_only_pm_one(F, common)) return false;
    if (root_multiplicity(F, f, minus_one) > 1) return false;
    if (root_multiplicity(F, f, 1) > 2) return false;
    return true;
  }
  // RProof: the form used by the effective argument downstream.
  if (common.degree() != 0) return false;
  Poly d1 = poly_derivative(F, f);
  if (poly_eval(F, f, minus_one) == 0 && poly_eval(F, d1, minus_one) == 0) return false;
  if (poly_eval(F, f, 1) == 0 && poly_eval(F, d1, 1) == 0) {
    Poly d2 = poly_derivative(F, d1);
    if (poly_eval(F, d2, 1) == 0) return false;
  }
  return true;
}

mpz_class psi_count(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                    bool raw_literal, uint64_t budget) {
  validate_census_params(g, gamma, F.ell());
  if (tag == PropertyTag::RLiteral && gamma == 1 && !raw_literal) {
    // Identity coset: f equals its own reversal, so the pairing condition
    // can only be met through roots at 1 and -1 and the class is empty for
    // the purposes of the headline count.
    return 0;
  }
  if ((tag == PropertyTag::RLiteral || tag == PropertyTag::RProof) && F.ell() < 3) {
    throw UsageError("root-pairing properties need ell >= 3");
  }
  uint64_t count = 0;
  xi_enumerate(F, g, gamma, budget, [&](const XiPoint&, const Poly& f) {
    if (has_property(F, f, tag)) ++count;
  });
  return mpz_class(static_cast<unsigned long>(count));
}

mpq_class eigenweird_constant(const Fq& F, unsigned g, uint64_t gamma,
                              uint64_t budget) {
  validate_census_params(g, gamma, F.ell());
  if (gamma == 1) throw UsageError("constant is defined off the identity coset");
  mpz_class psi = psi_count(F, g, gamma, PropertyTag::RLiteral, true, budget);
  mpz_class num = pow_ui(F.ell(), g) - psi;
  return mpq_class(num) / mpq_class(pow_ui(F.ell(), g - 1));
}

std::pair<mpq_class, mpq_class> delta_bounds(unsigned g, uint64_t ell) {
  validate_census_params(g, 1, ell);
  unsigned long e = 2ul * g * g + g;
  mpz_class num = sp_order(g, ell) * pow_ui(ell, 2ul * g * g);
  mpq_class lower = mpq_class(num) / mpq_class(pow_ui(ell + 1, e));
  mpq_class upper = mpq_class(num) / mpq_class(pow_ui(ell - 1, e));
  return {lower, upper};
}

}  // namespace gspc
