// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "census.hpp"

#include <string>

#include "errors.hpp"
#include "fq.hpp"
#include "orders.hpp"

namespace gspc {

void validate_census_params(unsigned g, uint64_t gamma, uint64_t ell) {
  if (!is_prime_u64(ell)) {
    throw UsageError("field order must be prime, got " + std::to_string(ell));
  }
  if (g == 0) throw UsageError("genus must be positive");
  if (gamma == 0 || gamma >= ell) {
    throw UsageError("multiplier must lie in [1, ell-1], got " + std::to_string(gamma));
  }
}

mpz_class s_count(unsigned r, uint64_t gamma, uint64_t ell) {
  validate_census_params(r, gamma, ell);
  if (gamma == 1) return pow_ui(ell, 2ul * r * r);
  mpz_class num = pow_ui(ell, static_cast<unsigned long>(r) * r - r) * sp_order(r, ell);
  return exact_div(num, gl_order(r, ell), "S(r, gamma)");
}

namespace {

mpz_class t_count_impl(unsigned g, uint64_t gamma, uint64_t ell) {
  // sp[k] = |Sp_{2k}|, s[k] = S(k, gamma), t[k] = T(k, gamma), filled
  // bottom up; the recursion only looks below the current level.
  std::vector<mpz_class> sp(g + 1), s(g + 1), t(g + 1);
  for (unsigned k = 0; k <= g; ++k) sp[k] = sp_order(k, ell);
  for (unsigned k = 1; k <= g; ++k) s[k] = s_count(k, gamma, ell);
  t[0] = 0;
  for (unsigned k = 1; k <= g; ++k) {
    mpz_class acc = 0;
    for (unsigned r = 1; r <= k; ++r) {
      unsigned sidx = k - r;
      mpz_class orbit = exact_div(sp[k], sp[r] * sp[sidx], "T recursion quotient");
      acc += orbit * s[r] * (sp[sidx] - t[sidx]);
    }
    t[k] = acc;
  }
  return t[g];
}

}  // namespace

mpz_class t_count(unsigned g, uint64_t gamma, uint64_t ell) {
  validate_census_params(g, gamma, ell);
  mpz_class t = t_count_impl(g, gamma, ell);
  // The g = 1 level also has the closed form T(1) = S(1); keep both paths
  // and insist they agree.
  mpz_class base = s_count(1, gamma, ell);
  mpz_class t1 = (g == 1) ? t : t_count_impl(1, gamma, ell);
  if (t1 != base) throw InternalError("T(1) recursion disagrees with S(1)");
  return t;
}

mpq_class eigen_proportion(unsigned g, uint64_t gamma, uint64_t ell) {
  mpq_class p = mpq_class(t_count(g, gamma, ell)) / mpq_class(sp_order(g, ell));
  return p;
}

mpq_class tau(uint64_t gamma, uint64_t ell) {
  if (!is_prime_u64(ell)) {
    throw UsageError("field order must be prime, got " + std::to_string(ell));
  }
  if (gamma == 0 || gamma >= ell) {
    throw UsageError("multiplier must lie in [1, ell-1], got " + std::to_string(gamma));
  }
  mpz_class L(static_cast<unsigned long>(ell));
  if (gamma != 1) return mpq_class(1) / mpq_class(L - 1);
  return mpq_class(L) / mpq_class(L * L - 1);
}

mpq_class eigenone_deviation(unsigned g, uint64_t gamma, uint64_t ell) {
  mpq_class p = eigen_proportion(g, gamma, ell);
  mpq_class t = tau(gamma, ell);
  mpq_class diff = p - t;
  if (diff < 0) diff = -diff;
  return diff / (t * t * t);
}

std::pair<mpq_class, mpq_class> psitow_bounds(const mpz_class& psi, unsigned g,
                                              uint64_t ell) {
  validate_census_params(g, 1, ell);
  if (psi < 0 || psi > pow_ui(ell, g)) {
    throw UsageError("psi must lie in [0, ell^g]");
  }
  unsigned long e = 2ul * g * g + g;
  mpz_class num = psi * pow_ui(ell, 2ul * g * g);
  mpq_class lower = mpq_class(num) / mpq_class(pow_ui(ell + 1, e));
  mpq_class upper = mpq_class(num) / mpq_class(pow_ui(ell - 1, e));
  return {lower, upper};
}

mpq_class abvar_leading(uint64_t ell) { return tau(1, ell); }

EigenCensus eigen_census(unsigned g, uint64_t gamma, uint64_t ell) {
  validate_census_params(g, gamma, ell);
  EigenCensus c;
  c.g = g;
  c.ell = ell;
  c.gamma = gamma;
  for (unsigned r = 1; r <= g; ++r) c.s_values.push_back(s_count(r, gamma, ell));
  c.t_value = t_count(g, gamma, ell);
  c.proportion = eigen_proportion(g, gamma, ell);
  c.tau_value = tau(gamma, ell);
  c.deviation = eigenone_deviation(g, gamma, ell);
  return c;
}

}  // namespace gspc
