// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <utility>
#include <vector>

namespace gspc {

// Exact counts over the multiplier-gamma coset of GSp_{2g}(F_ell).  The
// coset is a torsor under Sp_{2g}(F_ell), so proportions are always taken
// against |Sp_{2g}(F_ell)|.

// Throws UsageError unless ell is prime, g >= 1 and 1 <= gamma < ell.
void validate_census_params(unsigned g, uint64_t gamma, uint64_t ell);

// S(r, gamma): number of pairs (U, W) of transverse maximal isotropic
// subspaces of F^{2r} together with compatible data, entering the
// eigenvalue-one recursion.
//   gamma == 1: ell^{2r^2}
//   gamma != 1: ell^{r^2 - r} * |Sp_{2r}| / |GL_r|   (exact division)
mpz_class s_count(unsigned r, uint64_t gamma, uint64_t ell);

// T(g, gamma): number of elements with eigenvalue one in the gamma-coset.
// Computed by the recursion
//   T(g) = sum_{r+s=g, r>=1} [ |Sp_{2g}| / (|Sp_{2r}| |Sp_{2s}|) ]
//                            * S(r, gamma) * ( |Sp_{2s}| - T(s) ),
// T(0) = 0, with every division exact.  Subresults are memoized per call.
mpz_class t_count(unsigned g, uint64_t gamma, uint64_t ell);

// T(g, gamma) / |Sp_{2g}|.
mpq_class eigen_proportion(unsigned g, uint64_t gamma, uint64_t ell);

// Limiting proportion as g grows: 1/(ell-1) off the identity coset,
// ell/(ell^2-1) on it.
mpq_class tau(uint64_t gamma, uint64_t ell);

// |proportion - tau| / tau^3: the convergence certificate.  Small values
// mean the finite-g proportion is already close to the limit relative to
// the cube of the limit itself.
mpq_class eigenone_deviation(unsigned g, uint64_t gamma, uint64_t ell);

// Sandwich for the proportion of a class cut out by psi characteristic
// polynomials: with E = 2g^2 + g,
//   psi * ell^{2g^2} / (ell+1)^E  <=  W/|Sp|  <=  psi * ell^{2g^2} / (ell-1)^E.
// Requires 0 <= psi <= ell^g.
std::pair<mpq_class, mpq_class> psitow_bounds(const mpz_class& psi, unsigned g,
                                              uint64_t ell);

// Leading coefficient ell/(ell^2 - 1) of the mass of principally polarized
// abelian varieties with an ell-torsion point; equals tau(1, ell).
mpq_class abvar_leading(uint64_t ell);

struct EigenCensus {
  unsigned g = 0;
  uint64_t ell = 0;
  uint64_t gamma = 0;
  std::vector<mpz_class> s_values;  // S(1) .. S(g)
  mpz_class t_value;
  mpq_class proportion;
  mpq_class tau_value;
  mpq_class deviation;
};

EigenCensus eigen_census(unsigned g, uint64_t gamma, uint64_t ell);

}  // namespace gspc
