// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fq.hpp"
#include "poly.hpp"

namespace gspc {

// Characteristic polynomials of multiplier-gamma similitudes are the monic
// degree-2g polynomials satisfying the functional equation
//   c_i = gamma^{g-i} * c_{2g-i}   for 0 <= i <= g,   c_{2g} = 1,
// so c_0 = gamma^g and the upper coefficients c_{2g-1}, ..., c_g are free:
// the space is an affine g-space over F_ell with exactly ell^g points.

// Properties of such a polynomial f:
//   E        f(1) = 0, i.e. eigenvalue one is present.
//   N        not E.
//   RLiteral every common root of f and its reversal x^{2g} f(1/x) (the
//            roots paired under r -> gamma/r) lies in {1, -1}, and the
//            multiplicities obey mult(-1) <= 1, mult(1) <= 2.
//   RProof   gcd(f, reversal) is constant, f has at most a simple root at
//            -1 and at most a double root at 1, detected by derivatives:
//            f(-1) != 0 or f'(-1) != 0; f(1) != 0 or f'(1) != 0 or
//            f''(1) != 0.  Implies RLiteral and is the condition the
//            transcendence machinery actually consumes.
// On the identity coset the reversal of f is f itself, so RProof is
// vacuously false there and the headline RLiteral count is zero by
// convention (see psi_count).
enum class PropertyTag { E, N, RLiteral, RProof };

std::optional<PropertyTag> parse_property(std::string_view name);
const char* property_name(PropertyTag tag);

struct XiPoint {
  unsigned g = 0;
  uint64_t gamma = 0;
  // c_{2g-1}, ..., c_g in that order.
  std::vector<uint64_t> free_coeffs;
};

// The full degree-2g polynomial determined by a point of the space.
Poly xi_expand(const Fq& F, const XiPoint& p);

// Visits every point of the space, lowest free coefficient vector first
// with the last entry (c_g) varying fastest.  Refuses when ell^g exceeds
// the budget.  Returns the number of points visited.
uint64_t xi_enumerate(const Fq& F, unsigned g, uint64_t gamma, uint64_t budget,
                      const std::function<void(const XiPoint&, const Poly&)>& fn);

// Tests the property on any nonzero monic polynomial with nonzero constant
// term (so the reversal keeps the degree).  The RLiteral and RProof tags
// need ell >= 3: on F_2 the points 1 and -1 coincide and the root-pairing
// conditions degenerate.
bool has_property(const Fq& F, const Poly& f, PropertyTag tag);

// Number of points of the gamma-space with the given property.  For
// RLiteral on the identity coset the headline count is 0: every eligible
// polynomial there fails the full root-pairing requirement used downstream,
// even though the literal text of the condition admits some (for example
// (x-1)^2 at g = 1).  Pass raw_literal = true to get the literal count for
// diagnostics; the flag only changes RLiteral at gamma = 1.
mpz_class psi_count(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                    bool raw_literal, uint64_t budget);

// (ell^g - psi(RLiteral, raw)) / ell^{g-1}: coefficient C(g) in the lower
// bound ell^g - C(g) ell^{g-1} for the raw literal count off the identity
// coset.  gamma must differ from 1.
mpq_class eigenweird_constant(const Fq& F, unsigned g, uint64_t gamma,
                              uint64_t budget);

// Per-polynomial fiber sandwich: every characteristic polynomial fiber
// Delta(f) over the gamma-coset satisfies
//   |Sp| ell^{2g^2} / (ell+1)^{2g^2+g} <= Delta(f) <= |Sp| ell^{2g^2} / (ell-1)^{2g^2+g}.
std::pair<mpq_class, mpq_class> delta_bounds(unsigned g, uint64_t ell);

}  // namespace gspc
