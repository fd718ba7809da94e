// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "fq.hpp"
#include "poly.hpp"

namespace gspc {

struct CurveCount {
  uint64_t points = 0;  // projective points, includes the point at infinity
  int64_t trace = 0;    // t = q + 1 - points, |t| <= 2 sqrt(q)
};

// Point count of y^2 = x^3 + a x + b over F_q via the quadratic character:
//   #E = q + 1 + sum_x chi(x^3 + a x + b).
// q must be an odd prime and the curve nonsingular (4a^3 + 27b^2 != 0).
CurveCount point_count(uint64_t q, uint64_t a, uint64_t b);

// x^2 - (t mod ell) x + (q mod ell): the Frobenius characteristic
// polynomial reduced mod ell.  Requires q not divisible by ell, so the
// reduction lands in the coset with multiplier q mod ell.
Poly frob_charpoly_mod(const Fq& Fl, int64_t t, uint64_t q);

struct TagStats {
  uint64_t hits = 0;
  mpq_class freq;       // hits / curves scanned
  mpq_class target;     // group-side proportion the frequency should approach
  mpq_class deviation;  // |freq - target|
};

struct ScanReport {
  uint64_t q = 0;
  uint64_t ell = 0;
  uint64_t gamma = 0;    // q mod ell
  uint64_t scanned = 0;  // nonsingular (a, b) pairs
  uint64_t singular = 0;
  // Keyed by property name; "R" only present when ell >= 3.
  std::map<std::string, TagStats> tags;
};

// Walks every Weierstrass pair (a, b) over F_q, reduces each Frobenius
// polynomial mod ell and tallies the properties.  Targets come from the
// exact census: T(1, gamma) / |Sp_2| for E and N, the exhaustive
// characteristic-polynomial fiber count for R.  Deterministic for every
// thread count (threads = 0 means one per hardware thread).
ScanReport scan(uint64_t q, uint64_t ell, unsigned threads);

struct EnvelopePoint {
  uint64_t q = 0;
  mpq_class deviation;        // |freq_E - target_E| at this q
  mpq_class deviation_sq_q;   // deviation^2 * q, exact
};

struct EnvelopeReport {
  uint64_t ell = 0;
  uint64_t gamma = 0;
  std::vector<EnvelopePoint> points;  // ascending q
  mpq_class max_sq;                   // max of deviation^2 * q
  mpq_class first_half_max_sq;
  mpq_class second_half_max_sq;
  double constant = 0.0;              // sqrt(max_sq): fitted envelope c with dev <= c/sqrt(q)
};

// Primes q <= q_max with q odd, q != ell and q mod ell == gamma.
std::vector<uint64_t> envelope_default_qs(uint64_t ell, uint64_t gamma, uint64_t q_max);

// Fits the constant in deviation <= c / sqrt(q) over a family of primes in
// one residue class mod ell.  The square c^2 = max(dev^2 q) is exact; only
// the final square root is floating point.
EnvelopeReport envelope_fit(uint64_t ell, uint64_t gamma,
                            const std::vector<uint64_t>& qs, unsigned threads);

}  // namespace gspc
