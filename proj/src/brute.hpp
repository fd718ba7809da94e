// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fq.hpp"
#include "matrix.hpp"
#include "rng.hpp"
#include "xi.hpp"

namespace gspc {

inline constexpr uint64_t kDefaultBudget = 100000000;

// Solution set {particular + span(basis)} of a linear system over F_ell,
// in reduced form: basis vectors are kernel generators indexed by free
// columns in ascending order.
struct AffineSet {
  Vec particular;
  std::vector<Vec> basis;
};

// Solves rows * x = rhs by row reduction; nullopt when inconsistent.
// n is the number of unknowns (rows may be empty).
std::optional<AffineSet> affine_solve(const Fq& F, const std::vector<Vec>& rows,
                                      const Vec& rhs, uint32_t n);

// Walks the gamma-coset of GSp_{2g}(F_ell) exactly once per element by
// completing a symplectic basis pair by pair: for k = 1..g first the image
// u_k of e_k (pairing zero against everything chosen, any nonzero solution),
// then the image v_k of f_k (pairing zero except <u_k, v_k> = 1).  The
// matrix assembled from a completed basis is symplectic; scaling its last
// g columns by gamma gives the coset element.  Enumeration is depth-first
// with each affine solution set traversed in odometer order, so the
// sequence is deterministic.  Refuses when |Sp_{2g}| exceeds the budget.
// Returns the number of elements visited.
uint64_t enumerate_coset(const Fq& F, unsigned g, uint64_t gamma, uint64_t budget,
                         const std::function<void(const Mat&)>& fn);

// Filters all ell^{4g^2} matrices for a nonzero multiplier; the callback
// receives each similitude with its multiplier.  Exists to cross-check the
// basis-completion walk and dies on anything past a tiny budget.  Returns
// the number of similitudes found.
uint64_t enumerate_naive(const Fq& F, unsigned g, uint64_t budget,
                         const std::function<void(const Mat&, uint64_t)>& fn);

// One exactly uniform element of the gamma-coset: the same basis completion
// as enumerate_coset but with each step's solution drawn uniformly (nonzero
// solutions are rejection-sampled for the u steps).  Uniformity is exact
// because every partial basis extends in the same number of ways.
Mat sample_uniform(const Fq& F, unsigned g, uint64_t gamma, CounterRng& rng);

struct BruteCensus {
  uint64_t coset_size = 0;
  uint64_t w_count = 0;
  // Fiber sizes of the characteristic polynomial map over the coset.
  std::map<Poly, uint64_t> delta;
};

// Exhaustive count of coset elements whose characteristic polynomial has
// the property, together with the full fiber histogram.  The property is
// evaluated on the literal predicate (no identity-coset zeroing): this is
// the ground truth the formulas are checked against.
BruteCensus count_brute(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                        uint64_t budget);

struct SampleReport {
  unsigned g = 0;
  uint64_t ell = 0;
  uint64_t gamma = 0;
  PropertyTag tag = PropertyTag::E;
  uint64_t n_samples = 0;
  uint64_t hits = 0;
  double estimate = 0.0;
  double stderr_est = 0.0;
  uint64_t seed = 0;
};

// Monte Carlo estimate of the property proportion over the gamma-coset.
// Work is split into fixed shards of kShardSize samples; shard j always
// consumes RNG stream j, so hit counts are bit-identical for every thread
// count.  threads = 0 means one worker per hardware thread.
inline constexpr uint64_t kShardSize = 4096;
SampleReport montecarlo(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                        uint64_t n, uint64_t seed, unsigned threads);

}  // namespace gspc
