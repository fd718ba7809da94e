// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fq.hpp"
#include "poly.hpp"

namespace gspc {

using Vec = std::vector<uint64_t>;

// Dense square matrix over a prime field, row-major.
struct Mat {
  uint32_t n = 0;
  std::vector<uint64_t> a;

  Mat() = default;
  Mat(uint32_t dim, std::vector<uint64_t> entries) : n(dim), a(std::move(entries)) {}

  static Mat zero(uint32_t n) { return Mat(n, std::vector<uint64_t>(size_t{n} * n, 0)); }
  static Mat identity(uint32_t n);

  uint64_t& at(uint32_t i, uint32_t j) { return a[size_t{i} * n + j]; }
  uint64_t at(uint32_t i, uint32_t j) const { return a[size_t{i} * n + j]; }

  auto operator<=>(const Mat&) const = default;
};

Mat mat_mul(const Fq& F, const Mat& A, const Mat& B);
Mat mat_sub(const Fq& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
Vec mat_apply(const Fq& F, const Mat& A, const Vec& x);

// Determinant by cofactor expansion.  Exponential and deliberately
// independent of the characteristic polynomial code path; used to
// cross-check it.  Practical for n up to ~10.
uint64_t det_cofactor(const Fq& F, const Mat& A);

// Characteristic polynomial det(xI - A), monic of degree n, by the
// Berkowitz method: division-free, O(n^4), valid over any commutative ring
// so in particular over F_ell for every prime ell including 2.
Poly charpoly(const Fq& F, const Mat& A);

// The fixed symplectic form on F^{2g} is given by the Gram matrix
//   J = [ 0   I_g ]
//       [-I_g  0  ],
// i.e. <e_i, e_{g+i}> = 1 and all other pairings of basis vectors vanish.
Mat standard_j(const Fq& F, uint32_t g);

// x^T J as a row vector: (x^T J)_j = -x_{g+j} for j < g, x_{j-g} for j >= g.
Vec symplectic_pair_row(const Fq& F, const Vec& x);

// The pairing <x, w> = x^T J w.
uint64_t symplectic_pair(const Fq& F, const Vec& x, const Vec& w);

// gamma with A^T J A = gamma J, or nullopt when A is not a symplectic
// similitude.  n must be even and positive.  gamma = 0 never qualifies
// (the form would degenerate), so similitudes are exactly the matrices
// with a nonzero multiplier.
std::optional<uint64_t> similitude_multiplier(const Fq& F, const Mat& A);

// diag(I_g, gamma I_g): the fixed representative of the coset with
// multiplier gamma.  Multiplying a symplectic matrix by it on the right
// scales the last g columns by gamma.
Mat coset_representative(const Fq& F, uint32_t g, uint64_t gamma);

// Matrix whose j-th column is cols[j]; all columns must share one length.
Mat mat_from_columns(const std::vector<Vec>& cols);

}  // namespace gspc
