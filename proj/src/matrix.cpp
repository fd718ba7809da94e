// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "matrix.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace gspc {

Mat Mat::identity(uint32_t n) {
  Mat m = Mat::zero(n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Fq& F, const Mat& A, const Mat& B) {
  if (A.n != B.n) throw UsageError("matrix dimension mismatch in product");
  Mat C = Mat::zero(A.n);
  for (uint32_t i = 0; i < A.n; ++i) {
    for (uint32_t k = 0; k < A.n; ++k) {
      uint64_t aik = A.at(i, k);
      if (aik == 0) continue;
      for (uint32_t j = 0; j < A.n; ++j) {
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
      }
    }
  }
  return C;
}

Mat mat_sub(const Fq& F, const Mat& A, const Mat& B) {
  if (A.n != B.n) throw UsageError("matrix dimension mismatch in difference");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T = Mat::zero(A.n);
  for (uint32_t i = 0; i < A.n; ++i)
    for (uint32_t j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Vec mat_apply(const Fq& F, const Mat& A, const Vec& x) {
  if (x.size() != A.n) throw UsageError("matrix/vector dimension mismatch");
  Vec y(A.n, 0);
  for (uint32_t i = 0; i < A.n; ++i) {
    uint64_t acc = 0;
    for (uint32_t j = 0; j < A.n; ++j) acc = F.add(acc, F.mul(A.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

namespace {

// Laplace expansion along the top remaining row; cols is a bitmask of the
// columns still in play.
uint64_t det_rec(const Fq& F, const Mat& A, uint32_t row, uint32_t cols) {
  if (cols == 0) return 1;
  uint64_t acc = 0;
  bool plus = true;
  for (uint32_t j = 0; j < A.n; ++j) {
    if (!(cols & (uint32_t{1} << j))) continue;
    uint64_t aij = A.at(row, j);
    if (aij != 0) {
      uint64_t sub = det_rec(F, A, row + 1, cols & ~(uint32_t{1} << j));
      uint64_t term = F.mul(aij, sub);
      acc = plus ? F.add(acc, term) : F.sub(acc, term);
    }
    plus = !plus;
  }
  return acc;
}

}  // namespace

uint64_t det_cofactor(const Fq& F, const Mat& A) {
  if (A.n == 0) return 1;
  if (A.n > 16) throw UsageError("cofactor determinant limited to n <= 16");
  return det_rec(F, A, 0, (uint32_t{1} << A.n) - 1);
}

Poly charpoly(const Fq& F, const Mat& A) {
  uint32_t n = A.n;
  if (n == 0) return Poly({1});
  // Berkowitz iteration: for each leading principal minor size k the vector
  // of charpoly coefficients (highest first) is multiplied by a Toeplitz
  // matrix built from the row R, column S and corner alpha that border the
  // (k-1)-sized minor.  poly holds coefficients highest degree first.
  std::vector<uint64_t> poly = {1, F.neg(A.at(0, 0))};
  std::vector<uint64_t> col(n), row(n), powcol(n);
  for (uint32_t k = 2; k <= n; ++k) {
    // M is the (k-1)x(k-1) leading minor; R = A[k-1, 0..k-2],
    // S = A[0..k-2, k-1], alpha = A[k-1, k-1].
    // toep[t] holds the value on the t-th diagonal of the Toeplitz matrix:
    // 1, -alpha, -R S, -R M S, -R M^2 S, ...
    std::vector<uint64_t> toep(k + 1);
    toep[0] = 1;
    toep[1] = F.neg(A.at(k - 1, k - 1));
    for (uint32_t i = 0; i < k - 1; ++i) powcol[i] = A.at(i, k - 1);
    for (uint32_t t = 2; t <= k; ++t) {
      uint64_t dot = 0;
      for (uint32_t i = 0; i < k - 1; ++i) dot = F.add(dot, F.mul(A.at(k - 1, i), powcol[i]));
      toep[t] = F.neg(dot);
      if (t == k) break;
      for (uint32_t i = 0; i < k - 1; ++i) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < k - 1; ++j) acc = F.add(acc, F.mul(A.at(i, j), powcol[j]));
        col[i] = acc;
      }
      for (uint32_t i = 0; i < k - 1; ++i) powcol[i] = col[i];
    }
    std::vector<uint64_t> next(k + 1, 0);
    for (uint32_t i = 0; i <= k; ++i) {
      uint64_t acc = 0;
      uint32_t jmax = std::min<uint32_t>(i, k - 1);
      for (uint32_t j = 0; j <= jmax; ++j) acc = F.add(acc, F.mul(toep[i - j], poly[j]));
      next[i] = acc;
    }
    poly = std::move(next);
  }
  // Convert to lowest-first storage.
  Poly f;
  f.c.assign(poly.rbegin(), poly.rend());
  return poly_trim(std::move(f));
}

Mat standard_j(const Fq& F, uint32_t g) {
  Mat J = Mat::zero(2 * g);
  for (uint32_t i = 0; i < g; ++i) {
    J.at(i, g + i) = 1;
    J.at(g + i, i) = F.neg(1);
  }
  return J;
}

Vec symplectic_pair_row(const Fq& F, const Vec& x) {
  if (x.size() % 2 != 0 || x.empty()) throw UsageError("pairing needs even positive dimension");
  uint32_t g = static_cast<uint32_t>(x.size() / 2);
  Vec r(x.size());
  for (uint32_t j = 0; j < g; ++j) r[j] = F.neg(x[g + j]);
  for (uint32_t j = 0; j < g; ++j) r[g + j] = x[j];
  return r;
}

uint64_t symplectic_pair(const Fq& F, const Vec& x, const Vec& w) {
  if (x.size() != w.size()) throw UsageError("pairing dimension mismatch");
  Vec r = symplectic_pair_row(F, x);
  uint64_t acc = 0;
  for (size_t j = 0; j < w.size(); ++j) acc = F.add(acc, F.mul(r[j], w[j]));
  return acc;
}

std::optional<uint64_t> similitude_multiplier(const Fq& F, const Mat& A) {
  if (A.n == 0 || A.n % 2 != 0) throw UsageError("similitude test needs even positive dimension");
  uint32_t g = A.n / 2;
  // <A e_i, A e_j> must equal gamma <e_i, e_j> for all i, j; the candidate
  // gamma is read off the pairing of columns 0 and g.
  std::vector<Vec> cols(A.n, Vec(A.n));
  for (uint32_t j = 0; j < A.n; ++j)
    for (uint32_t i = 0; i < A.n; ++i) cols[j][i] = A.at(i, j);
  uint64_t gamma = symplectic_pair(F, cols[0], cols[g]);
  if (gamma == 0) return std::nullopt;
  for (uint32_t i = 0; i < A.n; ++i) {
    Vec ri = symplectic_pair_row(F, cols[i]);
    for (uint32_t j = 0; j < A.n; ++j) {
      uint64_t acc = 0;
      for (uint32_t t = 0; t < A.n; ++t) acc = F.add(acc, F.mul(ri[t], cols[j][t]));
      uint64_t want = 0;
      if (j == i + g) want = gamma;
      if (i == j + g) want = F.neg(gamma);
      if (acc != want) return std::nullopt;
    }
  }
  return gamma;
}

Mat coset_representative(const Fq& F, uint32_t g, uint64_t gamma) {
  if (g == 0) throw UsageError("genus must be positive");
  if (gamma % F.ell() == 0) throw UsageError("coset multiplier must be nonzero");
  Mat D = Mat::zero(2 * g);
  for (uint32_t i = 0; i < g; ++i) {
    D.at(i, i) = 1;
    D.at(g + i, g + i) = gamma % F.ell();
  }
  return D;
}

Mat mat_from_columns(const std::vector<Vec>& cols) {
  uint32_t n = static_cast<uint32_t>(cols.size());
  Mat A = Mat::zero(n);
  for (uint32_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) throw UsageError("column length mismatch");
    for (uint32_t i = 0; i < n; ++i) A.at(i, j) = cols[j][i];
  }
  return A;
}

}  // namespace gspc
