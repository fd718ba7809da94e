// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "orders.hpp"
#include "rng.hpp"

using namespace gspc;

namespace {

Poly pow_of_x_minus_one(const Fq& F, unsigned n) {
  Poly p({1});
  Poly xm1 = poly_from(F, {-1, 1});
  for (unsigned i = 0; i < n; ++i) p = poly_mul(F, p, xm1);
  return p;
}

Mat random_mat(const Fq& F, uint32_t n, CounterRng& rng) {
  Mat A = Mat::zero(n);
  for (auto& v : A.a) v = rng.next_below(F.ell());
  return A;
}

}  // namespace

TEST_CASE("characteristic polynomial of the identity is (x-1)^n") {
  for (uint64_t ell : {2ull, 3ull, 5ull}) {
    Fq F(ell);
    for (uint32_t g = 1; g <= 3; ++g) {
      CHECK(charpoly(F, Mat::identity(2 * g)) == pow_of_x_minus_one(F, 2 * g));
    }
  }
}

TEST_CASE("characteristic polynomial of small fixed matrices") {
  Fq F(3);
  // diag(1, 2): (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 2 over F_3.
  CHECK(charpoly(F, Mat(2, {1, 0, 0, 2})) == poly_from(F, {2, 0, 1}));
  // Companion matrix of x^2 + x + 2.
  CHECK(charpoly(F, Mat(2, {0, 1, 1, 2})) == poly_from(F, {2, 1, 1}));
  // 1x1.
  CHECK(charpoly(F, Mat(1, {2})) == poly_from(F, {-2, 1}));
}

TEST_CASE("2x2 characteristic polynomials match the trace/det formula") {
  Fq F(3);
  for (uint64_t m = 0; m < 81; ++m) {
    uint64_t a = m % 3, b = (m / 3) % 3, c = (m / 9) % 3, d = (m / 27) % 3;
    Mat A(2, {a, b, c, d});
    uint64_t tr = F.add(a, d);
    uint64_t det = F.sub(F.mul(a, d), F.mul(b, c));
    CHECK(charpoly(F, A) == Poly({det, F.neg(tr), 1}));
  }
}

TEST_CASE("3x3 characteristic polynomials match cofactor coefficients over F_2") {
  Fq F(2);
  // det(xI - A) = x^3 - tr x^2 + (sum of principal 2x2 minors) x - det.
  for (uint64_t m = 0; m < 512; ++m) {
    Mat A = Mat::zero(3);
    for (uint32_t i = 0; i < 9; ++i) A.a[i] = (m >> i) & 1;
    uint64_t tr = F.add(F.add(A.at(0, 0), A.at(1, 1)), A.at(2, 2));
    auto minor2 = [&](uint32_t i, uint32_t j) {
      return F.sub(F.mul(A.at(i, i), A.at(j, j)), F.mul(A.at(i, j), A.at(j, i)));
    };
    uint64_t c1 = F.add(F.add(minor2(0, 1), minor2(0, 2)), minor2(1, 2));
    uint64_t det = det_cofactor(F, A);
    CHECK(charpoly(F, A) == poly_trim(Poly({F.neg(det), c1, F.neg(tr), 1})));
  }
}

TEST_CASE("characteristic polynomial evaluations agree with cofactor dets") {
  Fq F(5);
  CounterRng rng(11, 0);
  for (uint32_t n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      Mat A = random_mat(F, n, rng);
      Poly f = charpoly(F, A);
      CHECK(f.degree() == static_cast<int>(n));
      CHECK(f.c.back() == 1);
      // f(0) = det(-A) = (-1)^n det(A); f(1) = det(I - A).
      uint64_t det = det_cofactor(F, A);
      uint64_t expect0 = (n % 2 == 0) ? det : F.neg(det);
      CHECK(poly_eval(F, f, 0) == expect0);
      CHECK(poly_eval(F, f, 1) == det_cofactor(F, mat_sub(F, Mat::identity(n), A)));
    }
  }
}

TEST_CASE("cofactor determinant against hand values") {
  Fq F(7);
  CHECK(det_cofactor(F, Mat::identity(3)) == 1);
  // det [[1,2,3],[4,5,6],[0,1,3]] = -3 over Z, so 4 mod 7.
  Mat A(3, {1, 2, 3, 4, 5, 6, 0, 1, 3});
  CHECK(det_cofactor(F, A) == F.reduce(-3));
  CHECK(det_cofactor(F, Mat::zero(2)) == 0);
}

TEST_CASE("pairing row implements the fixed alternating form") {
  Fq F(3);
  // <e_i, e_{g+i}> = 1, <e_{g+i}, e_i> = -1, everything else 0.
  uint32_t g = 2;
  for (uint32_t i = 0; i < 2 * g; ++i) {
    Vec ei(2 * g, 0);
    ei[i] = 1;
    for (uint32_t j = 0; j < 2 * g; ++j) {
      Vec ej(2 * g, 0);
      ej[j] = 1;
      uint64_t want = 0;
      if (j == i + g) want = 1;
      if (i == j + g) want = F.neg(1);
      CHECK(symplectic_pair(F, ei, ej) == want);
    }
  }
  // The row form equals multiplying the Gram matrix from the left.
  Mat J = standard_j(F, g);
  CounterRng rng(5, 0);
  for (int rep = 0; rep < 10; ++rep) {
    Vec x(2 * g);
    for (auto& v : x) v = rng.next_below(3);
    Vec row = symplectic_pair_row(F, x);
    Vec viaJ = mat_apply(F, mat_transpose(J), x);  // (x^T J)^T = J^T x
    CHECK(row == viaJ);
  }
}

TEST_CASE("similitude multiplier on fixed matrices") {
  Fq F(3);
  CHECK(similitude_multiplier(F, Mat::identity(2)) == 1);
  CHECK(similitude_multiplier(F, Mat::identity(4)) == 1);
  CHECK(similitude_multiplier(F, coset_representative(F, 2, 2)) == 2);
  CHECK(!similitude_multiplier(F, Mat::zero(2)).has_value());
  // Swap of the pairing basis vectors: <Ae_0, Ae_1> = <e_1, e_0> = -1 = 2.
  CHECK(similitude_multiplier(F, Mat(2, {0, 2, 1, 0})) == 1);
  Fq F5(5);
  // Scales <e_1, f_1> by 2 but <e_0, f_0> by 1: not a similitude.
  Mat bad = Mat::zero(4);
  bad.at(0, 0) = 1;
  bad.at(1, 1) = 2;
  bad.at(2, 2) = 1;
  bad.at(3, 3) = 2;
  CHECK(!similitude_multiplier(F5, bad).has_value());
  CHECK_THROWS_AS(similitude_multiplier(F, Mat(3, std::vector<uint64_t>(9, 0))),
                  UsageError);
}

TEST_CASE("2x2 similitudes over F_3 are exactly the invertibles, multiplier = det") {
  Fq F(3);
  uint64_t found = 0;
  for (uint64_t m = 0; m < 81; ++m) {
    uint64_t a = m % 3, b = (m / 3) % 3, c = (m / 9) % 3, d = (m / 27) % 3;
    Mat A(2, {a, b, c, d});
    uint64_t det = F.sub(F.mul(a, d), F.mul(b, c));
    auto mult = similitude_multiplier(F, A);
    if (det == 0) {
      CHECK(!mult.has_value());
    } else {
      REQUIRE(mult.has_value());
      CHECK(*mult == det);
      ++found;
    }
  }
  CHECK(found == 48);  // |GL_2(F_3)|, counted here by the det filter itself
}

TEST_CASE("group orders against independent naive filters") {
  // |Sp_2(F_3)| = |SL_2(F_3)|: count det = 1 by direct arithmetic.
  uint64_t sl2 = 0;
  for (uint64_t m = 0; m < 81; ++m) {
    int64_t a = m % 3, b = (m / 3) % 3, c = (m / 9) % 3, d = (m / 27) % 3;
    if (((a * d - b * c) % 3 + 3) % 3 == 1) ++sl2;
  }
  CHECK(sl2 == 24);
  CHECK(sp_order(1, 3) == 24);

  // |GL_2(F_3)|: count det != 0.
  uint64_t gl2 = 0;
  for (uint64_t m = 0; m < 81; ++m) {
    int64_t a = m % 3, b = (m / 3) % 3, c = (m / 9) % 3, d = (m / 27) % 3;
    if (((a * d - b * c) % 3 + 3) % 3 != 0) ++gl2;
  }
  CHECK(gl2 == 48);
  CHECK(gl_order(2, 3) == 48);

  // |Sp_4(F_2)|: filter all 65536 matrices by A^T J A = J with bit
  // arithmetic only.
  auto pair2 = [](const uint64_t x[4], const uint64_t w[4]) {
    // <x, w> over F_2 with g = 2: x_0 w_2 + x_1 w_3 + x_2 w_0 + x_3 w_1.
    return (x[0] * w[2] + x[1] * w[3] + x[2] * w[0] + x[3] * w[1]) & 1;
  };
  uint64_t sp4 = 0;
  for (uint64_t m = 0; m < 65536; ++m) {
    uint64_t col[4][4];
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) col[j][i] = (m >> (4 * i + j)) & 1;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      for (int j = 0; j < 4 && ok; ++j) {
        uint64_t want = (j == i + 2 || i == j + 2) ? 1 : 0;  // -1 = 1 here
        if (pair2(col[i], col[j]) != want) ok = false;
      }
    }
    if (ok) ++sp4;
  }
  CHECK(sp4 == 720);
  CHECK(sp_order(2, 2) == 720);
}

TEST_CASE("order formulas at the degenerate and composite points") {
  CHECK(sp_order(0, 3) == 1);
  CHECK(sp_order(0, 2) == 1);
  CHECK(gl_order(0, 5) == 1);
  CHECK(gl_order(1, 7) == 6);
  CHECK(sp_order(2, 3) == 51840);
  for (uint64_t ell : {2ull, 3ull, 7ull}) {
    for (unsigned g = 1; g <= 3; ++g) {
      CHECK(gsp_order(g, ell) == (mpz_class(ell) - 1) * sp_order(g, ell));
    }
  }
  // Values past 64 bits stay exact.
  mpz_class big = sp_order(5, 31);
  CHECK(mpz_sizeinbase(big.get_mpz_t(), 2) > 64);
  CHECK(big % pow_ui(31, 25) == 0);
}

TEST_CASE("exact_div rejects inexact quotients") {
  CHECK(exact_div(mpz_class(12), mpz_class(4), "test") == 3);
  CHECK_THROWS_AS(exact_div(mpz_class(12), mpz_class(5), "test"), InternalError);
  CHECK_THROWS_AS(exact_div(mpz_class(12), mpz_class(0), "test"), InternalError);
}

TEST_CASE("coset representative scales the last block") {
  Fq F(5);
  Mat D = coset_representative(F, 2, 3);
  CHECK(D == Mat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3}));
  CHECK_THROWS_AS(coset_representative(F, 2, 0), UsageError);
  CHECK_THROWS_AS(coset_representative(F, 0, 1), UsageError);
}
