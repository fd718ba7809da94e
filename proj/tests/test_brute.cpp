// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "brute.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "fq.hpp"
#include "matrix.hpp"
#include "orders.hpp"
#include "poly.hpp"
#include "rng.hpp"
#include "xi.hpp"

using namespace gspc;

namespace {

// Everything any solver returns must actually solve the system, and the
// affine set must have the advertised dimension.
void check_solves(const Fq& F, const std::vector<Vec>& rows, const Vec& rhs,
                  const AffineSet& s) {
  auto apply = [&](const Vec& x) {
    for (size_t i = 0; i < rows.size(); ++i) {
      uint64_t acc = 0;
      for (size_t j = 0; j < x.size(); ++j) acc = F.add(acc, F.mul(rows[i][j], x[j]));
      CHECK(acc == rhs[i]);
    }
  };
  apply(s.particular);
  for (const Vec& b : s.basis) {
    Vec x = s.particular;
    for (size_t j = 0; j < x.size(); ++j) x[j] = F.add(x[j], b[j]);
    apply(x);
  }
}

}  // namespace

TEST_CASE("linear solver on hand systems over F_3") {
  Fq F(3);
  // x + y = 1: line through (1,0) with direction (2,1).
  auto s = affine_solve(F, {{1, 1}}, {1}, 2);
  REQUIRE(s.has_value());
  CHECK(s->particular == Vec{1, 0});
  REQUIRE(s->basis.size() == 1);
  CHECK(s->basis[0] == Vec{2, 1});
  check_solves(F, {{1, 1}}, {1}, *s);

  // Unique solution: x = 2, x + y = 1.
  auto u = affine_solve(F, {{1, 0}, {1, 1}}, {2, 1}, 2);
  REQUIRE(u.has_value());
  CHECK(u->particular == Vec{2, 2});
  CHECK(u->basis.empty());

  // Inconsistent: second equation is twice the first with a different rhs.
  CHECK(!affine_solve(F, {{1, 1}, {2, 2}}, {1, 1}, 2).has_value());

  // No constraints: the whole plane, kernel basis in column order.
  auto w = affine_solve(F, {}, {}, 2);
  REQUIRE(w.has_value());
  CHECK(w->particular == Vec{0, 0});
  REQUIRE(w->basis.size() == 2);
  CHECK(w->basis[0] == Vec{1, 0});
  CHECK(w->basis[1] == Vec{0, 1});

  // Redundant rows collapse: x + y = 1 twice.
  auto r = affine_solve(F, {{1, 1}, {1, 1}}, {1, 1}, 2);
  REQUIRE(r.has_value());
  CHECK(r->basis.size() == 1);
}

TEST_CASE("coset walk visits each element once with the right multiplier") {
  Fq F(3);
  for (uint64_t gamma : {1ull, 2ull}) {
    std::set<Mat> seen;
    std::vector<Mat> order;
    uint64_t n = enumerate_coset(F, 1, gamma, 1000, [&](const Mat& A) {
      auto mult = similitude_multiplier(F, A);
      REQUIRE(mult.has_value());
      CHECK(*mult == gamma);
      uint64_t det = F.sub(F.mul(A.at(0, 0), A.at(1, 1)), F.mul(A.at(0, 1), A.at(1, 0)));
      CHECK(det == gamma);  // g = 1: multiplier is the determinant
      seen.insert(A);
      order.push_back(A);
    });
    CHECK(n == 24);
    CHECK(seen.size() == 24);
    CHECK(mpz_class(static_cast<unsigned long>(n)) == sp_order(1, 3));
    // First element: u = (0,1), v = (2,0), last column scaled by gamma.
    Mat first = (gamma == 1) ? Mat(2, {0, 2, 1, 0}) : Mat(2, {0, 1, 1, 0});
    CHECK(order.front() == first);
  }
}

TEST_CASE("coset walk against the naive full-matrix filter") {
  // ell=3, g=1: 81 matrices, 48 similitudes, 24 per multiplier.
  Fq F(3);
  std::map<uint64_t, std::set<Mat>> naive;
  uint64_t total = enumerate_naive(F, 1, kDefaultBudget, [&](const Mat& A, uint64_t mult) {
    naive[mult].insert(A);
  });
  CHECK(total == 48);
  REQUIRE(naive.size() == 2);
  for (uint64_t gamma : {1ull, 2ull}) {
    std::set<Mat> walk;
    enumerate_coset(F, 1, gamma, 1000, [&](const Mat& A) { walk.insert(A); });
    CHECK(walk == naive[gamma]);
  }

  // ell=5, g=1: 480 similitudes, 120 per multiplier.
  Fq F5(5);
  std::map<uint64_t, uint64_t> counts;
  CHECK(enumerate_naive(F5, 1, kDefaultBudget, [&](const Mat&, uint64_t m) { counts[m]++; }) ==
        480);
  REQUIRE(counts.size() == 4);
  for (uint64_t gamma = 1; gamma < 5; ++gamma) CHECK(counts[gamma] == 120);

  // ell=2, g=2: 65536 matrices, one coset of 720.
  Fq F2(2);
  std::set<Mat> naive2, walk2;
  CHECK(enumerate_naive(F2, 2, kDefaultBudget, [&](const Mat& A, uint64_t m) {
          CHECK(m == 1);
          naive2.insert(A);
        }) == 720);
  CHECK(enumerate_coset(F2, 2, 1, 1000, [&](const Mat& A) { walk2.insert(A); }) == 720);
  CHECK(walk2 == naive2);
}

TEST_CASE("budget refusals name the cost") {
  Fq F(3);
  try {
    enumerate_coset(F, 2, 1, 51839, [](const Mat&) {});
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("51840") != std::string::npos);
  }
  try {
    enumerate_naive(F, 2, 1000, [](const Mat&, uint64_t) {});
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("43046721") != std::string::npos);
  }
}

TEST_CASE("exhaustive counts match the recursion and an independent histogram") {
  Fq F(3);
  // Independent oracle: classify all 81 2x2 matrices by determinant (= the
  // multiplier at g = 1) and tabulate x^2 - tr x + det directly.
  std::map<uint64_t, std::map<Poly, uint64_t>> oracle;
  for (uint64_t m = 0; m < 81; ++m) {
    uint64_t a = m % 3, b = (m / 3) % 3, c = (m / 9) % 3, d = (m / 27) % 3;
    uint64_t det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) continue;
    Poly f({det, F.neg(F.add(a, d)), 1});
    oracle[det][f]++;
  }
  for (uint64_t gamma : {1ull, 2ull}) {
    BruteCensus e = count_brute(F, 1, gamma, PropertyTag::E, kDefaultBudget);
    CHECK(e.coset_size == 24);
    CHECK(mpz_class(static_cast<unsigned long>(e.w_count)) == t_count(1, gamma, 3));
    CHECK(e.delta == oracle[gamma]);
    BruteCensus n = count_brute(F, 1, gamma, PropertyTag::N, kDefaultBudget);
    CHECK(e.w_count + n.w_count == 24);
    // Every fiber sits inside the sandwich.
    auto [lo, hi] = delta_bounds(1, 3);
    uint64_t total = 0;
    for (const auto& [f, cnt] : e.delta) {
      CHECK(lo <= cnt);
      CHECK(cnt <= hi);
      total += cnt;
    }
    CHECK(total == 24);
  }
  // Frozen fibers on the identity coset: x^2+1 has 6, both squares have 9.
  BruteCensus id = count_brute(F, 1, 1, PropertyTag::E, kDefaultBudget);
  REQUIRE(id.delta.size() == 3);
  CHECK(id.delta.at(poly_from(F, {1, 0, 1})) == 6);
  CHECK(id.delta.at(poly_from(F, {1, 1, 1})) == 9);
  CHECK(id.delta.at(poly_from(F, {1, 2, 1})) == 9);
  // The literal root-pairing count on the identity coset: only (x-1)^2.
  BruteCensus lit = count_brute(F, 1, 1, PropertyTag::RLiteral, kDefaultBudget);
  CHECK(lit.w_count == 9);
  // g=2 spot value against the recursion.
  BruteCensus g2 = count_brute(F, 2, 2, PropertyTag::E, kDefaultBudget);
  CHECK(g2.coset_size == 51840);
  CHECK(mpz_class(static_cast<unsigned long>(g2.w_count)) == 22680);
  // ell=2 still works for E but refuses root-pairing tags.
  Fq F2(2);
  CHECK(count_brute(F2, 1, 1, PropertyTag::E, kDefaultBudget).w_count == 4);
  CHECK_THROWS_AS(count_brute(F2, 1, 1, PropertyTag::RLiteral, kDefaultBudget),
                  UsageError);
}

TEST_CASE("uniform sampling produces valid coset elements deterministically") {
  Fq F(3);
  CounterRng rng(99, 0);
  for (int i = 0; i < 100; ++i) {
    Mat A = sample_uniform(F, 1, 2, rng);
    CHECK(similitude_multiplier(F, A) == 2);
  }
  CounterRng r1(7, 0), r2(7, 0), r3(7, 1);
  std::vector<Mat> s1, s2, s3;
  for (int i = 0; i < 20; ++i) {
    s1.push_back(sample_uniform(F, 2, 1, r1));
    s2.push_back(sample_uniform(F, 2, 1, r2));
    s3.push_back(sample_uniform(F, 2, 1, r3));
  }
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  for (const Mat& A : s1) CHECK(similitude_multiplier(F, A) == 1);
}

TEST_CASE("sampled characteristic polynomials match the exact fibers") {
  // Chi-square against the exact histogram {6, 9, 9}/24 at (g, ell, gamma)
  // = (1, 3, 2); threshold 13.8155 is the 0.001 tail at 2 degrees of
  // freedom, so a sound sampler fails once in a thousand seeds.
  Fq F(3);
  BruteCensus exact = count_brute(F, 1, 2, PropertyTag::E, kDefaultBudget);
  const uint64_t n = 30000;
  CounterRng rng(2718, 0);
  std::map<Poly, uint64_t> hist;
  for (uint64_t i = 0; i < n; ++i) hist[charpoly(F, sample_uniform(F, 1, 2, rng))]++;
  for (const auto& [f, cnt] : hist) CHECK(exact.delta.count(f) == 1);
  double chi2 = 0;
  for (const auto& [f, cnt] : exact.delta) {
    double expect = static_cast<double>(n) * static_cast<double>(cnt) / 24.0;
    double got = hist.count(f) ? static_cast<double>(hist.at(f)) : 0.0;
    chi2 += (got - expect) * (got - expect) / expect;
  }
  CHECK(chi2 < 13.815510557964274);
}

TEST_CASE("monte carlo estimates hit the exact proportion") {
  Fq F(3);
  SampleReport r = montecarlo(F, 1, 2, PropertyTag::E, 20000, 1234, 1);
  CHECK(r.n_samples == 20000);
  CHECK(r.estimate == doctest::Approx(static_cast<double>(r.hits) / 20000.0));
  CHECK(r.stderr_est ==
        doctest::Approx(std::sqrt(r.estimate * (1.0 - r.estimate) / 20000.0)));
  // True proportion is exactly 1/2; demand agreement within 5 sigma.
  CHECK(std::abs(r.estimate - 0.5) <= 5.0 * std::max(r.stderr_est, 1e-9));
}

TEST_CASE("monte carlo hit counts are independent of the thread count") {
  Fq F(3);
  // 12288 samples = 3 shards; shard j always consumes stream j.
  SampleReport a = montecarlo(F, 1, 2, PropertyTag::E, 12288, 555, 1);
  SampleReport b = montecarlo(F, 1, 2, PropertyTag::E, 12288, 555, 3);
  SampleReport c = montecarlo(F, 1, 2, PropertyTag::E, 12288, 555, 0);
  CHECK(a.hits == b.hits);
  CHECK(a.hits == c.hits);
  CHECK(a.estimate == b.estimate);
  // A short tail shard (n not a multiple of the shard size) still agrees.
  SampleReport d = montecarlo(F, 1, 2, PropertyTag::E, 5000, 555, 1);
  SampleReport e = montecarlo(F, 1, 2, PropertyTag::E, 5000, 555, 2);
  CHECK(d.hits == e.hits);
  CHECK(d.n_samples == 5000);
  // Different seeds decouple.
  SampleReport f2 = montecarlo(F, 1, 2, PropertyTag::E, 12288, 556, 1);
  CHECK(f2.hits != a.hits);  // equal only with probability ~1/180
}

TEST_CASE("confidence intervals cover the true value at the nominal rate") {
  Fq F(3);
  const int runs = 150;
  const uint64_t n = 8192;
  int covered = 0;
  for (int i = 0; i < runs; ++i) {
    SampleReport r = montecarlo(F, 1, 2, PropertyTag::E, n, 40000 + i, 1);
    if (std::abs(r.estimate - 0.5) <= 1.96 * r.stderr_est) ++covered;
  }
  // Nominal 95%: 150 runs miss ~7.5 times; 17+ misses is beyond 3.5 sigma.
  CHECK(covered >= 133);
}
