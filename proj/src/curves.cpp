// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "curves.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "brute.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "orders.hpp"

namespace gspc {

namespace {

void validate_q(uint64_t q) {
  if (q < 3 || !is_prime_u64(q)) {
    throw UsageError("base field order must be an odd prime, got " + std::to_string(q));
  }
  if (q >= (uint64_t{1} << 20)) {
    throw UsageError("base field order too large for a full scan: " + std::to_string(q));
  }
}

// chi[v] = quadratic character of v in F_q, with chi(0) = 0.
std::vector<int8_t> chi_table(uint64_t q) {
  std::vector<int8_t> chi(q, -1);
  chi[0] = 0;
  for (uint64_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  return chi;
}

int64_t curve_char_sum(uint64_t q, const std::vector<int8_t>& chi, uint64_t a,
                       uint64_t b) {
  int64_t s = 0;
  for (uint64_t x = 0; x < q; ++x) {
    uint64_t v = (x * ((x * x + a) % q) + b) % q;
    s += chi[v];
  }
  return s;
}

bool is_singular(uint64_t q, uint64_t a, uint64_t b) {
  uint64_t a3 = (((a * a) % q) * a) % q;
  uint64_t b2 = (b * b) % q;
  return (4 * a3 + 27 * b2) % q == 0;
}

}  // namespace

CurveCount point_count(uint64_t q, uint64_t a, uint64_t b) {
  validate_q(q);
  a %= q;
  b %= q;
  if (is_singular(q, a, b)) {
    throw UsageError("singular curve: 4a^3 + 27b^2 = 0");
  }
  auto chi = chi_table(q);
  int64_t s = curve_char_sum(q, chi, a, b);
  CurveCount c;
  c.points = q + 1 + s;
  c.trace = -s;
  if (c.trace * c.trace > static_cast<int64_t>(4 * q)) {
    throw InternalError("trace out of the Weil range");
  }
  return c;
}

Poly frob_charpoly_mod(const Fq& Fl, int64_t t, uint64_t q) {
  if (q % Fl.ell() == 0) {
    throw UsageError("reduction prime divides the base field order");
  }
  Poly f;
  f.c = {q % Fl.ell(), Fl.neg(Fl.reduce(t)), 1};
  return f;
}

ScanReport scan(uint64_t q, uint64_t ell, unsigned threads) {
  validate_q(q);
  Fq Fl(ell);
  if (q % ell == 0) {
    throw UsageError("reduction prime divides the base field order");
  }
  ScanReport rep;
  rep.q = q;
  rep.ell = ell;
  rep.gamma = q % ell;
  bool with_r = ell >= 3;

  // The reduced Frobenius polynomial only depends on t mod ell, so the
  // property predicates collapse to lookup tables indexed by it.
  std::vector<uint8_t> tab_e(ell), tab_n(ell), tab_r(ell, 0);
  for (uint64_t tm = 0; tm < ell; ++tm) {
    Poly f = frob_charpoly_mod(Fl, static_cast<int64_t>(tm), q);
    tab_e[tm] = has_property(Fl, f, PropertyTag::E) ? 1 : 0;
    tab_n[tm] = tab_e[tm] ? 0 : 1;
    if (with_r) tab_r[tm] = has_property(Fl, f, PropertyTag::RLiteral) ? 1 : 0;
  }

  auto chi = chi_table(q);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, q));

  struct Partial {
    uint64_t scanned = 0, singular = 0, e = 0, n = 0, r = 0;
  };
  std::vector<Partial> parts(threads);
  auto body = [&](unsigned w) {
    Partial& p = parts[w];
    for (uint64_t a = w; a < q; a += threads) {
      for (uint64_t b = 0; b < q; ++b) {
        if (is_singular(q, a, b)) {
          ++p.singular;
          continue;
        }
        int64_t s = curve_char_sum(q, chi, a, b);
        uint64_t points = q + 1 + s;
        int64_t t = -s;
        if (t * t > static_cast<int64_t>(4 * q)) {
          throw InternalError("trace out of the Weil range");
        }
        // Eigenvalue one mod ell is exactly ell | #E; keep both views in
        // lockstep as a consistency check.
        uint64_t tm = Fl.reduce(t);
        if ((points % ell == 0) != (tab_e[tm] != 0)) {
          throw InternalError("point count and Frobenius polynomial disagree");
        }
        ++p.scanned;
        p.e += tab_e[tm];
        p.n += tab_n[tm];
        p.r += tab_r[tm];
      }
    }
  };
  if (threads <= 1) {
    body(0);
  } else {
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&](unsigned w) {
      try {
        body(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  uint64_t e_hits = 0, n_hits = 0, r_hits = 0;
  for (const auto& p : parts) {
    rep.scanned += p.scanned;
    rep.singular += p.singular;
    e_hits += p.e;
    n_hits += p.n;
    r_hits += p.r;
  }
  if (rep.scanned + rep.singular != q * q) {
    throw InternalError("scan did not cover every Weierstrass pair");
  }

  mpz_class sp1 = sp_order(1, ell);
  mpz_class t1 = t_count(1, rep.gamma, ell);
  auto fill = [&](const char* name, uint64_t hits, const mpq_class& target) {
    TagStats st;
    st.hits = hits;
    st.freq = mpq_class(static_cast<unsigned long>(hits)) /
              mpq_class(static_cast<unsigned long>(rep.scanned));
    st.target = target;
    st.deviation = st.freq - st.target;
    if (st.deviation < 0) st.deviation = -st.deviation;
    rep.tags[name] = st;
  };
  fill("E", e_hits, mpq_class(t1) / mpq_class(sp1));
  fill("N", n_hits, mpq_class(sp1 - t1) / mpq_class(sp1));
  if (with_r) {
    BruteCensus bc = count_brute(Fl, 1, rep.gamma, PropertyTag::RLiteral, kDefaultBudget);
    fill("R", r_hits, mpq_class(static_cast<unsigned long>(bc.w_count)) / mpq_class(sp1));
  }
  return rep;
}

std::vector<uint64_t> envelope_default_qs(uint64_t ell, uint64_t gamma, uint64_t q_max) {
  Fq Fl(ell);
  if (gamma == 0 || gamma >= ell) {
    throw UsageError("multiplier must lie in [1, ell-1], got " + std::to_string(gamma));
  }
  std::vector<uint64_t> qs;
  for (uint64_t q : primes_up_to(q_max)) {
    if (q == 2 || q == ell) continue;
    if (q % ell == gamma) qs.push_back(q);
  }
  return qs;
}

EnvelopeReport envelope_fit(uint64_t ell, uint64_t gamma,
                            const std::vector<uint64_t>& qs, unsigned threads) {
  Fq Fl(ell);
  if (qs.empty()) throw UsageError("envelope fit needs at least one prime");
  EnvelopeReport rep;
  rep.ell = ell;
  rep.gamma = gamma;
  std::vector<uint64_t> sorted = qs;
  std::sort(sorted.begin(), sorted.end());
  for (uint64_t q : sorted) {
    if (q % ell != gamma) {
      throw UsageError("prime " + std::to_string(q) + " is not in the residue class");
    }
    ScanReport sr = scan(q, ell, threads);
    EnvelopePoint pt;
    pt.q = q;
    pt.deviation = sr.tags.at("E").deviation;
    pt.deviation_sq_q = pt.deviation * pt.deviation *
                        mpq_class(static_cast<unsigned long>(q));
    rep.points.push_back(pt);
  }
  auto max_over = [&](size_t lo, size_t hi) {
    mpq_class m = 0;
    for (size_t i = lo; i < hi; ++i) m = std::max(m, rep.points[i].deviation_sq_q);
    return m;
  };
  size_t half = rep.points.size() / 2;
  rep.max_sq = max_over(0, rep.points.size());
  rep.first_half_max_sq = max_over(0, half == 0 ? rep.points.size() : half);
  rep.second_half_max_sq = max_over(half, rep.points.size());
  rep.constant = std::sqrt(rep.max_sq.get_d());
  return rep;
}

}  // namespace gspc
