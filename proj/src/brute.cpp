// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "brute.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "census.hpp"
#include "errors.hpp"
#include "orders.hpp"

namespace gspc {

std::optional<AffineSet> affine_solve(const Fq& F, const std::vector<Vec>& rows,
                                      const Vec& rhs, uint32_t n) {
  if (rows.size() != rhs.size()) throw UsageError("system shape mismatch");
  // Augmented row echelon form.
  std::vector<Vec> aug;
  aug.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw UsageError("system shape mismatch");
    Vec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  size_t rank = 0;
  std::vector<uint32_t> pivot_col;
  for (uint32_t c = 0; c < n && rank < aug.size(); ++c) {
    size_t pr = rank;
    while (pr < aug.size() && aug[pr][c] == 0) ++pr;
    if (pr == aug.size()) continue;
    std::swap(aug[rank], aug[pr]);
    uint64_t inv = F.inv(aug[rank][c]);
    for (uint32_t j = c; j <= n; ++j) aug[rank][j] = F.mul(aug[rank][j], inv);
    for (size_t i = 0; i < aug.size(); ++i) {
      if (i == rank || aug[i][c] == 0) continue;
      uint64_t factor = aug[i][c];
      for (uint32_t j = c; j <= n; ++j) {
        aug[i][j] = F.sub(aug[i][j], F.mul(factor, aug[rank][j]));
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t i = rank; i < aug.size(); ++i) {
    if (aug[i][n] != 0) return std::nullopt;  // inconsistent system
  }
  AffineSet out;
  out.particular.assign(n, 0);
  for (size_t i = 0; i < rank; ++i) out.particular[pivot_col[i]] = aug[i][n];
  std::vector<bool> is_pivot(n, false);
  for (uint32_t c : pivot_col) is_pivot[c] = true;
  for (uint32_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec k(n, 0);
    k[c] = 1;
    for (size_t i = 0; i < rank; ++i) k[pivot_col[i]] = F.neg(aug[i][c]);
    out.basis.push_back(std::move(k));
  }
  return out;
}

namespace {

// Visits every point of an affine set in odometer order over the kernel
// coordinates (last coordinate fastest); skip_zero drops the zero vector,
// which only arises when the particular solution is zero.
void for_each_affine(const Fq& F, const AffineSet& s, bool skip_zero,
                     const std::function<void(const Vec&)>& fn) {
  size_t d = s.basis.size();
  std::vector<uint64_t> t(d, 0);
  Vec w(s.particular.size());
  for (;;) {
    bool all_zero_coords = true;
    for (uint64_t v : t) {
      if (v != 0) {
        all_zero_coords = false;
        break;
      }
    }
    w = s.particular;
    for (size_t i = 0; i < d; ++i) {
      if (t[i] == 0) continue;
      for (size_t j = 0; j < w.size(); ++j) {
        w[j] = F.add(w[j], F.mul(t[i], s.basis[i][j]));
      }
    }
    bool zero = all_zero_coords;
    if (zero) {
      for (uint64_t v : s.particular) {
        if (v != 0) {
          zero = false;
          break;
        }
      }
    }
    if (!(skip_zero && zero)) fn(w);
    size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++t[i] < F.ell()) {
        done = false;
        break;
      }
      t[i] = 0;
    }
    if (done) return;
  }
}

// Pairing constraints for the next basis image: every previously chosen
// image pairs to a prescribed value.
struct StepSystem {
  std::vector<Vec> rows;
  Vec rhs;
};

StepSystem step_system(const Fq& F, const std::vector<Vec>& chosen, int mate) {
  // mate = index into chosen whose pairing must be 1 (the u_k partner), or
  // -1 when all pairings are zero (choosing u_k itself).
  StepSystem sys;
  for (size_t i = 0; i < chosen.size(); ++i) {
    sys.rows.push_back(symplectic_pair_row(F, chosen[i]));
    sys.rhs.push_back(static_cast<int>(i) == mate ? 1 : 0);
  }
  return sys;
}

Mat assemble(const Fq& F, unsigned g, uint64_t gamma,
             const std::vector<Vec>& chosen) {
  // chosen holds u_1, v_1, ..., u_g, v_g; the matrix sends e_k to u_k and
  // f_k to gamma * v_k.
  std::vector<Vec> cols(2 * g);
  for (unsigned k = 0; k < g; ++k) {
    cols[k] = chosen[2 * k];
    cols[g + k] = chosen[2 * k + 1];
    for (auto& x : cols[g + k]) x = F.mul(x, gamma);
  }
  return mat_from_columns(cols);
}

void enumerate_rec(const Fq& F, unsigned g, uint64_t gamma,
                   std::vector<Vec>& chosen, uint64_t& visited,
                   const std::function<void(const Mat&)>& fn) {
  if (chosen.size() == 2 * g) {
    fn(assemble(F, g, gamma, chosen));
    ++visited;
    return;
  }
  bool u_step = chosen.size() % 2 == 0;
  StepSystem sys = step_system(F, chosen, u_step ? -1 : static_cast<int>(chosen.size()) - 1);
  auto sol = affine_solve(F, sys.rows, sys.rhs, 2 * g);
  if (!sol) throw InternalError("basis completion step has no solution");
  for_each_affine(F, *sol, u_step, [&](const Vec& w) {
    chosen.push_back(w);
    enumerate_rec(F, g, gamma, chosen, visited, fn);
    chosen.pop_back();
  });
}

}  // namespace

uint64_t enumerate_coset(const Fq& F, unsigned g, uint64_t gamma, uint64_t budget,
                         const std::function<void(const Mat&)>& fn) {
  validate_census_params(g, gamma, F.ell());
  mpz_class size = sp_order(g, F.ell());
  if (size > budget) {
    throw BudgetError("coset has " + size.get_str() + " elements, budget " +
                      std::to_string(budget));
  }
  std::vector<Vec> chosen;
  uint64_t visited = 0;
  enumerate_rec(F, g, gamma, chosen, visited, fn);
  if (mpz_class(static_cast<unsigned long>(visited)) != size) {
    throw InternalError("coset walk visited " + std::to_string(visited) +
                        " elements, expected " + size.get_str());
  }
  return visited;
}

uint64_t enumerate_naive(const Fq& F, unsigned g, uint64_t budget,
                         const std::function<void(const Mat&, uint64_t)>& fn) {
  if (g == 0) throw UsageError("genus must be positive");
  uint32_t n = 2 * g;
  mpz_class total = pow_ui(F.ell(), static_cast<unsigned long>(n) * n);
  if (total > budget) {
    throw BudgetError("naive scan has " + total.get_str() + " matrices, budget " +
                      std::to_string(budget));
  }
  Mat A = Mat::zero(n);
  uint64_t found = 0;
  for (;;) {
    auto mult = similitude_multiplier(F, A);
    if (mult) {
      fn(A, *mult);
      ++found;
    }
    size_t i = A.a.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++A.a[i] < F.ell()) {
        done = false;
        break;
      }
      A.a[i] = 0;
    }
    if (done) return found;
  }
}

Mat sample_uniform(const Fq& F, unsigned g, uint64_t gamma, CounterRng& rng) {
  validate_census_params(g, gamma, F.ell());
  std::vector<Vec> chosen;
  for (unsigned step = 0; step < 2 * g; ++step) {
    bool u_step = step % 2 == 0;
    StepSystem sys = step_system(F, chosen, u_step ? -1 : static_cast<int>(step) - 1);
    auto sol = affine_solve(F, sys.rows, sys.rhs, 2 * g);
    if (!sol) throw InternalError("basis completion step has no solution");
    for (;;) {
      Vec w = sol->particular;
      bool nonzero_coord = false;
      for (const Vec& b : sol->basis) {
        uint64_t t = rng.next_below(F.ell());
        if (t != 0) {
          nonzero_coord = true;
          for (size_t j = 0; j < w.size(); ++j) w[j] = F.add(w[j], F.mul(t, b[j]));
        }
      }
      if (u_step) {
        bool zero = !nonzero_coord;
        if (zero) {
          for (uint64_t v : sol->particular) {
            if (v != 0) {
              zero = false;
              break;
            }
          }
        }
        if (zero) continue;  // rejection: u_k must be nonzero
      }
      chosen.push_back(std::move(w));
      break;
    }
  }
  return assemble(F, g, gamma, chosen);
}

BruteCensus count_brute(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                        uint64_t budget) {
  if ((tag == PropertyTag::RLiteral || tag == PropertyTag::RProof) && F.ell() < 3) {
    throw UsageError("root-pairing properties need ell >= 3");
  }
  BruteCensus out;
  out.coset_size = enumerate_coset(F, g, gamma, budget, [&](const Mat& A) {
    Poly f = charpoly(F, A);
    ++out.delta[f];
    if (has_property(F, f, tag)) ++out.w_count;
  });
  return out;
}

SampleReport montecarlo(const Fq& F, unsigned g, uint64_t gamma, PropertyTag tag,
                        uint64_t n, uint64_t seed, unsigned threads) {
  validate_census_params(g, gamma, F.ell());
  if ((tag == PropertyTag::RLiteral || tag == PropertyTag::RProof) && F.ell() < 3) {
    throw UsageError("root-pairing properties need ell >= 3");
  }
  if (n == 0) throw UsageError("sample count must be positive");
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  uint64_t num_shards = (n + kShardSize - 1) / kShardSize;
  std::vector<uint64_t> shard_hits(num_shards, 0);
  std::atomic<uint64_t> next_shard{0};
  auto body = [&]() {
    for (;;) {
      uint64_t j = next_shard.fetch_add(1);
      if (j >= num_shards) return;
      uint64_t lo = j * kShardSize;
      uint64_t hi = std::min(n, lo + kShardSize);
      CounterRng rng(seed, j);
      uint64_t hits = 0;
      for (uint64_t i = lo; i < hi; ++i) {
        Mat A = sample_uniform(F, g, gamma, rng);
        if (has_property(F, charpoly(F, A), tag)) ++hits;
      }
      shard_hits[j] = hits;
    }
  };
  if (threads <= 1) {
    body();
  } else {
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&]() {
      try {
        body();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  SampleReport r;
  r.g = g;
  r.ell = F.ell();
  r.gamma = gamma;
  r.tag = tag;
  r.n_samples = n;
  r.seed = seed;
  for (uint64_t h : shard_hits) r.hits += h;
  r.estimate = static_cast<double>(r.hits) / static_cast<double>(n);
  r.stderr_est = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n));
  return r;
}

}  // namespace gspc
