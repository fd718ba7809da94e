// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <vector>

namespace gspc {

// Arithmetic in the prime field F_ell, residues canonical in [0, ell).
// ell is a runtime value validated once at construction; everything that
// computes over the same field shares one context.  ell stays below 2^31
// so products of two residues never overflow a uint64_t.
class Fq {
 public:
  explicit Fq(uint64_t ell);  // throws UsageError unless ell is prime

  uint64_t ell() const { return ell_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= ell_ ? s - ell_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + ell_ - b;
  }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : ell_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % ell_; }

  // Canonical residue of a signed integer.
  uint64_t reduce(int64_t v) const;

  uint64_t pow(uint64_t a, uint64_t e) const;

  // Multiplicative inverse; zero input signals a domain error (UsageError).
  uint64_t inv(uint64_t a) const;

 private:
  uint64_t ell_;
};

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> primes_up_to(uint64_t limit);

}  // namespace gspc
