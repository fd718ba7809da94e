// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "fq.hpp"

#include <string>

#include "errors.hpp"

namespace gspc {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
  std::vector<uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return out;
}

Fq::Fq(uint64_t ell) : ell_(ell) {
  if (ell >= (uint64_t{1} << 31)) {
    throw UsageError("field order too large: " + std::to_string(ell));
  }
  if (!is_prime_u64(ell)) {
    throw UsageError("field order must be prime, got " + std::to_string(ell));
  }
}

uint64_t Fq::reduce(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(ell_);
  if (m < 0) m += static_cast<int64_t>(ell_);
  return static_cast<uint64_t>(m);
}

uint64_t Fq::pow(uint64_t a, uint64_t e) const {
  uint64_t base = a % ell_;
  uint64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t Fq::inv(uint64_t a) const {
  a %= ell_;
  if (a == 0) throw UsageError("inverse of zero in F_" + std::to_string(ell_));
  return pow(a, ell_ - 2);
}

}  // namespace gspc
