// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "rng.hpp"

#include "errors.hpp"

namespace gspc {

uint64_t CounterRng::next_below(uint64_t m) {
  if (m == 0) throw UsageError("draw from empty range");
  // Reject the partial block at the top of the 64-bit range so every
  // residue is hit by the same number of raw values: accept x in
  // [0, 2^64 - (2^64 mod m)).
  uint64_t rem = (0 - m) % m;  // 2^64 mod m via wraparound
  for (;;) {
    uint64_t x = next_u64();
    if (rem == 0 || x < 0 - rem) return x % m;
  }
}

}  // namespace gspc
