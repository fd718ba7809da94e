// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>

namespace gspc {

// Counter-mode generator built on the splitmix64 finalizer.  Output i of
// stream s under seed x is mix(key(x, s) + i * GAMMA); streams never share
// state, so shard j of a sampling job can always use stream j and the
// result is independent of how shards are assigned to threads.  Not
// cryptographic; chosen for reproducibility across platforms and runs.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key_(stream_key(seed, stream)) {}

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static uint64_t stream_key(uint64_t seed, uint64_t stream) {
    return mix(seed + stream * 0xC2B2AE3D27D4EB4Full);
  }

  uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ull;
    return mix(key_ + counter_);
  }

  // Exactly uniform draw from [0, m) by rejection; m must be positive.
  uint64_t next_below(uint64_t m);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace gspc
