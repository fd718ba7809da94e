// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gspc {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct EstimateEntry {
  std::string tag;
  uint64_t n_samples = 0;
  uint64_t hits = 0;
  double estimate = 0.0;
  double stderr_est = 0.0;
  uint64_t seed = 0;

  bool operator==(const EstimateEntry&) const = default;
};

// One result document.  Exact integers are serialized as decimal strings
// (they routinely exceed 2^64), ratios as {"num", "den"} string pairs.
// provenance records how each named quantity was obtained: "formula",
// "brute", "montecarlo" or "scan".  command plus params reproduce the run.
struct Record {
  int schema_version = kSchemaVersion;
  std::string command;
  std::map<std::string, std::string> params;
  std::map<std::string, mpz_class> exact_counts;
  std::map<std::string, mpq_class> exact_ratios;
  std::vector<EstimateEntry> estimates;
  std::map<std::string, std::string> provenance;
  std::string timestamp;
  std::string tool_version = kToolVersion;

  bool operator==(const Record&) const = default;
};

std::string utc_timestamp_now();

std::string record_to_json(const Record& r);

// Strict parse; nullopt on malformed or wrong-schema input.
std::optional<Record> record_from_json(const std::string& text);

// Flat table, one row per named quantity:
//   command,params,name,num,den,provenance
// params is the canonical "k=v k=v" string.  Estimates appear as
// <tag>_estimate rows with hits/n_samples as the exact ratio.
std::string record_to_csv(const Record& r);

// Canonical identity of a run: command plus sorted params.
std::string cache_key(const std::string& command,
                      const std::map<std::string, std::string>& params);

// Both return false (lookup: nullopt) on any miss: absent file, unparsable
// file, schema or key mismatch.  Corrupt entries are reported on stderr
// and treated as misses.  Stores go through a temp file and an atomic
// rename, so concurrent writers never expose a partial entry.
std::optional<Record> cache_lookup(const std::string& dir, const std::string& command,
                                   const std::map<std::string, std::string>& params);
bool cache_store(const std::string& dir, const Record& r);

}  // namespace gspc
