// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "record.hpp"

namespace gspc {

// A run request in canonical form.  Params are decimal strings (flags are
// "0"/"1"); the same command and params always produce the same named
// quantities, which is what makes records cacheable and reproducible.
// Execution details that cannot change any value (thread count) are
// passed separately and never recorded.
struct Command {
  std::string name;
  std::map<std::string, std::string> params;
};

struct ExecOptions {
  unsigned threads = 1;
  std::optional<std::string> cache_dir;  // nullopt disables the cache
};

// Dispatches to the census, enumeration, sampling, bound and curve-scan
// operations.  Throws UsageError on unknown commands or bad params.
Record run_command(const Command& cmd, const ExecOptions& opts);

}  // namespace gspc
