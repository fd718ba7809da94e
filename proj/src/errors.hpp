// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace gspc {

// Bad input from the caller: non-prime field order, gamma out of range,
// a domain error such as inverting zero.  Maps to exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive operation whose cost exceeds the caller's budget.  The
// message carries the estimated cost so the caller can decide whether to
// raise the budget.  Maps to exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant: a division that had to be exact was not,
// two formulas that must agree disagreed.  Never caused by user input.
// Maps to exit code 4.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gspc
