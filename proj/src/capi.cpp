// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "gspcensus/gsp_census.h"

#include <new>
#include <string>

#include "brute.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "record.hpp"

struct gspc_record {
  gspc::Record rec;
  std::string json;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs a command, converting exceptions into status codes; on success the
// record handle owns its serialized forms.
int run_to_handle(const gspc::Command& cmd, unsigned threads,
                  const char* cache_dir, gspc_record** out) {
  if (out == nullptr) {
    set_error("output handle pointer is NULL");
    return GSPC_ERR_USAGE;
  }
  *out = nullptr;
  try {
    gspc::ExecOptions opts;
    opts.threads = threads;
    if (cache_dir != nullptr) opts.cache_dir = std::string(cache_dir);
    gspc::Record rec = gspc::run_command(cmd, opts);
    auto* handle = new gspc_record;
    handle->rec = std::move(rec);
    handle->json = gspc::record_to_json(handle->rec);
    handle->csv = gspc::record_to_csv(handle->rec);
    *out = handle;
    return GSPC_OK;
  } catch (const gspc::UsageError& e) {
    set_error(e.what());
    return GSPC_ERR_USAGE;
  } catch (const gspc::BudgetError& e) {
    set_error(e.what());
    return GSPC_ERR_BUDGET;
  } catch (const gspc::InternalError& e) {
    set_error(e.what());
    return GSPC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GSPC_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return GSPC_ERR_INTERNAL;
  }
}

std::string dec(uint64_t v) { return std::to_string(v); }

}  // namespace

extern "C" {

const char* gspc_version(void) { return gspc::kToolVersion; }

const char* gspc_last_error(void) { return g_last_error.c_str(); }

uint64_t gspc_default_budget(void) { return gspc::kDefaultBudget; }

int gspc_census_exact(uint32_t g, uint64_t ell, uint64_t gamma, int all_gamma,
                      const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "census exact";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  if (all_gamma) {
    cmd.params["all_gamma"] = "1";
  } else {
    cmd.params["gamma"] = dec(gamma);
  }
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_census_sweep(uint32_t g, uint64_t ell_max, const char* cache_dir,
                      gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "census sweep";
  cmd.params["g"] = dec(g);
  cmd.params["ell_max"] = dec(ell_max);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_brute_count(uint32_t g, uint64_t ell, uint64_t gamma, const char* prop,
                     uint64_t budget, const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "brute count";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["prop"] = prop ? prop : "";
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_brute_delta(uint32_t g, uint64_t ell, uint64_t gamma, uint64_t budget,
                     const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "brute delta";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_sample(uint32_t g, uint64_t ell, uint64_t gamma, const char* prop,
                uint64_t n, uint64_t seed, uint32_t threads,
                const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "sample";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["prop"] = prop ? prop : "";
  cmd.params["n"] = dec(n);
  cmd.params["seed"] = dec(seed);
  return run_to_handle(cmd, threads, cache_dir, out);
}

int gspc_charpoly_enum(uint32_t g, uint64_t ell, uint64_t gamma, uint64_t budget,
                       const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "charpoly enum";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_charpoly_count(uint32_t g, uint64_t ell, uint64_t gamma, const char* prop,
                        int raw_literal, uint64_t budget, const char* cache_dir,
                        gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "charpoly count";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["prop"] = prop ? prop : "";
  cmd.params["raw_literal"] = raw_literal ? "1" : "0";
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_bounds_psitow(uint32_t g, uint64_t ell, uint64_t psi,
                       const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "bounds psitow";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["psi"] = dec(psi);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_bounds_delta(uint32_t g, uint64_t ell, const char* cache_dir,
                      gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "bounds delta";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_bounds_eigenweird(uint32_t g, uint64_t ell, uint64_t gamma,
                           uint64_t budget, const char* cache_dir,
                           gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "bounds eigenweird";
  cmd.params["g"] = dec(g);
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_bounds_eigenweird_sweep(uint32_t g, uint64_t ell_max, uint64_t budget,
                                 const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "bounds eigenweird";
  cmd.params["g"] = dec(g);
  cmd.params["ell_max"] = dec(ell_max);
  cmd.params["budget"] = dec(budget);
  return run_to_handle(cmd, 1, cache_dir, out);
}

int gspc_curves_scan(uint64_t q, uint64_t ell, uint32_t threads,
                     const char* cache_dir, gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "curves scan";
  cmd.params["q"] = dec(q);
  cmd.params["ell"] = dec(ell);
  return run_to_handle(cmd, threads, cache_dir, out);
}

int gspc_curves_envelope(uint64_t ell, uint64_t gamma, uint64_t q_max,
                         uint32_t threads, const char* cache_dir,
                         gspc_record** out) {
  gspc::Command cmd;
  cmd.name = "curves envelope";
  cmd.params["ell"] = dec(ell);
  cmd.params["gamma"] = dec(gamma);
  cmd.params["q_max"] = dec(q_max);
  return run_to_handle(cmd, threads, cache_dir, out);
}

const char* gspc_record_json(const gspc_record* rec) {
  return rec ? rec->json.c_str() : nullptr;
}

const char* gspc_record_csv(const gspc_record* rec) {
  return rec ? rec->csv.c_str() : nullptr;
}

gspc_record* gspc_record_parse(const char* json_text) {
  if (json_text == nullptr) {
    set_error("input is NULL");
    return nullptr;
  }
  try {
    auto rec = gspc::record_from_json(json_text);
    if (!rec) {
      set_error("malformed record document");
      return nullptr;
    }
    auto* handle = new gspc_record;
    handle->rec = std::move(*rec);
    handle->json = gspc::record_to_json(handle->rec);
    handle->csv = gspc::record_to_csv(handle->rec);
    return handle;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

void gspc_record_free(gspc_record* rec) { delete rec; }

}  // extern "C"
