// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Command line front end.  Every subcommand maps to exactly one library
// call; stdout carries exactly one JSON document (or one CSV table with
// --csv) and diagnostics go to stderr.  Exit codes: 0 success, 2 usage,
// 3 budget refusal, 4 internal inconsistency.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gspcensus/gsp_census.h"

namespace {

struct GlobalOpts {
  bool csv = false;
  bool no_cache = false;
  std::string cache_dir;
  uint32_t threads = 0;  // 0 = hardware count
};

const char* cache_dir_or_null(const GlobalOpts& g) {
  if (g.no_cache || g.cache_dir.empty()) return nullptr;
  return g.cache_dir.c_str();
}

int emit(const GlobalOpts& g, int status, gspc_record* rec) {
  if (status != GSPC_OK) {
    std::cerr << "error: " << gspc_last_error() << "\n";
    return status;
  }
  std::cout << (g.csv ? gspc_record_csv(rec) : gspc_record_json(rec));
  if (!g.csv) std::cout << "\n";
  gspc_record_free(rec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census engine for symplectic similitude groups over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gspc_version()));

  GlobalOpts g;
  app.add_flag("--csv", g.csv, "Emit a flat CSV table instead of JSON");
  app.add_option("--cache-dir", g.cache_dir, "Record cache directory")
      ->envname("GSP_CENSUS_CACHE");
  app.add_flag("--no-cache", g.no_cache, "Bypass the record cache");
  app.add_option("--threads", g.threads,
                 "Worker threads (0 = hardware count); never changes results");

  uint64_t arg_g = 0, arg_ell = 0, arg_gamma = 0, arg_psi = 0;
  uint64_t arg_ell_max = 0, arg_q = 0, arg_q_max = 0;
  uint64_t arg_n = 0, arg_seed = 0;
  uint64_t arg_budget = gspc_default_budget();
  std::string arg_prop;
  bool arg_all_gamma = false, arg_raw_literal = false;

  int rc = 0;
  gspc_record* rec = nullptr;

  auto* census = app.add_subcommand("census", "Exact eigenvalue-one counts");
  auto* census_exact = census->add_subcommand("exact", "Census of one coset");
  census_exact->add_option("--g", arg_g, "Genus")->required();
  census_exact->add_option("--ell", arg_ell, "Field order (prime)")->required();
  census_exact->add_option("--gamma", arg_gamma, "Coset multiplier");
  census_exact->add_flag("--all-gamma", arg_all_gamma, "Sweep every coset");
  census_exact->callback([&]() {
    if (!arg_all_gamma && census_exact->count("--gamma") == 0) {
      throw CLI::RequiredError("--gamma (or --all-gamma)");
    }
    rc = gspc_census_exact(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                           arg_all_gamma ? 1 : 0, cache_dir_or_null(g), &rec);
  });

  auto* census_sweep =
      census->add_subcommand("sweep", "Deviation certificates over primes");
  census_sweep->add_option("--g", arg_g, "Genus")->required();
  census_sweep->add_option("--ell-max", arg_ell_max, "Largest prime")->required();
  census_sweep->callback([&]() {
    rc = gspc_census_sweep(static_cast<uint32_t>(arg_g), arg_ell_max,
                           cache_dir_or_null(g), &rec);
  });

  auto* brute = app.add_subcommand("brute", "Exhaustive coset enumeration");
  auto* brute_count = brute->add_subcommand("count", "Count a property");
  brute_count->add_option("--g", arg_g, "Genus")->required();
  brute_count->add_option("--ell", arg_ell, "Field order (prime)")->required();
  brute_count->add_option("--gamma", arg_gamma, "Coset multiplier")->required();
  brute_count->add_option("--prop", arg_prop, "Property: E, N, R, Rproof")->required();
  brute_count->add_option("--budget", arg_budget, "Element budget");
  brute_count->callback([&]() {
    rc = gspc_brute_count(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                          arg_prop.c_str(), arg_budget, cache_dir_or_null(g), &rec);
  });

  auto* brute_delta = brute->add_subcommand("delta", "Fiber histogram");
  brute_delta->add_option("--g", arg_g, "Genus")->required();
  brute_delta->add_option("--ell", arg_ell, "Field order (prime)")->required();
  brute_delta->add_option("--gamma", arg_gamma, "Coset multiplier")->required();
  brute_delta->add_option("--budget", arg_budget, "Element budget");
  brute_delta->callback([&]() {
    rc = gspc_brute_delta(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                          arg_budget, cache_dir_or_null(g), &rec);
  });

  auto* sample = app.add_subcommand("sample", "Monte Carlo property estimate");
  sample->add_option("--g", arg_g, "Genus")->required();
  sample->add_option("--ell", arg_ell, "Field order (prime)")->required();
  sample->add_option("--gamma", arg_gamma, "Coset multiplier")->required();
  sample->add_option("--prop", arg_prop, "Property: E, N, R, Rproof")->required();
  sample->add_option("--n", arg_n, "Sample count")->required();
  sample->add_option("--seed", arg_seed, "RNG seed")->required();
  sample->callback([&]() {
    rc = gspc_sample(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                     arg_prop.c_str(), arg_n, arg_seed, g.threads,
                     cache_dir_or_null(g), &rec);
  });

  auto* charpoly =
      app.add_subcommand("charpoly", "Characteristic polynomial space");
  auto* charpoly_enum = charpoly->add_subcommand("enum", "List the space");
  charpoly_enum->add_option("--g", arg_g, "Genus")->required();
  charpoly_enum->add_option("--ell", arg_ell, "Field order (prime)")->required();
  charpoly_enum->add_option("--gamma", arg_gamma, "Coset multiplier")->required();
  charpoly_enum->add_option("--budget", arg_budget, "Point budget");
  charpoly_enum->callback([&]() {
    rc = gspc_charpoly_enum(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                            arg_budget, cache_dir_or_null(g), &rec);
  });

  auto* charpoly_count = charpoly->add_subcommand("count", "Count a property");
  charpoly_count->add_option("--g", arg_g, "Genus")->required();
  charpoly_count->add_option("--ell", arg_ell, "Field order (prime)")->required();
  charpoly_count->add_option("--gamma", arg_gamma, "Coset multiplier")->required();
  charpoly_count->add_option("--prop", arg_prop, "Property: E, N, R, Rproof")->required();
  charpoly_count->add_flag("--raw-literal", arg_raw_literal,
                           "Literal root-pairing count on the identity coset");
  charpoly_count->add_option("--budget", arg_budget, "Point budget");
  charpoly_count->callback([&]() {
    rc = gspc_charpoly_count(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                             arg_prop.c_str(), arg_raw_literal ? 1 : 0, arg_budget,
                             cache_dir_or_null(g), &rec);
  });

  auto* bounds = app.add_subcommand("bounds", "Closed-form sandwiches");
  auto* bounds_psitow =
      bounds->add_subcommand("psitow", "Proportion bounds from a polynomial count");
  bounds_psitow->add_option("--g", arg_g, "Genus")->required();
  bounds_psitow->add_option("--ell", arg_ell, "Field order (prime)")->required();
  bounds_psitow->add_option("--psi", arg_psi, "Polynomial count")->required();
  bounds_psitow->callback([&]() {
    rc = gspc_bounds_psitow(static_cast<uint32_t>(arg_g), arg_ell, arg_psi,
                            cache_dir_or_null(g), &rec);
  });

  auto* bounds_delta = bounds->add_subcommand("delta", "Fiber size bounds");
  bounds_delta->add_option("--g", arg_g, "Genus")->required();
  bounds_delta->add_option("--ell", arg_ell, "Field order (prime)")->required();
  bounds_delta->callback([&]() {
    rc = gspc_bounds_delta(static_cast<uint32_t>(arg_g), arg_ell,
                           cache_dir_or_null(g), &rec);
  });

  auto* bounds_ew =
      bounds->add_subcommand("eigenweird", "Root-pairing defect constant");
  bounds_ew->add_option("--g", arg_g, "Genus")->required();
  bounds_ew->add_option("--ell", arg_ell, "Field order (prime)");
  bounds_ew->add_option("--gamma", arg_gamma, "Coset multiplier");
  bounds_ew->add_option("--ell-max", arg_ell_max, "Sweep primes up to this");
  bounds_ew->add_option("--budget", arg_budget, "Point budget");
  bounds_ew->callback([&]() {
    if (bounds_ew->count("--ell-max") > 0) {
      rc = gspc_bounds_eigenweird_sweep(static_cast<uint32_t>(arg_g), arg_ell_max,
                                        arg_budget, cache_dir_or_null(g), &rec);
    } else {
      if (bounds_ew->count("--ell") == 0 || bounds_ew->count("--gamma") == 0) {
        throw CLI::RequiredError("--ell and --gamma (or --ell-max)");
      }
      rc = gspc_bounds_eigenweird(static_cast<uint32_t>(arg_g), arg_ell, arg_gamma,
                                  arg_budget, cache_dir_or_null(g), &rec);
    }
  });

  auto* curves = app.add_subcommand("curves", "Elliptic curve Frobenius statistics");
  auto* curves_scan = curves->add_subcommand("scan", "Scan one base field");
  curves_scan->add_option("--q", arg_q, "Base field order (odd prime)")->required();
  curves_scan->add_option("--ell", arg_ell, "Reduction prime")->required();
  curves_scan->callback([&]() {
    rc = gspc_curves_scan(arg_q, arg_ell, g.threads, cache_dir_or_null(g), &rec);
  });

  auto* curves_env = curves->add_subcommand("envelope", "Deviation envelope fit");
  curves_env->add_option("--ell", arg_ell, "Reduction prime")->required();
  curves_env->add_option("--gamma", arg_gamma, "Residue class of q mod ell")->required();
  curves_env->add_option("--q-max", arg_q_max, "Largest base prime")->required();
  curves_env->callback([&]() {
    rc = gspc_curves_envelope(arg_ell, arg_gamma, arg_q_max, g.threads,
                              cache_dir_or_null(g), &rec);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return GSPC_ERR_USAGE;
  }

  if (rc != 0) return emit(g, rc, nullptr);
  return emit(g, rc, rec);
}
