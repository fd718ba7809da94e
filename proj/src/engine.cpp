// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "engine.hpp"

#include <charconv>
#include <functional>
#include <set>
#include <string>

#include "brute.hpp"
#include "census.hpp"
#include "curves.hpp"
#include "errors.hpp"
#include "orders.hpp"
#include "xi.hpp"

namespace gspc {

namespace {

uint64_t parse_u64(const std::string& key, const std::string& value) {
  uint64_t v = 0;
  const char* b = value.data();
  const char* e = b + value.size();
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e || value.empty()) {
    throw UsageError("param " + key + " must be a nonnegative integer, got '" +
                     value + "'");
  }
  return v;
}

// Tracks which params a command consumed so typos surface as errors
// instead of being ignored.
class ParamReader {
 public:
  explicit ParamReader(const Command& cmd) : cmd_(cmd) {}

  bool has(const std::string& key) const { return cmd_.params.count(key) > 0; }

  uint64_t u64(const std::string& key) {
    auto it = cmd_.params.find(key);
    if (it == cmd_.params.end()) throw UsageError("missing param " + key);
    used_.insert(key);
    return parse_u64(key, it->second);
  }

  uint64_t u64_or(const std::string& key, uint64_t def) {
    if (!has(key)) return def;
    return u64(key);
  }

  bool flag_or(const std::string& key, bool def) {
    auto it = cmd_.params.find(key);
    if (it == cmd_.params.end()) return def;
    used_.insert(key);
    if (it->second == "1" || it->second == "true") return true;
    if (it->second == "0" || it->second == "false") return false;
    throw UsageError("param " + key + " must be 0 or 1");
  }

  std::string str(const std::string& key) {
    auto it = cmd_.params.find(key);
    if (it == cmd_.params.end()) throw UsageError("missing param " + key);
    used_.insert(key);
    return it->second;
  }

  void finish() const {
    for (const auto& [k, v] : cmd_.params) {
      if (!used_.count(k)) throw UsageError("unknown param " + k);
    }
  }

 private:
  const Command& cmd_;
  std::set<std::string> used_;
};

PropertyTag parse_prop_or_throw(const std::string& s) {
  auto tag = parse_property(s);
  if (!tag) throw UsageError("unknown property '" + s + "' (use E, N, R, Rproof)");
  return *tag;
}

struct Prepared {
  std::map<std::string, std::string> params;
  std::function<void(Record&)> compute;
};

std::string dec(uint64_t v) { return std::to_string(v); }

std::string bracket(const std::string& base, const std::string& inner) {
  return base + "[" + inner + "]";
}

Prepared prep_census_exact(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  bool all_gamma = p.flag_or("all_gamma", false);
  uint64_t gamma = 0;
  if (all_gamma) {
    out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"all_gamma", "1"}};
  } else {
    gamma = p.u64("gamma");
    out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"gamma", dec(gamma)}};
  }
  p.finish();
  validate_census_params(g, all_gamma ? 1 : gamma, ell);
  out.compute = [=](Record& r) {
    r.exact_counts["sp_order"] = sp_order(g, ell);
    r.provenance["sp_order"] = "formula";
    r.exact_counts["gsp_order"] = gsp_order(g, ell);
    r.provenance["gsp_order"] = "formula";
    if (!all_gamma) {
      EigenCensus c = eigen_census(g, gamma, ell);
      for (unsigned k = 1; k <= g; ++k) {
        std::string name = bracket("S", "r=" + dec(k));
        r.exact_counts[name] = c.s_values[k - 1];
        r.provenance[name] = "formula";
      }
      r.exact_counts["T"] = c.t_value;
      r.provenance["T"] = "formula";
      r.exact_ratios["proportion"] = c.proportion;
      r.provenance["proportion"] = "formula";
      r.exact_ratios["tau"] = c.tau_value;
      r.provenance["tau"] = "formula";
      r.exact_ratios["eigenone_deviation"] = c.deviation;
      r.provenance["eigenone_deviation"] = "formula";
      return;
    }
    mpz_class t_off;  // common value of T off the identity coset
    bool t_off_set = false;
    for (uint64_t gm = 1; gm < ell; ++gm) {
      EigenCensus c = eigen_census(g, gm, ell);
      std::string suffix = "gamma=" + dec(gm);
      r.exact_counts[bracket("T", suffix)] = c.t_value;
      r.provenance[bracket("T", suffix)] = "formula";
      r.exact_ratios[bracket("proportion", suffix)] = c.proportion;
      r.provenance[bracket("proportion", suffix)] = "formula";
      r.exact_ratios[bracket("tau", suffix)] = c.tau_value;
      r.provenance[bracket("tau", suffix)] = "formula";
      r.exact_ratios[bracket("eigenone_deviation", suffix)] = c.deviation;
      r.provenance[bracket("eigenone_deviation", suffix)] = "formula";
      if (gm != 1) {
        if (t_off_set && c.t_value != t_off) {
          throw InternalError("eigenvalue-one count varies across nonidentity cosets");
        }
        t_off = c.t_value;
        t_off_set = true;
      }
    }
  };
  return out;
}

Prepared prep_census_sweep(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell_max = p.u64("ell_max");
  p.finish();
  if (g == 0) throw UsageError("genus must be positive");
  if (ell_max < 2) throw UsageError("ell_max must be at least 2");
  out.params = {{"g", dec(g)}, {"ell_max", dec(ell_max)}};
  out.compute = [=](Record& r) {
    mpq_class max1 = 0, max2 = 0;
    uint64_t n_primes = 0;
    for (uint64_t ell : primes_up_to(ell_max)) {
      ++n_primes;
      mpq_class d1 = eigenone_deviation(g, 1, ell);
      std::string n1 = bracket("eigenone_deviation", "ell=" + dec(ell) + ",gamma=1");
      r.exact_ratios[n1] = d1;
      r.provenance[n1] = "formula";
      if (d1 > max1) max1 = d1;
      if (ell < 3) continue;
      mpq_class d2 = eigenone_deviation(g, 2, ell);
      std::string n2 = bracket("eigenone_deviation", "ell=" + dec(ell) + ",gamma=2");
      r.exact_ratios[n2] = d2;
      r.provenance[n2] = "formula";
      if (d2 > max2) max2 = d2;
      // The count must not depend on which nonidentity coset is used.
      if (ell >= 5 && t_count(g, 2, ell) != t_count(g, 3, ell)) {
        throw InternalError("eigenvalue-one count varies across nonidentity cosets");
      }
    }
    r.exact_counts["num_primes"] = n_primes;
    r.provenance["num_primes"] = "formula";
    r.exact_ratios[bracket("max_deviation", "gamma=1")] = max1;
    r.provenance[bracket("max_deviation", "gamma=1")] = "formula";
    r.exact_ratios[bracket("max_deviation", "gamma!=1")] = max2;
    r.provenance[bracket("max_deviation", "gamma!=1")] = "formula";
  };
  return out;
}

Prepared prep_brute_count(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  PropertyTag tag = parse_prop_or_throw(p.str("prop"));
  uint64_t budget = p.u64_or("budget", kDefaultBudget);
  p.finish();
  validate_census_params(g, gamma, ell);
  out.params = {{"g", dec(g)},       {"ell", dec(ell)},
                {"gamma", dec(gamma)}, {"prop", property_name(tag)},
                {"budget", dec(budget)}};
  out.compute = [=](Record& r) {
    Fq F(ell);
    BruteCensus bc = count_brute(F, g, gamma, tag, budget);
    r.exact_counts["W"] = bc.w_count;
    r.provenance["W"] = "brute";
    r.exact_counts["coset_size"] = bc.coset_size;
    r.provenance["coset_size"] = "brute";
    r.exact_ratios["proportion"] =
        mpq_class(static_cast<unsigned long>(bc.w_count)) /
        mpq_class(static_cast<unsigned long>(bc.coset_size));
    r.provenance["proportion"] = "brute";
  };
  return out;
}

Prepared prep_brute_delta(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  uint64_t budget = p.u64_or("budget", kDefaultBudget);
  p.finish();
  validate_census_params(g, gamma, ell);
  out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"gamma", dec(gamma)},
                {"budget", dec(budget)}};
  out.compute = [=](Record& r) {
    Fq F(ell);
    BruteCensus bc = count_brute(F, g, gamma, PropertyTag::E, budget);
    r.exact_counts["coset_size"] = bc.coset_size;
    r.provenance["coset_size"] = "brute";
    for (const auto& [f, n] : bc.delta) {
      std::string name = bracket("delta", poly_to_string(f));
      r.exact_counts[name] = n;
      r.provenance[name] = "brute";
    }
  };
  return out;
}

Prepared prep_sample(const Command& cmd, const ExecOptions& opts) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  PropertyTag tag = parse_prop_or_throw(p.str("prop"));
  uint64_t n = p.u64("n");
  uint64_t seed = p.u64("seed");
  p.finish();
  validate_census_params(g, gamma, ell);
  if (n == 0) throw UsageError("sample count must be positive");
  out.params = {{"g", dec(g)},     {"ell", dec(ell)}, {"gamma", dec(gamma)},
                {"prop", property_name(tag)}, {"n", dec(n)},     {"seed", dec(seed)}};
  unsigned threads = opts.threads;
  out.compute = [=](Record& r) {
    Fq F(ell);
    SampleReport sr = montecarlo(F, g, gamma, tag, n, seed, threads);
    EstimateEntry e;
    e.tag = property_name(tag);
    e.n_samples = sr.n_samples;
    e.hits = sr.hits;
    e.estimate = sr.estimate;
    e.stderr_est = sr.stderr_est;
    e.seed = sr.seed;
    r.estimates.push_back(e);
    r.provenance[std::string(property_name(tag)) + "_estimate"] = "montecarlo";
  };
  return out;
}

Prepared prep_charpoly_enum(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  uint64_t budget = p.u64_or("budget", kDefaultBudget);
  p.finish();
  validate_census_params(g, gamma, ell);
  out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"gamma", dec(gamma)},
                {"budget", dec(budget)}};
  out.compute = [=](Record& r) {
    Fq F(ell);
    uint64_t size = xi_enumerate(F, g, gamma, budget,
                                 [&](const XiPoint&, const Poly& f) {
                                   std::string name = bracket("xi", poly_to_string(f));
                                   r.exact_counts[name] = 1;
                                   r.provenance[name] = "formula";
                                 });
    r.exact_counts["xi_size"] = size;
    r.provenance["xi_size"] = "formula";
    if (mpz_class(static_cast<unsigned long>(size)) != pow_ui(ell, g)) {
      throw InternalError("coefficient space size differs from ell^g");
    }
  };
  return out;
}

Prepared prep_charpoly_count(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  PropertyTag tag = parse_prop_or_throw(p.str("prop"));
  bool raw_literal = p.flag_or("raw_literal", false);
  uint64_t budget = p.u64_or("budget", kDefaultBudget);
  p.finish();
  validate_census_params(g, gamma, ell);
  out.params = {{"g", dec(g)},
                {"ell", dec(ell)},
                {"gamma", dec(gamma)},
                {"prop", property_name(tag)},
                {"raw_literal", raw_literal ? "1" : "0"},
                {"budget", dec(budget)}};
  out.compute = [=](Record& r) {
    Fq F(ell);
    mpz_class psi = psi_count(F, g, gamma, tag, raw_literal, budget);
    r.exact_counts["psi"] = psi;
    r.provenance["psi"] = "brute";
    r.exact_counts["xi_size"] = pow_ui(ell, g);
    r.provenance["xi_size"] = "formula";
    r.exact_ratios["psi_fraction"] = mpq_class(psi) / mpq_class(pow_ui(ell, g));
    r.provenance["psi_fraction"] = "brute";
  };
  return out;
}

Prepared prep_bounds_psitow(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  uint64_t psi = p.u64("psi");
  p.finish();
  out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"psi", dec(psi)}};
  out.compute = [=](Record& r) {
    auto [lo, hi] = psitow_bounds(mpz_class(static_cast<unsigned long>(psi)), g, ell);
    r.exact_ratios["lower"] = lo;
    r.provenance["lower"] = "formula";
    r.exact_ratios["upper"] = hi;
    r.provenance["upper"] = "formula";
  };
  return out;
}

Prepared prep_bounds_delta(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t ell = p.u64("ell");
  p.finish();
  out.params = {{"g", dec(g)}, {"ell", dec(ell)}};
  out.compute = [=](Record& r) {
    auto [lo, hi] = delta_bounds(g, ell);
    r.exact_ratios["delta_lower"] = lo;
    r.provenance["delta_lower"] = "formula";
    r.exact_ratios["delta_upper"] = hi;
    r.provenance["delta_upper"] = "formula";
  };
  return out;
}

Prepared prep_bounds_eigenweird(const Command& cmd, const ExecOptions&) {
  ParamReader p(cmd);
  Prepared out;
  unsigned g = static_cast<unsigned>(p.u64("g"));
  uint64_t budget = p.u64_or("budget", kDefaultBudget);
  bool sweep = p.has("ell_max");
  if (sweep) {
    uint64_t ell_max = p.u64("ell_max");
    p.finish();
    if (g == 0) throw UsageError("genus must be positive");
    if (ell_max < 3) throw UsageError("ell_max must be at least 3");
    out.params = {{"g", dec(g)}, {"ell_max", dec(ell_max)}, {"budget", dec(budget)}};
    out.compute = [=](Record& r) {
      // Per prime the coset farthest from the identity one, gamma = ell - 1.
      mpq_class cmax = 0;
      for (uint64_t ell : primes_up_to(ell_max)) {
        if (ell < 3) continue;
        Fq F(ell);
        mpq_class c = eigenweird_constant(F, g, ell - 1, budget);
        std::string name = bracket("C", "ell=" + dec(ell));
        r.exact_ratios[name] = c;
        r.provenance[name] = "brute";
        if (c > cmax) cmax = c;
      }
      r.exact_ratios["C_max"] = cmax;
      r.provenance["C_max"] = "brute";
    };
    return out;
  }
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  p.finish();
  validate_census_params(g, gamma, ell);
  out.params = {{"g", dec(g)}, {"ell", dec(ell)}, {"gamma", dec(gamma)},
                {"budget", dec(budget)}};
  out.compute = [=](Record& r) {
    Fq F(ell);
    mpz_class raw = psi_count(F, g, gamma, PropertyTag::RLiteral, true, budget);
    r.exact_counts["psi_r_raw"] = raw;
    r.provenance["psi_r_raw"] = "brute";
    r.exact_ratios["C"] = eigenweird_constant(F, g, gamma, budget);
    r.provenance["C"] = "brute";
  };
  return out;
}

Prepared prep_curves_scan(const Command& cmd, const ExecOptions& opts) {
  ParamReader p(cmd);
  Prepared out;
  uint64_t q = p.u64("q");
  uint64_t ell = p.u64("ell");
  p.finish();
  out.params = {{"q", dec(q)}, {"ell", dec(ell)}};
  unsigned threads = opts.threads;
  out.compute = [=](Record& r) {
    ScanReport sr = scan(q, ell, threads);
    r.exact_counts["gamma"] = sr.gamma;
    r.provenance["gamma"] = "formula";
    r.exact_counts["curves_scanned"] = sr.scanned;
    r.provenance["curves_scanned"] = "scan";
    r.exact_counts["singular_pairs"] = sr.singular;
    r.provenance["singular_pairs"] = "scan";
    for (const auto& [tag, st] : sr.tags) {
      r.exact_counts[bracket("hits", tag)] = st.hits;
      r.provenance[bracket("hits", tag)] = "scan";
      r.exact_ratios[bracket("freq", tag)] = st.freq;
      r.provenance[bracket("freq", tag)] = "scan";
      r.exact_ratios[bracket("target", tag)] = st.target;
      r.provenance[bracket("target", tag)] = tag == "R" ? "brute" : "formula";
      r.exact_ratios[bracket("deviation", tag)] = st.deviation;
      r.provenance[bracket("deviation", tag)] = "scan";
    }
  };
  return out;
}

Prepared prep_curves_envelope(const Command& cmd, const ExecOptions& opts) {
  ParamReader p(cmd);
  Prepared out;
  uint64_t ell = p.u64("ell");
  uint64_t gamma = p.u64("gamma");
  uint64_t q_max = p.u64("q_max");
  p.finish();
  out.params = {{"ell", dec(ell)}, {"gamma", dec(gamma)}, {"q_max", dec(q_max)}};
  unsigned threads = opts.threads;
  out.compute = [=](Record& r) {
    auto qs = envelope_default_qs(ell, gamma, q_max);
    EnvelopeReport er = envelope_fit(ell, gamma, qs, threads);
    r.exact_counts["num_primes"] = static_cast<unsigned long>(er.points.size());
    r.provenance["num_primes"] = "scan";
    for (const auto& pt : er.points) {
      std::string name = bracket("deviation", "q=" + dec(pt.q));
      r.exact_ratios[name] = pt.deviation;
      r.provenance[name] = "scan";
    }
    r.exact_ratios["envelope_sq"] = er.max_sq;
    r.provenance["envelope_sq"] = "scan";
    r.exact_ratios["first_half_max_sq"] = er.first_half_max_sq;
    r.provenance["first_half_max_sq"] = "scan";
    r.exact_ratios["second_half_max_sq"] = er.second_half_max_sq;
    r.provenance["second_half_max_sq"] = "scan";
  };
  return out;
}

Prepared prepare(const Command& cmd, const ExecOptions& opts) {
  if (cmd.name == "census exact") return prep_census_exact(cmd, opts);
  if (cmd.name == "census sweep") return prep_census_sweep(cmd, opts);
  if (cmd.name == "brute count") return prep_brute_count(cmd, opts);
  if (cmd.name == "brute delta") return prep_brute_delta(cmd, opts);
  if (cmd.name == "sample") return prep_sample(cmd, opts);
  if (cmd.name == "charpoly enum") return prep_charpoly_enum(cmd, opts);
  if (cmd.name == "charpoly count") return prep_charpoly_count(cmd, opts);
  if (cmd.name == "bounds psitow") return prep_bounds_psitow(cmd, opts);
  if (cmd.name == "bounds delta") return prep_bounds_delta(cmd, opts);
  if (cmd.name == "bounds eigenweird") return prep_bounds_eigenweird(cmd, opts);
  if (cmd.name == "curves scan") return prep_curves_scan(cmd, opts);
  if (cmd.name == "curves envelope") return prep_curves_envelope(cmd, opts);
  throw UsageError("unknown command '" + cmd.name + "'");
}

}  // namespace

Record run_command(const Command& cmd, const ExecOptions& opts) {
  Prepared prep = prepare(cmd, opts);
  if (opts.cache_dir) {
    auto hit = cache_lookup(*opts.cache_dir, cmd.name, prep.params);
    if (hit) return *hit;
  }
  Record r;
  r.command = cmd.name;
  r.params = prep.params;
  r.timestamp = utc_timestamp_now();
  prep.compute(r);
  if (opts.cache_dir) cache_store(*opts.cache_dir, r);
  return r;
}

}  // namespace gspc
