// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "record.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace gspc {

std::string utc_timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json ratio_to_json(const mpq_class& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::optional<mpq_class> ratio_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) return std::nullopt;
  if (!j["num"].is_string() || !j["den"].is_string()) return std::nullopt;
  mpz_class num, den;
  if (num.set_str(j["num"].get<std::string>(), 10) != 0) return std::nullopt;
  if (den.set_str(j["den"].get<std::string>(), 10) != 0) return std::nullopt;
  if (den == 0) return std::nullopt;
  mpq_class q(num);
  q /= mpq_class(den);
  return q;
}

}  // namespace

std::string record_to_json(const Record& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["params"] = r.params;
  json counts = json::object();
  for (const auto& [k, v] : r.exact_counts) counts[k] = v.get_str();
  j["exact_counts"] = counts;
  json ratios = json::object();
  for (const auto& [k, v] : r.exact_ratios) ratios[k] = ratio_to_json(v);
  j["exact_ratios"] = ratios;
  json ests = json::array();
  for (const auto& e : r.estimates) {
    ests.push_back(json{{"tag", e.tag},
                        {"n_samples", e.n_samples},
                        {"hits", e.hits},
                        {"estimate", e.estimate},
                        {"stderr", e.stderr_est},
                        {"seed", e.seed}});
  }
  j["estimates"] = ests;
  j["provenance"] = r.provenance;
  j["timestamp"] = r.timestamp;
  j["tool_version"] = r.tool_version;
  return j.dump();
}

std::optional<Record> record_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  Record r;
  try {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
      return std::nullopt;
    }
    r.schema_version = j["schema_version"].get<int>();
    if (r.schema_version != kSchemaVersion) return std::nullopt;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& [k, v] : j.at("exact_counts").items()) {
      mpz_class z;
      if (!v.is_string() || z.set_str(v.get<std::string>(), 10) != 0) return std::nullopt;
      r.exact_counts[k] = z;
    }
    for (const auto& [k, v] : j.at("exact_ratios").items()) {
      auto q = ratio_from_json(v);
      if (!q) return std::nullopt;
      r.exact_ratios[k] = *q;
    }
    for (const auto& e : j.at("estimates")) {
      EstimateEntry ee;
      ee.tag = e.at("tag").get<std::string>();
      ee.n_samples = e.at("n_samples").get<uint64_t>();
      ee.hits = e.at("hits").get<uint64_t>();
      ee.estimate = e.at("estimate").get<double>();
      ee.stderr_est = e.at("stderr").get<double>();
      ee.seed = e.at("seed").get<uint64_t>();
      r.estimates.push_back(ee);
    }
    r.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
  } catch (const json::exception&) {
    return std::nullopt;
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string params_string(const std::map<std::string, std::string>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += " ";
    s += k + "=" + v;
  }
  return s;
}

}  // namespace

std::string record_to_csv(const Record& r) {
  std::ostringstream os;
  os << "command,params,name,num,den,provenance\n";
  std::string cmd = csv_field(r.command);
  std::string par = csv_field(params_string(r.params));
  auto prov = [&](const std::string& name) {
    auto it = r.provenance.find(name);
    return it == r.provenance.end() ? std::string() : it->second;
  };
  auto row = [&](const std::string& name, const std::string& num,
                 const std::string& den, const std::string& p) {
    os << cmd << "," << par << "," << csv_field(name) << "," << num << "," << den
       << "," << csv_field(p) << "\n";
  };
  for (const auto& [k, v] : r.exact_counts) row(k, v.get_str(), "1", prov(k));
  for (const auto& [k, v] : r.exact_ratios) {
    row(k, v.get_num().get_str(), v.get_den().get_str(), prov(k));
  }
  for (const auto& e : r.estimates) {
    row(e.tag + "_estimate", std::to_string(e.hits), std::to_string(e.n_samples),
        "montecarlo");
  }
  return os.str();
}

std::string cache_key(const std::string& command,
                      const std::map<std::string, std::string>& params) {
  return command + "?" + params_string(params);
}

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

fs::path cache_path(const std::string& dir, const std::string& key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key)));
  return fs::path(dir) / name;
}

}  // namespace

std::optional<Record> cache_lookup(const std::string& dir, const std::string& command,
                                   const std::map<std::string, std::string>& params) {
  fs::path path = cache_path(dir, cache_key(command, params));
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rec = record_from_json(buf.str());
  if (!rec) {
    std::cerr << "warning: ignoring corrupt cache entry " << path.string() << "\n";
    return std::nullopt;
  }
  // Hash collisions and stale entries fail the exact identity check.
  if (rec->command != command || rec->params != params) return std::nullopt;
  return rec;
}

bool cache_store(const std::string& dir, const Record& r) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path final_path = cache_path(dir, cache_key(r.command, r.params));
  std::random_device rd;
  char tmpname[64];
  std::snprintf(tmpname, sizeof tmpname, ".tmp-%08x-%08x",
                static_cast<unsigned>(::getpid()), rd());
  fs::path tmp = final_path;
  tmp += tmpname;
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << record_to_json(r) << "\n";
    if (!out.good()) {
      out.close();
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace gspc
