#pragma once

// Batch runs: a JSON configuration describes families of instances and the
// checks to run on each; results go to a CSV table and a JSON summary.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cayley/io.hpp"
#include "cayley/verify.hpp"

namespace cayley {

struct InstanceFamily {
  std::string kind;                   ///< cyclic | stacked | simplex | file
  std::size_t d = 0;
  std::vector<std::size_t> n;         ///< one instance per entry
  std::size_t m = 1;
  std::vector<std::size_t> sizes;     ///< optional per-summand vertex counts (overrides n)
  std::vector<std::uint64_t> seeds{0};
  std::optional<Rational> perturb;
  std::string path;                   ///< for kind = file
};

struct SuiteConfig {
  std::vector<InstanceFamily> instances;
  std::vector<std::string> checks = default_checks();
  std::string output;
};

namespace detail {

inline std::vector<std::size_t> counts_field(const Json& j, const std::string& where) {
  std::vector<std::size_t> out;
  auto one = [&](const Json& x, const std::string& w) {
    if (!x.is_number_integer() || x.get<long long>() < 1) throw FormatError(w, "expected a positive integer");
    out.push_back(x.get<std::size_t>());
  };
  if (j.is_array()) {
    for (std::size_t t = 0; t < j.size(); ++t) one(j[t], where + "[" + std::to_string(t) + "]");
  } else {
    one(j, where);
  }
  return out;
}

}  // namespace detail

/// Validates every field; errors name the offending field path.
inline SuiteConfig parse_suite_config(const Json& j) {
  if (!j.is_object()) throw FormatError("config", "expected an object");
  for (const auto& [key, val] : j.items())
    if (key != "instances" && key != "checks" && key != "output") throw FormatError("config." + key, "unknown field");
  SuiteConfig cfg;
  if (j.contains("checks")) {
    const Json& cs = j.at("checks");
    if (!cs.is_array()) throw FormatError("checks", "expected an array of check names");
    cfg.checks.clear();
    for (std::size_t t = 0; t < cs.size(); ++t) {
      const std::string w = "checks[" + std::to_string(t) + "]";
      if (!cs[t].is_string()) throw FormatError(w, "expected a string");
      const auto name = cs[t].get<std::string>();
      if (!check_registry().count(name)) throw FormatError(w, "unknown check '" + name + "'");
      cfg.checks.push_back(name);
    }
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw FormatError("output", "expected a path string");
    cfg.output = j.at("output").get<std::string>();
  }
  if (!j.contains("instances") || !j.at("instances").is_array()) throw FormatError("instances", "expected an array");
  const Json& arr = j.at("instances");
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string w = "instances[" + std::to_string(t) + "]";
    const Json& e = arr[t];
    if (!e.is_object()) throw FormatError(w, "expected an object");
    for (const auto& [key, val] : e.items()) {
      static const std::vector<std::string> known{"kind", "d", "n", "m", "sizes", "seed", "seeds", "perturb", "path"};
      if (std::find(known.begin(), known.end(), key) == known.end()) throw FormatError(w + "." + key, "unknown field");
    }
    InstanceFamily fam;
    if (!e.contains("kind") || !e.at("kind").is_string()) throw FormatError(w + ".kind", "missing or not a string");
    fam.kind = e.at("kind").get<std::string>();
    if (fam.kind != "cyclic" && fam.kind != "stacked" && fam.kind != "simplex" && fam.kind != "file")
      throw FormatError(w + ".kind", "must be one of cyclic, stacked, simplex, file");
    if (fam.kind == "file") {
      if (!e.contains("path") || !e.at("path").is_string()) throw FormatError(w + ".path", "required for kind file");
      fam.path = e.at("path").get<std::string>();
      fam.n = {0};
    } else {
      fam.d = detail::count_field(e, "d", w);
      if (fam.d < 1) throw FormatError(w + ".d", "must be at least 1");
      if (e.contains("m")) fam.m = detail::count_field(e, "m", w);
      if (fam.m < 1 || fam.m > 63) throw FormatError(w + ".m", "must be between 1 and 63");
      if (fam.kind == "simplex") {
        fam.n = {fam.d + 1};
      } else if (e.contains("sizes")) {
        fam.sizes = detail::counts_field(e.at("sizes"), w + ".sizes");
        if (fam.sizes.size() != fam.m) throw FormatError(w + ".sizes", "needs exactly m entries");
        fam.n = {0};
      } else {
        if (!e.contains("n")) throw FormatError(w + ".n", "missing");
        fam.n = detail::counts_field(e.at("n"), w + ".n");
      }
      for (auto n : fam.sizes.empty() ? fam.n : fam.sizes)
        if (n < fam.d + 1) throw FormatError(w + ".n", "vertex counts must be at least d+1");
    }
    if (e.contains("seeds")) {
      const Json& s = e.at("seeds");
      if (!s.is_array() || s.empty()) throw FormatError(w + ".seeds", "expected a non-empty array of integers");
      fam.seeds.clear();
      for (std::size_t q = 0; q < s.size(); ++q) {
        if (!s[q].is_number_integer() || s[q].get<long long>() < 0)
          throw FormatError(w + ".seeds[" + std::to_string(q) + "]", "expected a non-negative integer");
        fam.seeds.push_back(s[q].get<std::uint64_t>());
      }
    } else if (e.contains("seed")) {
      if (!e.at("seed").is_number_integer() || e.at("seed").get<long long>() < 0)
        throw FormatError(w + ".seed", "expected a non-negative integer");
      fam.seeds = {e.at("seed").get<std::uint64_t>()};
    }
    if (e.contains("perturb")) {
      fam.perturb = rational_from_json(e.at("perturb"), w + ".perturb");
      if (fam.perturb->sign() <= 0) throw FormatError(w + ".perturb", "must be positive");
    }
    cfg.instances.push_back(std::move(fam));
  }
  return cfg;
}

/// One concrete instance of a family, not yet generated.
struct InstancePlan {
  std::string name;
  const InstanceFamily* family = nullptr;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

inline std::vector<InstancePlan> plan_instances(const SuiteConfig& cfg) {
  std::vector<InstancePlan> out;
  for (const auto& fam : cfg.instances) {
    for (auto n : fam.n) {
      for (auto seed : fam.seeds) {
        std::ostringstream name;
        if (fam.kind == "file") {
          name << "file:" << fam.path;
        } else {
          name << fam.kind << "/d" << fam.d << "/m" << fam.m << "/n";
          if (fam.sizes.empty()) {
            name << n;
          } else {
            for (std::size_t t = 0; t < fam.sizes.size(); ++t) name << (t ? "-" : "") << fam.sizes[t];
          }
        }
        name << "/s" << seed;
        if (fam.perturb) name << "/p" << fam.perturb->str();
        out.push_back({name.str(), &fam, n, seed});
      }
    }
  }
  return out;
}

inline PureCollection generate_collection(const InstancePlan& plan) {
  const InstanceFamily& fam = *plan.family;
  std::optional<PureCollection> c;
  if (fam.kind == "file") {
    c = collection_from_json(read_json_file(fam.path), fam.path);
  } else {
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < fam.m; ++i) {
      const std::size_t n = fam.sizes.empty() ? plan.n : fam.sizes[i];
      if (fam.kind == "cyclic") {
        ps.push_back(cyclic_polytope(fam.d, n));
      } else if (fam.kind == "stacked") {
        ps.push_back(stacked_polytope(fam.d, n, plan.seed * 7919 + i));
      } else {
        ps.push_back(simplex_polytope(fam.d));
      }
    }
    c.emplace(fam.d, std::move(ps));
  }
  if (fam.perturb) return perturb(*c, *fam.perturb, plan.seed);
  return *c;
}

/// Runs every check on every planned instance. Report order follows the
/// configuration regardless of `jobs`.
inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg, unsigned jobs = 1) {
  const std::vector<InstancePlan> plans = plan_instances(cfg);
  std::vector<std::vector<CheckReport>> per(plans.size());
  auto work = [&](std::size_t idx) {
    const InstancePlan& plan = plans[idx];
    std::optional<Instance> inst;
    try {
      inst.emplace(plan.name, generate_collection(plan));
    } catch (const std::exception& e) {
      for (const auto& name : cfg.checks) {
        CheckReport r;
        r.check_name = name;
        r.instance = plan.name;
        r.status = CheckStatus::hypothesis_unmet;
        r.reason = std::string("generation failed: ") + e.what();
        per[idx].push_back(std::move(r));
      }
      return;
    }
    for (const auto& name : cfg.checks) per[idx].push_back(run_check(name, *inst));
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(plans.size(), 1))));
  if (jobs == 1) {
    for (std::size_t idx = 0; idx < plans.size(); ++idx) work(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t idx = next++; idx < plans.size(); idx = next++) work(idx);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<CheckReport> out;
  for (auto& v : per)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

inline const char* passed_cell(const CheckReport& r) {
  return r.status == CheckStatus::passed ? "true" : (r.status == CheckStatus::failed ? "false" : "skipped");
}

inline std::string csv_header() { return "check_name,instance,k_or_ij,lhs,rhs,passed,ms\n"; }

/// One row per check per instance; list cells are ';'-separated.
inline std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << csv_header();
  auto join = [](const auto& v) {
    std::ostringstream s;
    for (std::size_t t = 0; t < v.size(); ++t) s << (t ? ";" : "") << v[t];
    return s.str();
  };
  for (const auto& r : reports) {
    os << r.check_name << ',' << r.instance << ',' << join(r.labels) << ',' << join(r.lhs) << ',' << join(r.rhs) << ','
       << passed_cell(r) << ',' << std::fixed << std::setprecision(3) << r.runtime_ms << '\n';
  }
  return os.str();
}

inline Json to_json(const CheckReport& r) {
  return {{"check_name", r.check_name}, {"instance", r.instance}, {"parameters", r.parameters},
          {"labels", r.labels},         {"lhs", r.lhs},           {"rhs", r.rhs},
          {"status", to_string(r.status)}, {"passed", r.passed()}, {"reason", r.reason},
          {"runtime_ms", r.runtime_ms}};
}

inline Json suite_summary(const std::vector<CheckReport>& reports) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::vector<std::string> instances;
  Json rs = Json::array();
  for (const auto& r : reports) {
    passed += r.status == CheckStatus::passed;
    failed += r.status == CheckStatus::failed;
    skipped += r.status == CheckStatus::hypothesis_unmet;
    if (instances.empty() || instances.back() != r.instance) instances.push_back(r.instance);
    rs.push_back(to_json(r));
  }
  return {{"instances", instances.size()}, {"reports", reports.size()}, {"passed", passed},
          {"failed", failed},           {"skipped", skipped},        {"all_passed", failed == 0},
          {"results", rs}};
}

/// JSON summary path that accompanies a CSV output path.
inline std::string summary_path_for(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return csv_path.substr(0, dot) + ".json";
  return csv_path + ".json";
}

}  // namespace cayley
