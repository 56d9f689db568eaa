#pragma once

// End-to-end checks of the identities relating a pure collection, its
// Minkowski sum, the Cayley complexes T and T°, and the graded ring A*(T).
// Every check returns a report carrying both sides of the comparison.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/complexes.hpp"
#include "cayley/facering.hpp"
#include "cayley/polytope.hpp"

namespace cayley {

enum class CheckStatus { passed, failed, hypothesis_unmet };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::hypothesis_unmet: return "hypothesis_unmet";
  }
  return "?";
}

struct CheckReport {
  std::string check_name;
  std::string instance;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> labels;  ///< one per compared entry, e.g. "k=-1" or "(0,2)"
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
  CheckStatus status = CheckStatus::failed;
  std::string reason;
  double runtime_ms = 0;

  bool passed() const { return status == CheckStatus::passed; }
};

/// Lazily computed data of one collection, shared by the checks run on it.
class Instance {
 public:
  Instance(std::string name, PureCollection collection)
      : name_(std::move(name)), collection_(std::move(collection)) {}

  const std::string& name() const { return name_; }
  const PureCollection& collection() const { return collection_; }
  std::size_t d() const { return collection_.d(); }
  std::size_t m() const { return collection_.m(); }
  /// Dimension parameter d+m-1 of every Cayley-side h-vector.
  int D() const { return static_cast<int>(d() + m()) - 1; }

  const CayleyPolytope& cayley() {
    if (!cayley_) cayley_ = std::make_unique<CayleyPolytope>(cayley_polytope(collection_));
    return *cayley_;
  }
  const SimplicialityCheck& simpliciality() {
    if (!simpliciality_) simpliciality_ = check_cayley_simplicial(cayley());
    return *simpliciality_;
  }
  bool simplicial() { return simpliciality().simplicial; }

  const RelativeComplex& relative() {
    if (!relative_) relative_ = relative_cayley_complex(cayley());
    return *relative_;
  }
  const SimplicialComplex& complex() { return relative().ambient; }

  const FVector& f_T() {
    if (!f_t_) f_t_ = f_vector(complex());
    return *f_t_;
  }
  const FVector& f_rel() {
    if (!f_rel_) f_rel_ = f_vector(relative());
    return *f_rel_;
  }
  const HVector& h_T() {
    if (!h_t_) h_t_ = h_from_f(f_T(), D());
    return *h_t_;
  }
  const HVector& h_rel() {
    if (!h_rel_) h_rel_ = h_from_f(f_rel(), D());
    return *h_rel_;
  }

  /// f_0 .. f_{d-1} of the Minkowski sum, from its own convex hull.
  const std::vector<std::int64_t>& minkowski_f() {
    if (!minkowski_f_) minkowski_f_ = face_lattice(minkowski_sum(collection_)).f_vector();
    return *minkowski_f_;
  }

  const GradedQuotient& quotient() {
    if (!quotient_) quotient_ = std::make_unique<GradedQuotient>(complex(), centered_linear_forms(cayley()), d());
    return *quotient_;
  }

 private:
  std::string name_;
  PureCollection collection_;
  std::unique_ptr<CayleyPolytope> cayley_;
  std::optional<SimplicialityCheck> simpliciality_;
  std::optional<RelativeComplex> relative_;
  std::optional<FVector> f_t_, f_rel_;
  std::optional<HVector> h_t_, h_rel_;
  std::optional<std::vector<std::int64_t>> minkowski_f_;
  std::unique_ptr<GradedQuotient> quotient_;
};

namespace detail {

inline std::int64_t sign_power(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? " " : "") + std::to_string(v[t]);
  return s;
}

class ReportTimer {
 public:
  ReportTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline CheckReport start_report(const char* name, Instance& inst) {
  CheckReport r;
  r.check_name = name;
  r.instance = inst.name();
  r.parameters["d"] = std::to_string(inst.d());
  r.parameters["m"] = std::to_string(inst.m());
  return r;
}

/// Fills the status of a report whose hypothesis is not met; false otherwise.
inline bool hypothesis_unmet(CheckReport& r, Instance& inst) {
  if (inst.simplicial()) return false;
  r.status = CheckStatus::hypothesis_unmet;
  r.reason = "not in general position: mixed face of dimension " + std::to_string(inst.simpliciality().offending_dim) +
             " with " + std::to_string(inst.simpliciality().offending_face->size()) + " vertices";
  return true;
}

inline void finish_equalities(CheckReport& r) { r.status = r.lhs == r.rhs ? CheckStatus::passed : CheckStatus::failed; }

}  // namespace detail

/// f_i(Minkowski sum) = f_{i+m-1}(T°) for 0 <= i <= d-1.
inline CheckReport check_face_correspondence(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("face_correspondence", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    const int shift = static_cast<int>(inst.m()) - 1;
    for (int i = 0; i < static_cast<int>(inst.d()); ++i) {
      r.labels.push_back("i=" + std::to_string(i));
      r.lhs.push_back(inst.minkowski_f()[static_cast<std::size_t>(i)]);
      r.rhs.push_back(inst.f_rel().at(i + shift));
    }
    detail::finish_equalities(r);
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// h_{d-k}(T) = h_{k+m-1}(T°) + (-1)^k C(d+m-1, d-k) for -m+1 <= k <= d.
/// For m = 1 the report also records whether h_{d-k} = h_k holds directly on
/// the boundary complex (classical Dehn–Sommerville).
inline CheckReport check_dsm(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("dsm", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    const int d = static_cast<int>(inst.d());
    const int m = static_cast<int>(inst.m());
    for (int k = -m + 1; k <= d; ++k) {
      r.labels.push_back("k=" + std::to_string(k));
      r.lhs.push_back(inst.h_T().at(d - k));
      r.rhs.push_back(inst.h_rel().at(k + m - 1) + detail::sign_power(k) * binomial(inst.D(), d - k));
    }
    detail::finish_equalities(r);
    if (m == 1) {
      bool symmetric = true;
      for (int k = 0; k <= d; ++k) symmetric = symmetric && inst.h_T().at(d - k) == inst.h_T().at(k);
      r.parameters["dehn_sommerville"] = symmetric ? "true" : "false";
    }
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// h_{d+k}(T) = (-1)^k C(d+m-1, d+k) for k = 1..m-1.
inline CheckReport check_schenzel_tail(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("schenzel_tail", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    const int d = static_cast<int>(inst.d());
    for (int k = 1; k <= static_cast<int>(inst.m()) - 1; ++k) {
      r.labels.push_back("k=" + std::to_string(k));
      r.lhs.push_back(inst.h_T().at(d + k));
      r.rhs.push_back(detail::sign_power(k) * binomial(inst.D(), d + k));
    }
    detail::finish_equalities(r);
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// dim A^i(T) = h_i(T) for 0 <= i <= d.
inline CheckReport check_ring_dims(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("ring_dims", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    for (std::size_t i = 0; i <= inst.d(); ++i) {
      r.labels.push_back("i=" + std::to_string(i));
      r.lhs.push_back(static_cast<std::int64_t>(inst.quotient().dim(i)));
      r.rhs.push_back(inst.h_T().at(static_cast<int>(i)));
    }
    detail::finish_equalities(r);
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// Perturbation applied when the coordinate system of an instance turns out
/// not to be generic enough for dim A^i = h_i.
inline const Rational& genericity_retry_magnitude() {
  static const Rational mag(1, 1000);
  return mag;
}
inline constexpr int kGenericityRetries = 2;

/// Injectivity of x omega^j : A^i -> A^{i+j} for every 2i <= d, j <= d-2i,
/// after verifying dim A^i = h_i(T) (with up to two perturbation retries).
inline CheckReport check_lefschetz(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("lefschetz", inst);
  if (detail::hypothesis_unmet(r, inst)) {
    r.runtime_ms = timer.elapsed_ms();
    return r;
  }
  Instance* current = &inst;
  std::unique_ptr<Instance> retried;
  int retries = 0;
  auto usable = [](Instance& x) {
    if (!x.simplicial()) return false;
    for (std::size_t i = 0; i <= x.d(); ++i)
      if (static_cast<std::int64_t>(x.quotient().dim(i)) != x.h_T().at(static_cast<int>(i))) return false;
    return true;
  };
  while (!usable(*current)) {
    if (retries == kGenericityRetries) {
      r.status = CheckStatus::hypothesis_unmet;
      r.reason = "coordinates not generic: dim A^i != h_i after " + std::to_string(retries) + " perturbation retries";
      r.parameters["retries"] = std::to_string(retries);
      r.runtime_ms = timer.elapsed_ms();
      return r;
    }
    ++retries;
    retried = std::make_unique<Instance>(
        inst.name(), perturb(inst.collection(), genericity_retry_magnitude(), static_cast<std::uint64_t>(retries)));
    current = retried.get();
  }
  r.parameters["retries"] = std::to_string(retries);
  std::vector<std::int64_t> dims;
  for (auto x : current->quotient().dims()) dims.push_back(static_cast<std::int64_t>(x));
  r.parameters["dims"] = detail::join_ints(dims);
  bool all = true;
  for (const auto& c : all_certificates(current->quotient(), current->d())) {
    r.labels.push_back("(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    r.lhs.push_back(static_cast<std::int64_t>(c.map_rank));
    r.rhs.push_back(static_cast<std::int64_t>(c.dim_source));
    all = all && c.injective;
  }
  r.status = all ? CheckStatus::passed : CheckStatus::failed;
  if (!all) r.reason = "a multiplication map is not injective";
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// h_i(T) <= h_{i+j}(T) for every 2i <= d, j <= d-2i.
inline CheckReport check_h_monotonicity(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("h_monotonicity", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    bool all = true;
    for (auto [i, j] : lefschetz_pairs(inst.d())) {
      r.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      r.lhs.push_back(inst.h_T().at(static_cast<int>(i)));
      r.rhs.push_back(inst.h_T().at(static_cast<int>(i + j)));
      all = all && r.lhs.back() <= r.rhs.back();
    }
    r.status = all ? CheckStatus::passed : CheckStatus::failed;
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

/// Indices i <= d/2 - 1 with h_i(T) = h_{i+1}(T). Detection only: the
/// report passes whenever the hypothesis holds, and lists the hits in
/// parameters["detected"].
inline CheckReport detect_equality_case(Instance& inst) {
  detail::ReportTimer timer;
  CheckReport r = detail::start_report("equality_case", inst);
  if (!detail::hypothesis_unmet(r, inst)) {
    std::vector<std::int64_t> hits;
    for (int i = 0; 2 * i + 2 <= static_cast<int>(inst.d()); ++i) {
      r.labels.push_back("i=" + std::to_string(i));
      r.lhs.push_back(inst.h_T().at(i));
      r.rhs.push_back(inst.h_T().at(i + 1));
      if (r.lhs.back() == r.rhs.back()) hits.push_back(i);
    }
    r.parameters["detected"] = detail::join_ints(hits);
    r.status = CheckStatus::passed;
  }
  r.runtime_ms = timer.elapsed_ms();
  return r;
}

using CheckFunction = CheckReport (*)(Instance&);

inline const std::map<std::string, CheckFunction>& check_registry() {
  static const std::map<std::string, CheckFunction> registry{
      {"face_correspondence", &check_face_correspondence},
      {"dsm", &check_dsm},
      {"schenzel_tail", &check_schenzel_tail},
      {"ring_dims", &check_ring_dims},
      {"lefschetz", &check_lefschetz},
      {"h_monotonicity", &check_h_monotonicity},
      {"equality_case", &detect_equality_case},
  };
  return registry;
}

/// Checks run when a configuration does not name any.
inline std::vector<std::string> default_checks() {
  return {"face_correspondence", "dsm", "schenzel_tail", "lefschetz", "h_monotonicity"};
}

inline CheckReport run_check(const std::string& name, Instance& inst) {
  auto it = check_registry().find(name);
  if (it == check_registry().end()) throw std::invalid_argument("unknown check '" + name + "'");
  return it->second(inst);
}

inline CheckReport run_check(const std::string& name, const PureCollection& c, const std::string& instance_name = "input") {
  Instance inst(instance_name, c);
  return run_check(name, inst);
}

}  // namespace cayley
