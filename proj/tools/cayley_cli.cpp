// cayley: command-line front end.
//
//   cayley gen    --kind cyclic|stacked|simplex --d D --n N [--m M] [--seed S] [--perturb p/q] [--out FILE]
//   cayley sum    --in FILE [--out FILE]
//   cayley cayley --in FILE [--out FILE]
//   cayley fvec   --in FILE [--out FILE]
//   cayley hvec   --in FILE [--out FILE]
//   cayley ring   --in FILE [--degree K] [--max-degree M] [--out FILE]
//   cayley check  --in FILE --check NAME [--json]
//   cayley suite  --config FILE [--jobs N] [--output FILE]
//
// Exit codes: 0 pass, 1 check failure, 2 hypothesis unmet or degenerate
// input, 3 usage or I/O error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cayley/cayley.hpp"

namespace {

using namespace cayley;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitUsage = 3;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json ints(const std::vector<std::int64_t>& v) { return Json(v); }

struct GenOptions {
  std::string kind;
  std::size_t d = 0, n = 0, m = 1;
  std::uint64_t seed = 0;
  std::string perturb, out;
};

int cmd_gen(const GenOptions& o) {
  if (o.kind != "cyclic" && o.kind != "stacked" && o.kind != "simplex") {
    std::cerr << "gen: --kind must be cyclic, stacked or simplex\n";
    return kExitUsage;
  }
  std::vector<Polytope> ps;
  try {
    for (std::size_t i = 0; i < o.m; ++i) {
      if (o.kind == "cyclic") ps.push_back(cyclic_polytope(o.d, o.n));
      else if (o.kind == "stacked") ps.push_back(stacked_polytope(o.d, o.n, o.m == 1 ? o.seed : o.seed * 7919 + i));
      else ps.push_back(simplex_polytope(o.d));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "gen: " << e.what() << "\n";
    return kExitUsage;
  }
  PureCollection c(o.d, std::move(ps));
  if (!o.perturb.empty()) c = perturb(c, Rational::parse(o.perturb), o.seed);
  emit(o.out, dump(o.m == 1 && o.perturb.empty() ? to_json(c[0]) : to_json(c)));
  return kExitPass;
}

PureCollection load(const std::string& path) { return collection_from_json(read_json_file(path), path); }

int cmd_sum(const std::string& in, const std::string& out) {
  emit(out, dump(to_json(minkowski_sum(load(in)))));
  return kExitPass;
}

int cmd_cayley(const std::string& in, const std::string& out) {
  const CayleyPolytope k = cayley_polytope(load(in));
  Json j = to_json(k);
  const auto chk = check_cayley_simplicial(k);
  j["f_vector"] = ints(k.lattice().f_vector());
  j["simplicial"] = chk.simplicial;
  emit(out, dump(j));
  return kExitPass;
}

int cmd_fvec(const std::string& in, const std::string& out) {
  const PureCollection c = load(in);
  const CayleyPolytope k = cayley_polytope(c);
  const RelativeComplex rel = relative_cayley_complex(k);
  Json j{{"d", c.d()},
         {"m", c.m()},
         {"T", to_json(f_vector(rel.ambient))},
         {"T_relative", to_json(f_vector(rel))},
         {"minkowski_hull", ints(face_lattice(minkowski_sum(c)).f_vector())},
         {"minkowski_via_cayley", ints(minkowski_f_via_cayley(k))}};
  emit(out, dump(j));
  return kExitPass;
}

int cmd_hvec(const std::string& in, const std::string& out) {
  const PureCollection c = load(in);
  const CayleyPolytope k = cayley_polytope(c);
  const RelativeComplex rel = relative_cayley_complex(k);
  const int D = cayley_h_dimension(k);
  Json j{{"d", c.d()},
         {"m", c.m()},
         {"T", to_json(h_from_f(f_vector(rel.ambient), D))},
         {"T_relative", to_json(h_from_f(f_vector(rel), D))}};
  emit(out, dump(j));
  return kExitPass;
}

int cmd_ring(const std::string& in, std::optional<std::size_t> degree, std::size_t max_degree, const std::string& out) {
  const PureCollection c = load(in);
  const std::size_t deg = degree.value_or(c.d());
  const CayleyPolytope k = cayley_polytope(c);
  if (deg > max_degree) {
    const std::int64_t vars = static_cast<std::int64_t>(k.vertices().size());
    std::cerr << "ring: degree " << deg << " exceeds --max-degree " << max_degree << " (up to "
              << binomial(vars + static_cast<std::int64_t>(deg) - 1, static_cast<std::int64_t>(deg))
              << " monomials in " << vars << " variables at the top degree)\n";
    return kExitHypothesis;
  }
  const GradedQuotient q = cayley_quotient(k, deg);
  const HVector h = h_from_f(f_vector(q.complex()), cayley_h_dimension(k));
  Json dims = Json::array();
  Json bases = Json::array();
  for (std::size_t i = 0; i <= deg; ++i) {
    dims.push_back(q.dim(i));
    bases.push_back(q.basis(i).monomials);
  }
  Json certs = Json::array();
  if (deg >= c.d()) {
    for (const auto& cert : all_certificates(q, c.d())) certs.push_back(to_json(cert));
  }
  emit(out, dump({{"d", c.d()}, {"m", c.m()}, {"max_degree", deg}, {"dims", dims}, {"h", to_json(h)},
                  {"basis", bases}, {"certificates", certs}}));
  return kExitPass;
}

int exit_code(const CheckReport& r) {
  switch (r.status) {
    case CheckStatus::passed: return kExitPass;
    case CheckStatus::failed: return kExitFail;
    case CheckStatus::hypothesis_unmet: return kExitHypothesis;
  }
  return kExitFail;
}

int cmd_check(const std::string& in, const std::string& name, bool as_json) {
  if (!check_registry().count(name)) {
    std::cerr << "check: unknown check '" << name << "'\n";
    return kExitUsage;
  }
  const CheckReport r = run_check(name, load(in), in);
  if (as_json) {
    std::cout << dump(to_json(r));
    return exit_code(r);
  }
  std::cout << r.check_name << " on " << r.instance << ": " << to_string(r.status) << "\n";
  if (!r.reason.empty()) std::cout << "  " << r.reason << "\n";
  for (const auto& [key, value] : r.parameters) std::cout << "  " << key << " = " << value << "\n";
  if (!r.labels.empty()) {
    std::cout << "  " << std::left << std::setw(10) << "index" << std::right << std::setw(12) << "lhs" << std::setw(12)
              << "rhs" << "\n";
    for (std::size_t t = 0; t < r.labels.size(); ++t)
      std::cout << "  " << std::left << std::setw(10) << r.labels[t] << std::right << std::setw(12) << r.lhs[t]
                << std::setw(12) << r.rhs[t] << "\n";
  }
  return exit_code(r);
}

int cmd_suite(const std::string& config_path, unsigned jobs, const std::string& output_override) {
  const SuiteConfig cfg = parse_suite_config(read_json_file(config_path));
  const std::string output = output_override.empty() ? cfg.output : output_override;
  const auto reports = run_suite(cfg, jobs);
  const Json summary = suite_summary(reports);
  if (output.empty()) {
    std::cout << reports_to_csv(reports);
  } else {
    write_text_file(output, reports_to_csv(reports));
    write_text_file(summary_path_for(output), dump(summary));
  }
  std::cerr << "suite: " << summary["instances"] << " instances, " << summary["passed"] << " passed, "
            << summary["failed"] << " failed, " << summary["skipped"] << " skipped\n";
  return summary["failed"].get<std::size_t>() == 0 ? kExitPass : kExitFail;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CAYLEY_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley polytopes of pure collections: invariants and exact certificates"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate a polytope or a collection of copies");
  g->add_option("--kind", gen.kind, "cyclic, stacked or simplex")->required();
  g->add_option("--d", gen.d, "dimension")->required();
  g->add_option("--n", gen.n, "vertex count (ignored for simplex)");
  g->add_option("--m", gen.m, "number of summands")->check(CLI::Range(1, 63));
  g->add_option("--seed", gen.seed, "seed for stacked generation and perturbation");
  g->add_option("--perturb", gen.perturb, "perturbation magnitude p/q");
  g->add_option("--out", gen.out, "output file (default stdout)");

  std::string in, out, check_name, config, suite_out;
  bool as_json = false;
  std::size_t max_degree = 8;
  std::optional<std::size_t> degree;
  unsigned jobs = default_jobs();

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("--in", in, "collection or polytope JSON")->required();
    sub->add_option("--out", out, "output file (default stdout)");
    return sub;
  };
  auto* s = with_io(app.add_subcommand("sum", "Minkowski sum of a collection"));
  auto* c = with_io(app.add_subcommand("cayley", "Cayley polytope of a collection"));
  auto* fv = with_io(app.add_subcommand("fvec", "f-vectors of T, T° and the Minkowski sum"));
  auto* hv = with_io(app.add_subcommand("hvec", "h-vectors of T and T°"));
  auto* r = with_io(app.add_subcommand("ring", "graded dimensions of A*(T) and multiplication certificates"));
  r->add_option("--degree", degree, "top degree to compute (default d)");
  r->add_option("--max-degree", max_degree, "refuse degrees above this");

  auto* ch = app.add_subcommand("check", "run one check on a collection");
  ch->add_option("--in", in, "collection or polytope JSON")->required();
  ch->add_option("--check", check_name, "check name")->required();
  ch->add_flag("--json", as_json, "print the report as JSON");

  auto* su = app.add_subcommand("suite", "run a configured batch of checks");
  su->add_option("--config", config, "suite configuration JSON")->required();
  su->add_option("--jobs", jobs, "parallel instances (default $CAYLEY_JOBS or 1)")->check(CLI::PositiveNumber);
  su->add_option("--output", suite_out, "CSV path overriding the configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_sum(in, out);
    if (*c) return cmd_cayley(in, out);
    if (*fv) return cmd_fvec(in, out);
    if (*hv) return cmd_hvec(in, out);
    if (*r) return cmd_ring(in, degree, max_degree, out);
    if (*ch) return cmd_check(in, check_name, as_json);
    if (*su) return cmd_suite(config, jobs, suite_out);
  } catch (const NotSimplicialError& e) {
    std::cerr << "hypothesis unmet: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
