// Command-line front end: weight computation, verification suites, norm
// evaluation, convergence studies, and optimality probes.
//
// Exit codes: 0 success, 2 usage error, 3 numerical degeneracy,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "sardquad/analysis.hpp"
#include "sardquad/closed_form.hpp"
#include "sardquad/dense_solver.hpp"
#include "sardquad/discrete_operator.hpp"
#include "sardquad/kernel.hpp"
#include "sardquad/sobolev_solver.hpp"
#include "sardquad/types.hpp"

using nlohmann::ordered_json;
using namespace sardquad;

namespace {

std::string fmt(double x) { return nlohmann::json(x).dump(); }

struct SolveResult {
  QuadratureRule rule;
  double condition_estimate = -1;  // < 0 means absent
};

SolveResult run_method(int m, int N, const std::string& method) {
  auto config = ProblemConfig::create(m, N);
  if (method == "dense") {
    auto sol = dense_solve(config);
    return {sol.rule, sol.condition_estimate};
  }
  if (method == "sobolev") return {sobolev_solve(config).rule, -1};
  if (method == "closed") {
    if (m == 1) return {weights_m1(N), -1};
    if (m == 3) return {weights_m3(N), -1};
    throw UsageError("closed-form weights exist only for m in {1, 3}");
  }
  throw UsageError("unknown method: " + method + " (dense|sobolev|closed)");
}

void emit_record(const QuadratureRule& rule, double cond, double norm_sq,
                 bool have_norm, double ms, const std::string& format) {
  const int N = rule.config.N;
  std::vector<double> residuals = constraint_residuals(rule);
  if (format == "json") {
    ordered_json rec;
    rec["m"] = rule.config.m;
    rec["N"] = N;
    rec["h"] = rule.config.h;
    rec["method"] = rule.method;
    rec["nodes"] = ordered_json::array();
    for (int b = 0; b <= N; ++b) rec["nodes"].push_back(rule.node(b));
    rec["weights"] = rule.weights;
    rec["constraint_residuals"] = residuals;
    if (have_norm) rec["norm_sq"] = norm_sq;
    if (cond >= 0) rec["condition_estimate"] = cond;
    rec["timings_ms"] = ms;
    std::cout << rec.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "m,N,h,method,beta,node,weight,constraint_residual_max,"
                 "norm_sq,condition_estimate,timings_ms\n";
    double rmax = 0;
    for (double r : residuals) rmax = std::max(rmax, r);
    for (int b = 0; b <= N; ++b) {
      std::cout << rule.config.m << "," << N << "," << fmt(rule.config.h)
                << "," << rule.method << "," << b << "," << fmt(rule.node(b))
                << "," << fmt(rule.weights[b]) << "," << fmt(rmax) << ","
                << (have_norm ? fmt(norm_sq) : std::string()) << ","
                << (cond >= 0 ? fmt(cond) : std::string()) << "," << fmt(ms)
                << "\n";
    }
  } else {
    throw UsageError("unknown format: " + format + " (json|csv)");
  }
}

struct CheckList {
  bool all_pass = true;
  void check(const std::string& name, double tol, double observed) {
    bool ok = observed <= tol;
    all_pass = all_pass && ok;
    std::printf("%-44s tol %-9.1e observed %-12.3e %s\n", name.c_str(), tol,
                observed, ok ? "PASS" : "FAIL");
  }
};

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void verify_one(int m, int N, CheckList& cl) {
  auto config = ProblemConfig::create(m, N);
  const double op_tol = m >= 5 ? 1e-8 : 1e-9;

  auto op = build_operator(m, config.h);
  cl.check("delta identity m=" + std::to_string(m) +
               " N=" + std::to_string(N),
           op_tol, verify_delta(op, 30));
  cl.check("annihilation m=" + std::to_string(m) + " N=" + std::to_string(N),
           op_tol, verify_annihilation(op, 30));
  if (m > 1) {
    cl.check("reciprocal root pairing", 1e-10, reciprocal_residual(op));
    cl.check("operator reality", 1e-10, max_imag_residual(op, 200));
    cl.check("exponential decay bound", 1.0, decay_bound_excess(op, 100));
  }

  auto dense = dense_solve(config);
  auto sob = sobolev_solve(config, op);
  cl.check("dense vs sobolev", m == 1 ? 1e-12 : 1e-9,
           max_diff(dense.rule.weights, sob.rule.weights));
  if (m == 1 || m == 3) {
    auto closed = m == 1 ? weights_m1(N) : weights_m3(N);
    cl.check("dense vs closed form", m == 1 ? 1e-12 : 1e-8,
             max_diff(dense.rule.weights, closed.weights));
  }

  if (m == 1) {
    // Only m = 1 weights are reflection-symmetric: for odd m > 1 the norm
    // integrand (phi^(m) + phi)^2 is not invariant under x -> 1-x, and the
    // solved weights are measurably asymmetric (e.g. ~1e-5 at m=3, N=5).
    double sym = 0;
    for (int b = 0; b <= N; ++b)
      sym = std::max(
          sym, std::abs(dense.rule.weights[b] - dense.rule.weights[N - b]));
    cl.check("weight symmetry", 1e-12, sym);
  }

  for (const auto* rule : {&dense.rule, &sob.rule}) {
    auto basis = exactness_basis(m);
    double worst = 0;
    for (const auto& bf : basis) {
      double exact = basis_integral(bf);
      double err = std::abs(sardquad::apply(*rule, [&](double x) { return bf.eval(x); }) -
                            exact) /
                   (1 + std::abs(exact));
      worst = std::max(worst, err);
    }
    cl.check("exactness (" + rule->method + ")", 1e-10, worst);
  }

  auto rep = error_norm_squared(config, dense.rule);
  cl.check("norm_sq nonnegativity", 1e-12, -rep.norm_sq);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sard-optimal quadrature weights on equally spaced nodes"};
  app.require_subcommand(1);

  int m = 1, N = 10, trials = 100;
  unsigned long long seed = 12345;
  double magnitude = 1e-3;
  std::string method = "sobolev", format = "json";
  std::vector<int> Nlist;
  std::vector<std::string> functions = {"exp", "runge"};
  bool do_verify = false, with_norm = false;

  auto add_common = [&](CLI::App* sub, bool list_N) {
    sub->fallthrough();  // lets `--config` appear after the subcommand too
    sub->add_option("--m", m, "space order (odd)")->required();
    if (list_N)
      sub->add_option("--N", Nlist, "node-interval counts")
          ->required()
          ->delimiter(',');
    else
      sub->add_option("--N", N, "node intervals")->required();
  };
  // Options may come from an INI file with a [subcommand] section.
  app.set_config("--config");

  auto* w = app.add_subcommand("weights", "compute optimal weights");
  add_common(w, false);
  w->add_option("--method", method, "dense|sobolev|closed");
  w->add_option("--format", format, "json|csv");
  w->add_flag("--verify", do_verify, "cross-check against the dense oracle");
  w->add_flag("--norm", with_norm, "include norm_sq in the record");

  auto* v = app.add_subcommand("verify", "run the property suite");
  add_common(v, true);

  auto* c = app.add_subcommand("converge", "convergence study (CSV)");
  add_common(c, true);
  c->add_option("--functions", functions, "test integrands")->delimiter(',');
  c->add_option("--method", method, "dense|sobolev|closed");

  auto* n = app.add_subcommand("norm", "error-functional norm report");
  add_common(n, false);
  n->add_option("--method", method, "dense|sobolev|closed");

  auto* p = app.add_subcommand("probe", "optimality probe");
  add_common(p, false);
  p->add_option("--method", method, "dense|sobolev|closed");
  p->add_option("--trials", trials, "number of random perturbations");
  p->add_option("--magnitude", magnitude, "perturbation magnitude");
  p->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (w->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      auto res = run_method(m, N, method);
      double norm_sq = 0;
      if (with_norm)
        norm_sq =
            error_norm_squared(ProblemConfig::create(m, N), res.rule).norm_sq;
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      if (do_verify) {
        auto oracle = method == "dense" ? sobolev_solve(ProblemConfig::create(m, N)).rule
                                        : dense_solve(ProblemConfig::create(m, N)).rule;
        double d = max_diff(res.rule.weights, oracle.weights);
        auto residuals = constraint_residuals(res.rule);
        double rmax = 0;
        for (double r : residuals) rmax = std::max(rmax, r);
        if (d > 1e-8 || rmax > 1e-9)
          throw VerificationError("cross-check failed: weight diff " +
                                  fmt(d) + ", constraint residual " +
                                  fmt(rmax));
      }
      emit_record(res.rule, res.condition_estimate, norm_sq, with_norm, ms,
                  format);
    } else if (v->parsed()) {
      CheckList cl;
      for (int Ni : Nlist) verify_one(m, Ni, cl);
      if (!cl.all_pass) return 4;
    } else if (c->parsed()) {
      auto fns = named_functions(functions);
      auto rows = convergence_study(m, Nlist, fns, method);
      std::cout << "N,norm_sq";
      for (const auto& f : fns)
        std::cout << ",err_" << f.name << ",trap_err_" << f.name;
      std::cout << ",trap_projected_norm_sq,loglog_slope\n";
      for (const auto& row : rows) {
        std::cout << row.N << "," << fmt(row.norm_sq);
        for (size_t i = 0; i < fns.size(); ++i)
          std::cout << "," << fmt(row.function_errors[i]) << ","
                    << fmt(row.trapezoid_errors[i]);
        std::cout << "," << fmt(row.trapezoid_projected_norm_sq) << ","
                  << fmt(row.loglog_slope) << "\n";
      }
    } else if (n->parsed()) {
      auto config = ProblemConfig::create(m, N);
      auto res = run_method(m, N, method);
      auto rep = error_norm_squared(config, res.rule);
      ordered_json rec;
      rec["m"] = m;
      rec["N"] = N;
      rec["method"] = res.rule.method;
      rec["norm_sq"] = rep.norm_sq;
      rec["term_linear"] = rep.term_linear;
      rec["term_quadratic"] = rep.term_quadratic;
      rec["term_constant"] = rep.term_constant;
      std::cout << rec.dump(2) << "\n";
    } else if (p->parsed()) {
      auto config = ProblemConfig::create(m, N);
      auto res = run_method(m, N, method);
      auto rep = minimality_probe(config, res.rule, trials, magnitude, seed);
      ordered_json rec;
      rec["m"] = m;
      rec["N"] = N;
      rec["trials"] = rep.trials;
      rec["min_increase"] = rep.min_increase;
      rec["violations"] = rep.violations;
      rec["stationarity"] = rep.stationarity;
      std::cout << rec.dump(2) << "\n";
      if (rep.violations > 0) return 4;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
