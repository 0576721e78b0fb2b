#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sardquad/analysis.hpp"
#include "sardquad/closed_form.hpp"
#include "sardquad/dense_solver.hpp"
#include "sardquad/kernel.hpp"
#include "sardquad/sobolev_solver.hpp"

using namespace sardquad;

TEST_CASE("error-functional norm: frozen values") {
  auto check = [](int m, int N, double ref, double rel) {
    auto config = ProblemConfig::create(m, N);
    auto rep = error_norm_squared(config, dense_solve(config).rule);
    CHECK(rep.norm_sq == doctest::Approx(ref).epsilon(rel));
    CHECK(rep.norm_sq ==
          doctest::Approx(rep.term_linear - rep.term_quadratic -
                          rep.term_constant)
              .epsilon(1e-12));
  };
  check(1, 1, 0.07576568547998048299536303, 1e-13);
  check(1, 10, 0.0008325008424005560322726958, 1e-12);
  check(3, 10, 1.163929893384740266398307e-10, 1e-9);
}

TEST_CASE("norm decreases monotonically in N and stays positive") {
  double prev = 1e300;
  for (int N = 2; N <= 256; N *= 2) {
    auto config = ProblemConfig::create(1, N);
    double ns = error_norm_squared(config, weights_m1(N)).norm_sq;
    CHECK(ns > 0);
    CHECK(ns < prev);
    prev = ns;
  }
}

TEST_CASE("norm evaluation rejects weights off the constraint manifold") {
  auto config = ProblemConfig::create(3, 10);
  auto rule = dense_solve(config).rule;
  rule.weights[4] += 0.1;
  CHECK_THROWS_AS(error_norm_squared(config, rule), VerificationError);
}

TEST_CASE("exactness on the kernel family, all routes") {
  for (int m : {1, 3, 5}) {
    auto basis = exactness_basis(m);
    for (int N : {m, 10, 50}) {
      auto config = ProblemConfig::create(m, N);
      std::vector<QuadratureRule> rules = {dense_solve(config).rule,
                                           sobolev_solve(config).rule};
      if (m == 1) rules.push_back(weights_m1(N));
      if (m == 3) rules.push_back(weights_m3(N));
      for (const auto& rule : rules) {
        for (const auto& bf : basis) {
          double exact = basis_integral(bf);
          double got = apply(rule, [&](double x) { return bf.eval(x); });
          CHECK(std::abs(got - exact) <= 1e-10 * (1 + std::abs(exact)));
        }
      }
    }
  }
}

TEST_CASE("constants are not integrated exactly, but the defect shrinks") {
  double prev = 1e300;
  for (int N : {10, 20, 40}) {
    auto rule = weights_m1(N);
    double defect = std::abs(apply(rule, [](double) { return 1.0; }) - 1.0);
    CHECK(defect > 1e-13);  // polynomials are outside the kernel family
    CHECK(defect < prev);
    prev = defect;
  }
}

TEST_CASE("minimality probes: random feasible perturbations increase the norm") {
  for (int m : {1, 3}) {
    auto config = ProblemConfig::create(m, 10);
    auto rule = dense_solve(config).rule;
    auto rep = minimality_probe(config, rule, 100, 1e-3, 12345);
    CHECK(rep.trials == 100);
    CHECK(rep.violations == 0);
    CHECK(rep.min_increase > 0);
    CHECK(rep.stationarity <= 1e-8);
  }
}

TEST_CASE("probe determinism in the seed") {
  auto config = ProblemConfig::create(1, 8);
  auto rule = dense_solve(config).rule;
  auto a = minimality_probe(config, rule, 20, 1e-4, 99);
  auto b = minimality_probe(config, rule, 20, 1e-4, 99);
  CHECK(a.min_increase == b.min_increase);
  CHECK(a.stationarity == b.stationarity);
}

TEST_CASE("convergence study: decreasing norm with the expected slope") {
  auto fns = named_functions({"exp", "runge"});
  auto rows = convergence_study(1, {8, 16, 32, 64}, fns, "sobolev");
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].norm_sq < rows[i - 1].norm_sq);
    // norm_sq ~ N^{-2} for m = 1.
    CHECK(rows[i].loglog_slope < -1.5);
    CHECK(rows[i].loglog_slope > -2.5);
  }
  for (const auto& row : rows) {
    REQUIRE(row.function_errors.size() == 2);
    // The kernel-exponential exp(-x) must be integrated to machine accuracy.
    CHECK(row.function_errors[0] <= 1e-12);
    // The optimal rule is never worse than trapezoid on its own norm.
    CHECK(row.norm_sq <= row.trapezoid_projected_norm_sq * (1 + 1e-9));
  }
}
