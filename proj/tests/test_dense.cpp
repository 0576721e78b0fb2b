#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sardquad/analysis.hpp"
#include "sardquad/dense_solver.hpp"
#include "sardquad/kernel.hpp"

using namespace sardquad;

TEST_CASE("assembly: kernel block, basis rows, right-hand side") {
  auto config = ProblemConfig::create(1, 2);  // h = 1/2
  auto sys = assemble(config);
  REQUIRE(sys.n == 4);  // N+1 + m
  auto at = [&](int i, int j) { return narrow(sys.matrix[i * sys.n + j]); };

  // G block: G_1(h(i-j)) = sinh(|i-j| h)/2.
  CHECK(at(0, 0) == 0.0);
  CHECK(at(0, 1) == doctest::Approx(std::sinh(0.5) / 2).epsilon(1e-15));
  CHECK(at(0, 2) == doctest::Approx(std::sinh(1.0) / 2).epsilon(1e-15));
  CHECK(at(2, 1) == at(0, 1));

  // Constraint rows/columns: e^{-x_j}, symmetric placement.
  for (int j = 0; j <= 2; ++j) {
    CHECK(at(3, j) == doctest::Approx(std::exp(-0.5 * j)).epsilon(1e-15));
    CHECK(at(j, 3) == at(3, j));
  }
  CHECK(at(3, 3) == 0.0);

  // RHS: f_1 at the nodes, then the basis integral.
  CHECK(narrow(sys.rhs[1]) == doctest::Approx(f_value(1, 0.5)).epsilon(1e-15));
  CHECK(narrow(sys.rhs[3]) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("m=1 closed-form weights reproduced") {
  // N = 1: both weights (e-1)/(e+1).
  auto s1 = dense_solve(ProblemConfig::create(1, 1));
  const double w1 = 0.4621171572600097585023185;
  CHECK(s1.rule.weights[0] == doctest::Approx(w1).epsilon(1e-14));
  CHECK(s1.rule.weights[1] == doctest::Approx(w1).epsilon(1e-14));

  // General N: ends (e^h-1)/(e^h+1), interior twice that.
  auto s10 = dense_solve(ProblemConfig::create(1, 10));
  double eh = std::exp(0.1);
  double end = (eh - 1) / (eh + 1);
  CHECK(s10.rule.weights[0] == doctest::Approx(end).epsilon(1e-13));
  CHECK(s10.rule.weights[10] == doctest::Approx(end).epsilon(1e-13));
  for (int b = 1; b <= 9; ++b)
    CHECK(s10.rule.weights[b] == doctest::Approx(2 * end).epsilon(1e-13));
}

TEST_CASE("m=3 N=5: frozen weights, multipliers, constraint residuals") {
  auto sol = dense_solve(ProblemConfig::create(3, 5));
  const double w[6] = {0.07178772139757722937369174, 0.2429236505344242080024098,
                       0.1852742230831655326752492,  0.1852385929144359582801657,
                       0.2429737966993071990375909,  0.07180202469153221044073754};
  for (int b = 0; b <= 5; ++b)
    CHECK(sol.rule.weights[b] == doctest::Approx(w[b]).epsilon(1e-14));

  CHECK(sol.multipliers.d0 ==
        doctest::Approx(-0.00001315835117663294821220069).epsilon(1e-12));
  CHECK(sol.multipliers.d1[0] ==
        doctest::Approx(0.000008441107647808337508272084).epsilon(1e-12));
  CHECK(sol.multipliers.d2[0] ==
        doctest::Approx(-0.000006986746957524249878716423).epsilon(1e-12));

  for (double r : constraint_residuals(sol.rule)) CHECK(r <= 1e-12);
  CHECK(sol.residual <= 1e-12);
  CHECK(sol.condition_estimate > 0);
}

TEST_CASE("m=5 N=10: frozen weights") {
  auto sol = dense_solve(ProblemConfig::create(5, 10));
  const double w[11] = {
      0.03142904797391113402778132, 0.1410224742438970949282454,
      0.05438618183125633672575427, 0.1428920418201775275099641,
      0.06353699490900228367249096, 0.1334665073808484511436622,
      0.06353699704879909178633321, 0.1428920375785006242916331,
      0.05438618663051651775126127, 0.1410224826891710324588613,
      0.03142904789391969714345038};
  for (int b = 0; b <= 10; ++b)
    CHECK(sol.rule.weights[b] == doctest::Approx(w[b]).epsilon(1e-13));
  for (double r : constraint_residuals(sol.rule)) CHECK(r <= 1e-12);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(ProblemConfig::create(2, 10), UsageError);
  CHECK_THROWS_AS(ProblemConfig::create(-1, 10), UsageError);
  CHECK_THROWS_AS(ProblemConfig::create(5, 3), UsageError);  // N+1 < m
  CHECK_THROWS_AS(ProblemConfig::create(3, 0), UsageError);
  CHECK_NOTHROW(ProblemConfig::create(5, 4));  // N+1 = m is solvable
}
