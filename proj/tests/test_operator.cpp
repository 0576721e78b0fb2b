#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sardquad/discrete_operator.hpp"

using namespace sardquad;

TEST_CASE("m=1: three-point operator in closed form") {
  double h = 0.1;
  auto op = build_operator(1, h);
  CHECK(op.value(0) ==
        doctest::Approx(-2 * std::cosh(h) / std::sinh(h)).epsilon(1e-14));
  CHECK(op.value(1) == doctest::Approx(1 / std::sinh(h)).epsilon(1e-14));
  CHECK(op.value(-1) == op.value(1));
  for (int b = 2; b <= 20; ++b)
    CHECK(std::abs(op.value(b)) <= 1e-25 * std::abs(op.value(0)));
}

TEST_CASE("m=3 h=0.1: frozen operator values") {
  auto op = build_operator(3, 0.1);
  const double ref[4] = {-10386929.78543708351666191, 8775937.355820486425110205,
                         -5405691.548651739159162445, 2620349.103528354199018588};
  for (int b = 0; b < 4; ++b)
    CHECK(op.value(b) == doctest::Approx(ref[b]).epsilon(1e-13));
  // Structural evenness.
  for (int b = 1; b < 4; ++b) CHECK(op.value(-b) == op.value(b));
}

TEST_CASE("delta identity: D * G = delta") {
  for (int m : {1, 3, 5}) {
    double tol = m >= 5 ? 1e-8 : 1e-9;
    for (double h : {0.2, 0.1, 0.05}) {
      auto op = build_operator(m, h);
      CHECK(verify_delta(op, 30) <= tol);
    }
  }
}

TEST_CASE("annihilation: D kills the kernel exponential-trigonometric family") {
  for (int m : {1, 3, 5}) {
    double tol = m >= 5 ? 1e-8 : 1e-9;
    for (double h : {0.2, 0.1, 0.05}) {
      auto op = build_operator(m, h);
      CHECK(verify_annihilation(op, 30) <= tol);
    }
  }
}

TEST_CASE("root structure for m > 1") {
  for (int m : {3, 5}) {
    for (double h : {0.2, 0.05, 0.01}) {
      auto op = build_operator(m, h);
      REQUIRE(int(op.lambda.size()) == m - 1);
      REQUIRE(int(op.A.size()) == m - 1);
      for (auto lam : op.lambda) CHECK(narrow(wabs(lam)) < 1.0);
      CHECK(op.max_root_modulus < 1.0);
      CHECK(reciprocal_residual(op) <= 1e-10);
      CHECK(max_imag_residual(op, 200) <= 1e-10);
      CHECK(decay_bound_excess(op, 100) <= 1.0);
    }
  }
}

TEST_CASE("characteristic polynomial is palindromic with leading coefficient K") {
  for (int m : {3, 5}) {
    auto op = build_operator(m, 0.1);
    int deg = int(op.polyP.size()) - 1;
    REQUIRE(deg == 2 * m - 2);
    CHECK(narrow(wabs(op.polyP[0] - op.K)) <=
          1e-30 * std::abs(narrow(op.K)));
    for (int i = 0; i <= deg; ++i)
      CHECK(narrow(wabs(op.polyP[i] - op.polyP[deg - i])) <=
            1e-25 * narrow(wabs(op.polyP[i])) + 1e-40);
  }
}
