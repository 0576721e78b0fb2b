#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sardquad/kernel.hpp"

using namespace sardquad;

namespace {

// Adaptive Simpson quadrature (for independent cross-checks only).
double simpson(const std::function<double(double)>& f, double a, double b) {
  double c = (a + b) / 2;
  return (b - a) / 6 * (f(a) + 4 * f(c) + f(b));
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double whole, double tol, int depth) {
  double c = (a + b) / 2;
  double left = simpson(f, a, c), right = simpson(f, c, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return adaptive(f, a, c, left, tol / 2, depth - 1) +
         adaptive(f, c, b, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13) {
  return adaptive(f, a, b, simpson(f, a, b), tol, 40);
}

}  // namespace

TEST_CASE("Green's function: frozen reference values") {
  // 60-digit reference values.
  CHECK(green_value(3, 0.3) ==
        doctest::Approx(0.00001012500002218952922259458).epsilon(1e-14));
  CHECK(green_value(5, 0.3) ==
        doctest::Approx(2.712053571428571476344066e-11).epsilon(1e-14));
  // m = 1: G_1(x) = sinh|x| / 2.
  CHECK(green_value(1, 0.5) ==
        doctest::Approx(std::sinh(0.5) / 2).epsilon(1e-15));
  CHECK(green_value(1, -0.5) ==
        doctest::Approx(std::sinh(0.5) / 2).epsilon(1e-15));
}

TEST_CASE("Green's function: G(0) = 0 and evenness") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int m : {1, 3, 5}) {
    CHECK(green_value(m, 0.0) == 0.0);
    for (int i = 0; i < 1000; ++i) {
      double x = dist(rng);
      double gp = green_value(m, x), gm = green_value(m, -x);
      CHECK(std::abs(gp - gm) <= 1e-14 * (1 + std::abs(gp)));
    }
  }
}

TEST_CASE("series forms agree with the double entry points") {
  for (int m : {1, 3, 5}) {
    for (double x : {0.05, 0.3, 0.77, 1.9}) {
      CHECK(green_series<double>(m, x) ==
            doctest::Approx(green_value(m, x)).epsilon(1e-14));
    }
    for (double x : {0.0, 0.25, 0.5, 0.99}) {
      CHECK(f_series<double>(m, x) ==
            doctest::Approx(f_value(m, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("f_m: frozen values and quadrature cross-check") {
  CHECK(f_value(3, 0.25) ==
        doctest::Approx(0.0001237657665719822757538628).epsilon(1e-13));
  CHECK(f_value(5, 0.7) ==
        doctest::Approx(3.892943920855543174498871e-9).epsilon(1e-12));

  // f_m(x) = int_0^1 G_m(t - x) dt for x inside and outside [0, 1].
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 3.0);
  for (int m : {1, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      double x = dist(rng);
      double ref = integrate(
          [&](double t) { return green_value(m, t - x); }, 0.0, 1.0);
      CHECK(std::abs(f_value(m, x) - ref) <= 1e-11 * (1 + std::abs(ref)));
    }
  }
}

TEST_CASE("exactness basis: count, structure, exact integrals") {
  for (int m : {1, 3, 5}) {
    auto basis = exactness_basis(m);
    REQUIRE(int(basis.size()) == m);
    CHECK(basis[0].kind == BasisFunction::PureExp);
    for (const auto& bf : basis) {
      double ref = integrate([&](double x) { return bf.eval(x); }, 0.0, 1.0);
      CHECK(basis_integral(bf) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
  // Frozen m = 5 integrals in spec order.
  auto b5 = exactness_basis(5);
  const double ref[5] = {0.6321205588285576784044762, 0.7456297187436574683940285,
                         0.3608257041179363691742836, 1.434837842249992946901431,
                         0.4967846175974842840270299};
  for (int i = 0; i < 5; ++i)
    CHECK(basis_integral(b5[i]) == doctest::Approx(ref[i]).epsilon(1e-14));
}

TEST_CASE("Q and P right-hand-side functions") {
  CHECK(q_value(3, -0.2) ==
        doctest::Approx(0.4238006338851372168473614).epsilon(1e-14));
  // m = 1: Q(x) = e^x (1 - 1/e)/2.
  CHECK(q_value(1, 0.4) ==
        doctest::Approx(std::exp(0.4) * (1 - std::exp(-1.0)) / 2)
            .epsilon(1e-15));

  // P against its printed expansion at m = 3.
  MultiplierSet mult;
  mult.d0 = 1.25;
  mult.d1 = {0.5};
  mult.d2 = {-0.25};
  double x = 0.3, th = 2 * M_PI / 3;
  double expect = mult.d0 * std::exp(-x) +
                  std::exp(-x * std::cos(th)) *
                      (mult.d1[0] * std::cos(x * std::sin(th)) +
                       mult.d2[0] * std::sin(x * std::sin(th)));
  CHECK(p_value(3, x, mult) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("double integral of G_m over the unit square") {
  // Frozen series values; m = 1 closed form is sinh(1) - 1.
  CHECK(green_double_integral(1) ==
        doctest::Approx(0.1752011936438014568823819).epsilon(1e-15));
  CHECK(green_double_integral(1) ==
        doctest::Approx(std::sinh(1.0) - 1.0).epsilon(1e-15));
  CHECK(green_double_integral(3) ==
        doctest::Approx(0.0001984128590031450015498698).epsilon(1e-15));
  CHECK(green_double_integral(5) ==
        doctest::Approx(2.50521083854612917161155e-8).epsilon(1e-15));

  // Independent 2D cross-check via iterated adaptive quadrature.
  for (int m : {1, 3}) {
    double ref = integrate(
        [&](double x) {
          return integrate(
              [&](double y) { return green_value(m, x - y); }, 0.0, 1.0,
              1e-14);
        },
        0.0, 1.0, 1e-13);
    CHECK(green_double_integral(m) == doctest::Approx(ref).epsilon(1e-10));
  }
}
