#include "sardquad/kernel.hpp"

#include <cmath>

namespace sardquad {

namespace wide {

wreal green_value(int m, wreal x) {
  return green_series(m, x < 0 ? -x : x);
}

namespace {

// H(y) = integral_0^y G_m = (1/2) sum_{q>=1} y^{2qm} / (2qm)!, y >= 0.
wreal green_antideriv(int m, wreal y) {
  wreal term = 1;
  for (int i = 1; i <= 2 * m; ++i) term = term * y / i;
  wreal acc = term;
  int j = 2 * m;
  for (int it = 0; it < 400; ++it) {
    for (int i = 1; i <= 2 * m; ++i) term = term * y / (j + i);
    j += 2 * m;
    wreal next = acc + term;
    if (next == acc) break;
    acc = next;
  }
  return acc / 2;
}

}  // namespace

wreal f_value(int m, wreal x) {
  // integral_0^1 G_m(t - x) dt, split at t = x when the kink is interior.
  if (x >= 0 && x <= 1) return f_series(m, x);
  if (x < 0) return green_antideriv(m, 1 - x) - green_antideriv(m, -x);
  return green_antideriv(m, x) - green_antideriv(m, x - 1);
}

wreal basis_eval(int m, int idx, wreal x) {
  if (idx == 0) return wexp(-x);
  int k = (idx + 1) / 2;
  wreal th = 2 * kWidePi * k / m;
  wreal e = wexp(-x * wcos(th));
  return (idx % 2 == 1) ? e * wcos(x * wsin(th)) : e * wsin(x * wsin(th));
}

wreal basis_integral(int m, int idx) {
  if (idx == 0) return 1 - wexp(wreal(-1));
  int k = (idx + 1) / 2;
  wreal th = 2 * kWidePi * k / m;
  wreal c = wcos(th), s = wsin(th);
  if (idx % 2 == 1) return c - wexp(-c) * wcos(s + th);
  return s - wexp(-c) * wsin(s + th);
}

wreal green_double_integral(int m) {
  wreal fact = 1, acc = 0;
  int j = 0;
  for (int it = 0; it < 400; ++it) {
    for (int i = 1; i <= 2 * m; ++i) fact = fact * (j + i);
    j += 2 * m;
    wreal next = acc + 1 / (fact * (j + 1));
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

std::vector<ExpTerm> q_terms(int m) {
  std::vector<ExpTerm> out;
  out.push_back({wc((1 - wexp(wreal(-1))) / 2, 0), wc(1, 0)});
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    wreal th = 2 * kWidePi * k / m;
    wcomplex mu = wc(wcos(th), wsin(th));
    out.push_back({wc(1, 0) - wexp(-mu), mu});
  }
  return out;
}

ExpTerm p_term(int m, int idx) {
  if (idx == 0) return {wc(1, 0), wc(-1, 0)};
  int k = (idx + 1) / 2;
  wreal th = 2 * kWidePi * k / m;
  wcomplex nu = wc(-wcos(th), wsin(th));
  // cos part is Re e^{nu x}; sin part is Im e^{nu x} = Re(-i e^{nu x}).
  if (idx % 2 == 1) return {wc(1, 0), nu};
  return {wc(0, -1), nu};
}

}  // namespace wide

double BasisFunction::eval(double x) const {
  switch (kind) {
    case PureExp:
      return std::exp(a * x);
    case ExpCos:
      return std::exp(a * x) * std::cos(b * x);
    default:
      return std::exp(a * x) * std::sin(b * x);
  }
}

double green_value(int m, double x) {
  return narrow(wide::green_value(m, wreal(x)));
}

std::vector<BasisFunction> exactness_basis(int m) {
  std::vector<BasisFunction> out;
  out.push_back({BasisFunction::PureExp, -1.0, 0.0});
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    double th = 2 * M_PI * k / m;
    out.push_back({BasisFunction::ExpCos, -std::cos(th), std::sin(th)});
    out.push_back({BasisFunction::ExpSin, -std::cos(th), std::sin(th)});
  }
  return out;
}

double basis_integral(const BasisFunction& b) {
  if (b.kind == BasisFunction::PureExp) return 1.0 - std::exp(-1.0);
  // b.a = -cos th, b.b = sin th for some th; integrate e^{ax}cos/sin(bx).
  double c = -b.a, s = b.b;
  double th = std::atan2(s, c);
  if (b.kind == BasisFunction::ExpCos)
    return c - std::exp(-c) * std::cos(s + th);
  return s - std::exp(-c) * std::sin(s + th);
}

double f_value(int m, double x) { return narrow(wide::f_value(m, wreal(x))); }

double q_value(int m, double x) {
  wreal acc = 0;
  for (const auto& t : wide::q_terms(m)) acc += wre(t.w * wexp(t.mu * wc(x, 0)));
  return narrow(acc);
}

double p_value(int m, double x, const MultiplierSet& mult) {
  if (mult.count() != m) throw UsageError("multiplier count must equal m");
  double acc = mult.d0 * std::exp(-x);
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    double th = 2 * M_PI * k / m;
    double e = std::exp(-x * std::cos(th));
    acc += e * (mult.d1[k - 1] * std::cos(x * std::sin(th)) +
                mult.d2[k - 1] * std::sin(x * std::sin(th)));
  }
  return acc;
}

double green_double_integral(int m) {
  return narrow(wide::green_double_integral(m));
}

}  // namespace sardquad
