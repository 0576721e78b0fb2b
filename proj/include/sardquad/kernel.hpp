#pragma once
// Green's function G_m of d^{2m}/dx^{2m} - 1, the exactness basis of
// W_2^{(m,0)} with its exact integrals over [0,1], and the right-hand-side
// functions f_m, Q, P consumed by the solvers.

#include <vector>

#include "sardquad/types.hpp"
#include "sardquad/wide.hpp"

namespace sardquad {

struct BasisFunction {
  enum Kind { PureExp, ExpCos, ExpSin };
  Kind kind;
  double a;  // exponent rate: e^{a x}
  double b;  // angular frequency (0 for PureExp)

  double eval(double x) const;
};

// G_m(x) = sgn(x)/(2m) * [sinh x + sum_{n=1}^{m-1} e^{x cos(pi n/m)}
//                                   cos(x sin(pi n/m) + pi n/m)],
// even, with sgn(0) = 0 so that G_m(0) = 0.
double green_value(int m, double x);

// The m functions e^{-x} and, for k = 1..(m-1)/2, the pair
// e^{-x cos(2 pi k/m)} cos(x sin(2 pi k/m)) / ... sin(...).
std::vector<BasisFunction> exactness_basis(int m);

// Exact integral of a basis member over [0,1].
double basis_integral(const BasisFunction& b);

// f_m(x) = integral_0^1 G_m(t - x) dt, in closed form for any real x.
double f_value(int m, double x);

// Q(x) = e^x (1 - 1/e)/2 + sum_k e^{x cos th_k} [cos(x sin th_k)
//        - e^{-cos th_k} cos((x-1) sin th_k)],  th_k = 2 pi k/m.
double q_value(int m, double x);

// P(x; d) = d0 e^{-x} + sum_k e^{-x cos th_k} [d1_k cos(x sin th_k)
//           + d2_k sin(x sin th_k)].
double p_value(int m, double x, const MultiplierSet& mult);

// Closed form of integral_0^1 integral_0^1 G_m(x - y) dx dy.
double green_double_integral(int m);

// Cancellation-free power-series forms, templated over the working scalar
// (wreal or the double-word dd::Real). All terms are nonnegative, so these
// are exact to working precision even where the exponential closed forms
// collapse by many orders of magnitude:
//   G_m(x)  = (1/2) sum_{q>=1} |x|^{2qm-1} / (2qm-1)!
//   f_m(x)  = (1/2) sum_{q>=1} (x^{2qm} + (1-x)^{2qm}) / (2qm)!,  x in [0,1]
//   int int G_m = sum_{q>=1} 1 / (2qm+1)!
// (Each follows by expanding the exponential sums; the angular sums kill
// every power except x^{2qm-1}.)
template <typename T>
T green_series(int m, T absx) {
  T term = 1;
  for (int i = 1; i < 2 * m; ++i) term = term * absx / T(i);
  T acc = term;
  int j = 2 * m - 1;
  for (int it = 0; it < 400; ++it) {
    for (int i = 1; i <= 2 * m; ++i) term = term * absx / T(j + i);
    j += 2 * m;
    T next = acc + term;
    if (next == acc) break;
    acc = next;
  }
  return acc / T(2);
}

template <typename T>
T f_series(int m, T x) {  // requires x in [0, 1]
  T a = ipow(x, 2 * m), b = ipow(T(1) - x, 2 * m);
  T fact = 1;
  for (int i = 1; i <= 2 * m; ++i) fact = fact * T(i);
  T pa = a, pb = b, acc = (pa + pb) / fact;
  int j = 2 * m;
  for (int it = 0; it < 400; ++it) {
    pa = pa * a;
    pb = pb * b;
    for (int i = 1; i <= 2 * m; ++i) fact = fact * T(j + i);
    j += 2 * m;
    T next = acc + (pa + pb) / fact;
    if (next == acc) break;
    acc = next;
  }
  return acc / T(2);
}

// Wide-precision internals shared by the solvers.
namespace wide {
wreal green_value(int m, wreal x);
wreal f_value(int m, wreal x);
wreal basis_eval(int m, int idx, wreal x);   // idx in 0..m-1, spec order
wreal basis_integral(int m, int idx);
wreal green_double_integral(int m);

// Q and the multiplier basis of P as complex exponential term lists:
// the represented function is x -> Re(sum_t w_t e^{mu_t x}).
struct ExpTerm {
  wcomplex w;
  wcomplex mu;
};
std::vector<ExpTerm> q_terms(int m);
// Term list of the basis function multiplying the idx-th multiplier
// (idx 0 -> d0, then alternating d1_k, d2_k).
ExpTerm p_term(int m, int idx);
}  // namespace wide

}  // namespace sardquad
