#pragma once
// Double-word extension of the wide scalar (~66 decimal digits). The
// discrete-operator coefficients collapse from O(h) down to O(h^(2m-1)),
// and the weight convolutions collapse by a similar factor again, so at
// m = 5 on fine grids even __float128 runs out of headroom. The classic
// error-free transformations (two_sum / fma-based two_prod) give an
// unevaluated hi + lo pair with |lo| <= ulp(hi)/2.
//
// Only the operations the solvers need are provided: field arithmetic,
// complex arithmetic, and elementary functions on the small arguments
// (|x| < ~3.2) that appear in the operator coefficients.

#include <vector>

#include "sardquad/wide.hpp"

namespace sardquad {
namespace dd {

struct Real {
  wreal hi = 0;
  wreal lo = 0;
  Real() = default;
  Real(int v) : hi(v), lo(0) {}                 // NOLINT: implicit by design
  Real(long v) : hi(v), lo(0) {}                // NOLINT
  Real(wreal v) : hi(v), lo(0) {}               // NOLINT
  Real(wreal h, wreal l) : hi(h), lo(l) {}
};

inline void two_sum(wreal a, wreal b, wreal& s, wreal& e) {
  s = a + b;
  wreal bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(wreal a, wreal b, wreal& s, wreal& e) {
  s = a + b;
  e = b - (s - a);
}

inline void two_prod(wreal a, wreal b, wreal& p, wreal& e) {
  p = a * b;
  e = fmaq(a, b, -p);
}

inline Real operator+(Real a, Real b) {
  wreal s1, s2, t1, t2;
  two_sum(a.hi, b.hi, s1, s2);
  two_sum(a.lo, b.lo, t1, t2);
  s2 += t1;
  quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  quick_two_sum(s1, s2, s1, s2);
  return {s1, s2};
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
  wreal p1, p2;
  two_prod(a.hi, b.hi, p1, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  quick_two_sum(p1, p2, p1, p2);
  return {p1, p2};
}

inline Real operator/(Real a, Real b) {
  wreal q1 = a.hi / b.hi;
  Real r = a - b * Real(q1);
  wreal q2 = (r.hi + r.lo) / b.hi;
  r = r - b * Real(q2);
  wreal q3 = (r.hi + r.lo) / b.hi;
  wreal s, e;
  quick_two_sum(q1, q2, s, e);
  Real out{s, e};
  return out + Real(q3);
}

inline Real& operator+=(Real& a, Real b) { return a = a + b; }
inline Real& operator-=(Real& a, Real b) { return a = a - b; }
inline Real& operator*=(Real& a, Real b) { return a = a * b; }
inline Real& operator/=(Real& a, Real b) { return a = a / b; }

inline bool operator<(Real a, Real b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(Real a, Real b) { return b < a; }
inline bool operator==(Real a, Real b) { return a.hi == b.hi && a.lo == b.lo; }

inline Real fabs(Real a) { return a.hi < 0 ? -a : a; }
inline wreal to_wide(Real a) { return a.hi + a.lo; }
inline double to_double(Real a) { return static_cast<double>(a.hi); }

struct Complex {
  Real re, im;
  Complex() = default;
  Complex(int v) : re(v), im(0) {}              // NOLINT: implicit by design
  Complex(Real r) : re(r), im(0) {}             // NOLINT
  Complex(Real r, Real i) : re(r), im(i) {}
};

inline Complex operator+(Complex a, Complex b) {
  return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(Complex a) { return {-a.re, -a.im}; }
inline Complex operator-(Complex a, Complex b) { return a + (-b); }
inline Complex operator*(Complex a, Complex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator/(Complex a, Complex b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex& operator+=(Complex& a, Complex b) { return a = a + b; }
inline Complex& operator-=(Complex& a, Complex b) { return a = a - b; }
inline Complex& operator*=(Complex& a, Complex b) { return a = a * b; }
inline Complex conj(Complex a) { return {a.re, -a.im}; }
// Magnitude estimate; full double-word accuracy is never needed where
// this is used (pivoting, convergence checks, root classification).
inline double abs_estimate(Complex a) {
  double x = to_double(a.re), y = to_double(a.im);
  return std::sqrt(x * x + y * y);
}

inline Real pi() {
  return {3.14159265358979323846264338327950288Q,
          8.67181013012378102479704402604335197e-35Q};
}

// Elementary functions by direct Taylor summation. Valid (and used) only
// for |x| < ~3.2 where the series loses at most a digit to alternation.
Real exp(Real x);
Real sin(Real x);
Real cos(Real x);
Real sinh(Real x);
Real cosh(Real x);
inline Complex exp(Complex z) {
  Real e = exp(z.re);
  return {e * cos(z.im), e * sin(z.im)};
}

// Partial-pivoted LU solve of a dense n x n double-word system; A is
// row-major and overwritten, b receives the solution.
bool lu_solve(std::vector<Real>& A, std::vector<Real>& b, int n);

}  // namespace dd
}  // namespace sardquad
