#pragma once
// Wide scalar used internally by the solvers. The KKT systems here have
// condition numbers growing like N^(2m) and the discrete-operator scalars
// arise from cancellation of O(h) quantities down to O(h^(2m-1)), so plain
// double cannot reach the target tolerances for m >= 3 at fine steps.
// __float128 (quadmath) gives ~33 decimal digits, which is enough with a
// wide margin; the public API stays in double.

#include <quadmath.h>

#include <cmath>
#include <string>
#include <vector>

namespace sardquad {

using wreal = __float128;
using wcomplex = __complex128;

inline wreal wexp(wreal x) { return expq(x); }
inline wreal wsin(wreal x) { return sinq(x); }
inline wreal wcos(wreal x) { return cosq(x); }
inline wreal wsinh(wreal x) { return sinhq(x); }
inline wreal wcosh(wreal x) { return coshq(x); }
inline wreal wsqrt(wreal x) { return sqrtq(x); }
inline wreal wabs(wreal x) { return fabsq(x); }

inline wcomplex wc(wreal re, wreal im = 0) {
  wcomplex z;
  __real__ z = re;
  __imag__ z = im;
  return z;
}
inline wreal wre(wcomplex z) { return crealq(z); }
inline wreal wim(wcomplex z) { return cimagq(z); }
inline wreal wabs(wcomplex z) { return cabsq(z); }
inline wcomplex wconj(wcomplex z) { return conjq(z); }
inline wcomplex wexp(wcomplex z) { return cexpq(z); }

constexpr wreal kWidePi = 3.14159265358979323846264338327950288Q;

// x^n for integer n >= 0 by binary exponentiation.
template <typename T>
T ipow(T x, long n) {
  T r = 1;
  while (n > 0) {
    if (n & 1) r = r * x;
    x = x * x;
    n >>= 1;
  }
  return r;
}

inline double narrow(wreal x) { return static_cast<double>(x); }

// Partial-pivoted LU solve of a dense n x n system in the wide scalar.
// A is row-major and is overwritten; b is overwritten with the solution.
// Returns false if a pivot degenerates to zero.
bool lu_solve(std::vector<wreal>& A, std::vector<wreal>& b, int n);

// Infinity-norm condition estimate for the same system (Hager-style probe
// using an extra factorization; cheap at the sizes used here).
double condition_estimate(const std::vector<wreal>& A, int n);

}  // namespace sardquad
