#include "sardquad/ddreal.hpp"

#include <cmath>

namespace sardquad {
namespace dd {

namespace {

// Taylor series with the term recurrence term *= x^step / (...), starting
// from term = x^start / start!. Covers exp/sin/cos/sinh/cosh on the small
// arguments the solvers use; stops when a term stops moving the sum.
Real series_sum(Real x, int start, int step, bool alternating) {
  Real term = 1;
  for (int i = 1; i <= start; ++i) term = term * x / Real(i);
  Real acc = term;
  int j = start;
  for (int it = 0; it < 200; ++it) {
    for (int i = 1; i <= step; ++i) term = term * x / Real(j + i);
    j += step;
    if (alternating) term = -term;
    Real next = acc + term;
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

}  // namespace

Real exp(Real x) { return series_sum(x, 0, 1, false); }
Real sinh(Real x) { return series_sum(x, 1, 2, false); }
Real cosh(Real x) { return series_sum(x, 0, 2, false); }
Real sin(Real x) { return series_sum(x, 1, 2, true); }
Real cos(Real x) { return series_sum(x, 0, 2, true); }

bool lu_solve(std::vector<Real>& A, std::vector<Real>& b, int n) {
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int best = col;
    Real bestmag = fabs(A[piv[col] * n + col]);
    for (int r = col + 1; r < n; ++r) {
      Real mag = fabs(A[piv[r] * n + col]);
      if (bestmag < mag) {
        bestmag = mag;
        best = r;
      }
    }
    if (bestmag.hi == 0) return false;
    std::swap(piv[col], piv[best]);
    const int pr = piv[col];
    for (int r = col + 1; r < n; ++r) {
      const int rr = piv[r];
      Real f = A[rr * n + col] / A[pr * n + col];
      A[rr * n + col] = f;
      for (int c = col + 1; c < n; ++c)
        A[rr * n + c] -= f * A[pr * n + c];
      b[rr] -= f * b[pr];
    }
  }
  std::vector<Real> x(n);
  for (int r = n - 1; r >= 0; --r) {
    Real acc = b[piv[r]];
    for (int c = r + 1; c < n; ++c) acc -= A[piv[r] * n + c] * x[c];
    x[r] = acc / A[piv[r] * n + r];
  }
  b = std::move(x);
  return true;
}

}  // namespace dd
}  // namespace sardquad
