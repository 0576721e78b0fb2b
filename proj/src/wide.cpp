#include "sardquad/wide.hpp"

#include <cstdlib>

namespace sardquad {

namespace {

// In-place partial-pivot LU; perm receives the row permutation.
bool lu_factor(std::vector<wreal>& A, std::vector<int>& perm, int n) {
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    wreal best = wabs(A[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      wreal v = wabs(A[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) return false;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A[col * n + j], A[piv * n + j]);
      std::swap(perm[col], perm[piv]);
    }
    wreal d = A[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      wreal f = A[r * n + col] / d;
      A[r * n + col] = f;
      if (f != 0) {
        for (int j = col + 1; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
      }
    }
  }
  return true;
}

void lu_apply(const std::vector<wreal>& LU, const std::vector<int>& perm,
              std::vector<wreal>& b, int n, bool transpose) {
  std::vector<wreal> x(n);
  if (!transpose) {
    for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= LU[i * n + j] * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= LU[i * n + j] * x[j];
      x[i] /= LU[i * n + i];
    }
    b = x;
  } else {
    // Solve A^T y = b:  U^T z = b, then L^T w = z, then y = P^T w.
    x = b;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) x[i] -= LU[j * n + i] * x[j];
      x[i] /= LU[i * n + i];
    }
    for (int i = n - 1; i >= 0; --i)
      for (int j = i + 1; j < n; ++j) x[i] -= LU[j * n + i] * x[j];
    for (int i = 0; i < n; ++i) b[perm[i]] = x[i];
  }
}

}  // namespace

bool lu_solve(std::vector<wreal>& A, std::vector<wreal>& b, int n) {
  std::vector<int> perm;
  if (!lu_factor(A, perm, n)) return false;
  lu_apply(A, perm, b, n, false);
  return true;
}

double condition_estimate(const std::vector<wreal>& A, int n) {
  wreal norm_a = 0;
  for (int i = 0; i < n; ++i) {
    wreal row = 0;
    for (int j = 0; j < n; ++j) row += wabs(A[i * n + j]);
    if (row > norm_a) norm_a = row;
  }
  std::vector<wreal> LU = A;
  std::vector<int> perm;
  if (!lu_factor(LU, perm, n)) return 1e300;

  // Hager-style estimate of ||A^-1||_1 (equals ||A^-T||_inf); two sweeps.
  std::vector<wreal> x(n, wreal(1) / n);
  wreal est = 0;
  for (int iter = 0; iter < 3; ++iter) {
    std::vector<wreal> y = x;
    lu_apply(LU, perm, y, n, false);
    wreal norm1 = 0;
    for (int i = 0; i < n; ++i) norm1 += wabs(y[i]);
    est = norm1 > est ? norm1 : est;
    std::vector<wreal> z(n);
    for (int i = 0; i < n; ++i) z[i] = (y[i] >= 0) ? 1 : -1;
    lu_apply(LU, perm, z, n, true);
    int jmax = 0;
    wreal zmax = 0;
    for (int i = 0; i < n; ++i)
      if (wabs(z[i]) > zmax) {
        zmax = wabs(z[i]);
        jmax = i;
      }
    wreal dot = 0;
    for (int i = 0; i < n; ++i) dot += z[i] * x[i];
    if (zmax <= dot) break;
    for (int i = 0; i < n; ++i) x[i] = 0;
    x[jmax] = 1;
  }
  return narrow(norm_a * est);
}

}  // namespace sardquad
