#include "sardquad/dense_solver.hpp"

#include "sardquad/kernel.hpp"

namespace sardquad {

DenseSystem assemble(const ProblemConfig& config) {
  const int m = config.m, N = config.N;
  const wreal h = wreal(1) / N;
  DenseSystem sys;
  sys.config = config;
  sys.n = N + 1 + m;
  sys.matrix.assign(static_cast<size_t>(sys.n) * sys.n, 0);
  sys.rhs.assign(sys.n, 0);
  auto at = [&](int i, int j) -> wreal& { return sys.matrix[i * sys.n + j]; };

  for (int b = 0; b <= N; ++b) {
    for (int g = 0; g <= N; ++g) at(b, g) = wide::green_value(m, h * (b - g));
    sys.rhs[b] = wide::f_value(m, h * b);
  }
  for (int r = 0; r < m; ++r) {
    for (int b = 0; b <= N; ++b) {
      wreal v = wide::basis_eval(m, r, h * b);
      at(N + 1 + r, b) = v;
      at(b, N + 1 + r) = v;
    }
    sys.rhs[N + 1 + r] = wide::basis_integral(m, r);
  }
  return sys;
}

DenseSolution solve(const DenseSystem& sys) {
  const int n = sys.n, N = sys.config.N, m = sys.config.m;
  std::vector<wreal> A = sys.matrix;
  std::vector<wreal> x = sys.rhs;
  if (!lu_solve(A, x, n))
    throw DegeneracyError("dense KKT factorization is singular");

  DenseSolution out;
  out.condition_estimate = condition_estimate(sys.matrix, n);
  // Guard calibrated to the wide working precision (~1e-34): beyond 1e30
  // even the wide factorization has lost the solution.
  if (out.condition_estimate > 1e30)
    throw DegeneracyError("dense KKT system numerically singular (cond > 1e30)");

  wreal resid = 0, bnorm = 0;
  for (int i = 0; i < n; ++i) {
    wreal r = -sys.rhs[i];
    for (int j = 0; j < n; ++j) r += sys.matrix[i * n + j] * x[j];
    if (wabs(r) > resid) resid = wabs(r);
    if (wabs(sys.rhs[i]) > bnorm) bnorm = wabs(sys.rhs[i]);
  }
  out.residual = narrow(resid);
  out.accuracy_warning = resid > 1e-10 * bnorm;

  out.rule.config = sys.config;
  out.rule.method = "dense";
  out.rule.weights.resize(N + 1);
  for (int b = 0; b <= N; ++b) out.rule.weights[b] = narrow(x[b]);
  out.multipliers.d0 = narrow(x[N + 1]);
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    out.multipliers.d1.push_back(narrow(x[N + 1 + 2 * k - 1]));
    out.multipliers.d2.push_back(narrow(x[N + 1 + 2 * k]));
  }
  return out;
}

DenseSolution dense_solve(const ProblemConfig& config) {
  return solve(assemble(config));
}

}  // namespace sardquad
