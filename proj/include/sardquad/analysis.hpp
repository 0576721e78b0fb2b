#pragma once
// Error-functional norm evaluation, rule application, convergence studies,
// and optimality probes.

#include <functional>
#include <string>
#include <vector>

#include "sardquad/types.hpp"

namespace sardquad {

struct ErrorNormReport {
  double norm_sq = 0;        // term_linear - term_quadratic - term_constant
  double term_linear = 0;    // 2 sum_b C_b f_m(x_b)
  double term_quadratic = 0; // sum_b sum_g C_b C_g G_m(x_b - x_g)
  double term_constant = 0;  // double integral of G_m over [0,1]^2
};

// Residuals of the m exactness constraints at the given weights.
std::vector<double> constraint_residuals(const QuadratureRule& rule);

// Squared norm of the error functional. Valid only on the constraint
// manifold; weights violating the constraints beyond 1e-6 are rejected
// (VerificationError), violations beyond 1e-8 are accepted with the
// caller expected to know what they are doing.
ErrorNormReport error_norm_squared(const ProblemConfig& config,
                                   const QuadratureRule& rule);

// Same quadratic form evaluated at arbitrary weights (no constraint gate);
// used internally by the probes, which stay on the manifold by construction.
ErrorNormReport error_norm_squared_unchecked(const ProblemConfig& config,
                                             const std::vector<double>& weights);

double apply(const QuadratureRule& rule,
             const std::function<double(double)>& f);

struct ConvergenceRow {
  int N = 0;
  double norm_sq = 0;
  std::vector<double> function_errors;       // |rule(f) - integral f|
  std::vector<double> trapezoid_errors;      // same for trapezoid weights
  double trapezoid_projected_norm_sq = 0;    // after projection onto the
                                             // constraint manifold
  double loglog_slope = 0;                   // vs previous row; 0 for first
};

struct NamedFunction {
  std::string name;
  std::function<double(double)> f;
  double integral;  // exact integral over [0,1]
};

// Built-in test integrands selectable by name (exp, runge, cospi).
std::vector<NamedFunction> named_functions(const std::vector<std::string>& names);

std::vector<ConvergenceRow> convergence_study(
    int m, const std::vector<int>& Ns,
    const std::vector<NamedFunction>& fns, const std::string& method);

struct ProbeReport {
  int trials = 0;
  double min_increase = 0;   // smallest norm_sq increase over all probes
  int violations = 0;        // probes that decreased norm_sq beyond -1e-12
  double stationarity = 0;   // max |directional derivative| (finite diff)
};

// Random constraint-projected perturbations of magnitude `magnitude`;
// each must strictly increase norm_sq at an optimal rule.
ProbeReport minimality_probe(const ProblemConfig& config,
                             const QuadratureRule& rule, int trials,
                             double magnitude, unsigned long long seed);

}  // namespace sardquad
