#pragma once
// Sobolev's algorithm: extend the node function u_m outside [0,1] with the
// split-multiplier ansatz, pin the 2m free parameters by requiring
// (D_m * u_m)(beta) = 0 just outside the node range, then recover the
// weights as C_beta = (D_m * u_m)(beta). Linear in N.

#include <vector>

#include "sardquad/discrete_operator.hpp"
#include "sardquad/types.hpp"
#include "sardquad/wide.hpp"

namespace sardquad {

struct SplitMultipliers {
  std::vector<wreal> dminus;  // m entries: d0^-, d1_k^-, d2_k^-
  std::vector<wreal> dplus;   // m entries: d0^+, d1_k^+, d2_k^+

  // Recombination d = (d^+ + d^-)/2 reproduces the Lagrange multipliers.
  MultiplierSet recombined(int m) const;
};

struct UFunction {
  ProblemConfig config;
  const DiscreteOperator* op = nullptr;
  std::vector<wreal> f;  // f_m(h beta), beta = 0..N
  SplitMultipliers mult;

  double value(int beta) const;
  wreal wvalue(int beta) const;
};

// Solves the 2m boundary equations at beta = -1..-m and N+1..N+m.
SplitMultipliers solve_boundary(const ProblemConfig& config,
                                const DiscreteOperator& op);

UFunction build_u(const ProblemConfig& config, const DiscreteOperator& op);

struct SobolevSolution {
  QuadratureRule rule;
  MultiplierSet multipliers;
};

SobolevSolution sobolev_solve(const ProblemConfig& config,
                              const DiscreteOperator& op);
// Convenience: builds the operator internally.
SobolevSolution sobolev_solve(const ProblemConfig& config);

// Brute-force truncated-tail evaluation of C_beta (cross-check path for the
// analytic geometric tails; slow, test use only).
double weight_by_truncation(const UFunction& u, int beta, int window);

}  // namespace sardquad
