#pragma once
// Direct dense solve of the discrete Wiener-Hopf KKT system
//   [G  E^T] [C]   [f]
//   [E   0 ] [d] = [g]
// with G_{bg} = G_m(h(b-g)), E the basis functions sampled at the nodes.
// Serves as the ground-truth oracle for the other solvers.

#include <vector>

#include "sardquad/types.hpp"
#include "sardquad/wide.hpp"

namespace sardquad {

struct DenseSystem {
  ProblemConfig config;
  int n = 0;                  // N + 1 + m
  std::vector<wreal> matrix;  // row-major n x n
  std::vector<wreal> rhs;
};

struct DenseSolution {
  QuadratureRule rule;
  MultiplierSet multipliers;
  double condition_estimate = 0.0;
  double residual = 0.0;        // max |A x - b| over rows
  bool accuracy_warning = false;
};

DenseSystem assemble(const ProblemConfig& config);
DenseSolution solve(const DenseSystem& sys);

// Convenience: assemble + solve.
DenseSolution dense_solve(const ProblemConfig& config);

}  // namespace sardquad
