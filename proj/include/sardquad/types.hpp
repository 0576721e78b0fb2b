#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sardquad {

// Thrown when a requested configuration violates the solvability rules
// (even m, N+1 < m, bad step, ...). Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown on numerical degeneracy (singular factorization, root of the
// characteristic polynomial too close to the unit circle, non-convergent
// tail, ...). Maps to CLI exit code 3.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a cross-check requested by the caller fails (oracle
// disagreement, constraint violation beyond tolerance). CLI exit code 4.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProblemConfig {
  int m = 1;   // space order, odd
  int N = 1;   // number of intervals; nodes are x_beta = h*beta, beta = 0..N
  double h = 1.0;

  static ProblemConfig create(int m, int N) {
    if (m < 1 || m % 2 == 0) throw UsageError("m must be odd and >= 1");
    if (N < 1) throw UsageError("N must be >= 1");
    if (N + 1 < m) throw UsageError("need N+1 >= m for solvability");
    return ProblemConfig{m, N, 1.0 / N};
  }
};

struct MultiplierSet {
  double d0 = 0.0;
  std::vector<double> d1, d2;  // (m-1)/2 entries each

  int count() const { return 1 + static_cast<int>(d1.size() + d2.size()); }
};

struct QuadratureRule {
  ProblemConfig config;
  std::vector<double> weights;  // C_beta, beta = 0..N
  std::string method;           // dense | sobolev | closed-form-m1 | closed-form-m3

  double node(int beta) const { return config.h * beta; }
};

}  // namespace sardquad
