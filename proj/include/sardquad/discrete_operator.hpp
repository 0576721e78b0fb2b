#pragma once
// Discrete analogue D_m(h beta) of d^{2m}/dx^{2m} - 1 on the grid:
// the grid function satisfying D_m * G_m = delta. Built from the
// generating coefficients a_{1,k}, a_{2,k}, b_{1,k}, b_{2,k}, the
// characteristic polynomial P_{2m-2}, and its roots inside the unit disk.

#include <complex>
#include <vector>

#include "sardquad/ddreal.hpp"
#include "sardquad/types.hpp"
#include "sardquad/wide.hpp"

namespace sardquad {

struct DiscreteOperator {
  int m = 1;
  double h = 0.0;

  // Double-word originals of the step and the solver-critical data. The
  // operator construction cancels ~2m-1 orders in h, and the downstream
  // weight convolutions cancel a comparable factor again, so the spectral
  // data is built and kept at double-word precision; the wreal members
  // below are rounded views for the verification / reporting paths.
  dd::Real h_dd;
  dd::Real K_dd, K1_dd, M1_dd;
  std::vector<dd::Complex> lambda_dd, A_dd;

  // Generating coefficients, k = 1..(m-1)/2 (index 0 unused-free storage).
  std::vector<wreal> a1, a2, b1, b2;

  wreal K = 0, K1 = 0, M1 = 0;
  std::vector<wreal> polyB;  // B_{2m-2}, descending, palindromic
  std::vector<wreal> polyP;  // P_{2m-2}, descending, leading coefficient K

  // The m-1 roots with |lambda| < 1 and their amplitudes.
  std::vector<wcomplex> lambda;
  std::vector<wcomplex> A;

  double max_root_modulus = 0.0;

  // D_m(h beta); evenness is structural (only |beta| enters).
  double value(int beta) const;
  wreal wvalue(int beta) const;

  std::vector<std::complex<double>> roots() const;
};

DiscreteOperator build_operator(int m, dd::Real h);
inline DiscreteOperator build_operator(int m, double h) {
  return build_operator(m, dd::Real(wreal(h)));
}

// max over |beta| <= window of |sum_g D_m(hg) G_m(h(beta-g)) - delta_{b0}|,
// with the g-sum truncated adaptively on the exponential-decay bound.
double verify_delta(const DiscreteOperator& op, int window);

// max over beta = 0..max_beta of |Im raw| / (1 + |Re raw|) where raw is the
// complex amplitude sum before the real part is taken.
double max_imag_residual(const DiscreteOperator& op, int max_beta);

// max over beta in [2, max_beta] of |D(beta)| / ((m/|K|) sum|A_n| rho^(beta-1))
// with rho = max root modulus + 1e-12 (exponential-decay bound; <= 1 when it
// holds).
double decay_bound_excess(const DiscreteOperator& op, int max_beta);

// max over stored roots of |P(1/lambda)| / max|coeff| (reciprocal pairing).
double reciprocal_residual(const DiscreteOperator& op);

// max over the 2m kernel exponential-trigonometric grid functions and
// |beta| <= window of |(D_m * phi)(beta)| normalized by the largest term of
// the convolution (max |D| times max |phi| on the summation range).
double verify_annihilation(const DiscreteOperator& op, int window);

}  // namespace sardquad
