#pragma once
// Explicit weight formulas for m = 1 and m = 3.

#include "sardquad/types.hpp"

namespace sardquad {

// Parameters of the m = 3 formula (doubles for reporting; the construction
// itself runs in the wide scalar).
struct M3Parameters {
  double tau1 = 0, tau2 = 0;           // decay roots, both inside (-1, 1)
  double T = 0;                        // interior plateau
  double Kc = 0, K1c = 0, K2c = 0;     // scalars of the m = 3 formula
  double m1 = 0, m2 = 0, n1 = 0, n2 = 0;
  double A11 = 0, A12 = 0, A21 = 0, A22 = 0;
  double B11 = 0, B12 = 0, B21 = 0, B22 = 0;
  double T1 = 0, T2 = 0;
  double system_residual = 0;          // relative residual of the 4x4 solve
};

// C_0 = C_N = (e^h - 1)/(e^h + 1); interior weights 2(e^h - 1)/(e^h + 1).
QuadratureRule weights_m1(int N);

QuadratureRule weights_m3(int N);
QuadratureRule weights_m3(int N, M3Parameters* params_out);

}  // namespace sardquad
