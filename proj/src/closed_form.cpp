#include "sardquad/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sardquad/wide.hpp"

namespace sardquad {

QuadratureRule weights_m1(int N) {
  if (N < 1) throw UsageError("N must be >= 1");
  double h = 1.0 / N;
  double edge = (std::exp(h) - 1) / (std::exp(h) + 1);
  QuadratureRule rule;
  rule.config = ProblemConfig::create(1, N);
  rule.method = "closed-form-m1";
  rule.weights.assign(N + 1, 2 * edge);
  rule.weights[0] = rule.weights[N] = edge;
  return rule;
}

QuadratureRule weights_m3(int N, M3Parameters* params_out) {
  if (N < 3) throw UsageError("need N >= 3 for the m=3 formula");
  const wreal h = wreal(1) / N;
  const wreal s3 = wsqrt(wreal(3));
  const wreal E = wexp(h);

  // The scalars of the m=3 formula. K equals the discrete-operator K and
  // the quartic lam^4 - K1 lam^3 + (K2+2) lam^2 - K1 lam + 1 is the
  // operator characteristic polynomial divided by its leading coefficient.
  const wreal Kc = wsinh(h) + wsinh(h / 2) * wcos(s3 / 2 * h) -
                   s3 * wcosh(h / 2) * wsin(s3 / 2 * h);
  const wreal K1 =
      2 * wcosh(h) + (4 * wcos(s3 / 2 * h) * wcosh(h / 2) * wsinh(h) +
                      wsinh(h) - s3 * wsin(s3 * h) -
                      2 * wsinh(h) * wcosh(h)) /
                         Kc;
  const wreal K2 = (2 * wcos(s3 * h) * wsinh(h) + 4 * wsinh(h) * wcosh(h) -
                    2 * s3 * wsin(s3 * h) * wcosh(h)) /
                   Kc;
  const wreal T = 24 * (wcosh(h) - 1) *
                  (wcos(s3 / 2 * h) - wcosh(h / 2)) *
                  (wcos(s3 / 2 * h) - wcosh(h / 2)) /
                  (Kc * (K2 + 4 - 2 * K1));

  // tau_1, tau_2: one root inside the unit interval from each reciprocal
  // pair of the quartic; pair sums are (K1 +- sqrt(K1^2 - 4 K2))/2.
  const wreal disc = K1 * K1 - 4 * K2;
  if (disc < 0) throw DegeneracyError("m=3 formula: pair-sum discriminant negative");
  auto inside_root = [](wreal s) {
    wreal d = s * s - 4;
    if (d < 0) throw DegeneracyError("m=3 formula: tau discriminant negative");
    wreal r1 = (s + wsqrt(d)) / 2, r2 = (s - wsqrt(d)) / 2;
    return wabs(r1) < 1 ? r1 : r2;
  };
  const wreal tau1 = inside_root((K1 + wsqrt(disc)) / 2);
  const wreal tau2 = inside_root((K1 - wsqrt(disc)) / 2);
  if (!(wabs(tau1) < 1 && wabs(tau2) < 1))
    throw DegeneracyError("m=3 formula: tau outside the unit interval");

  const wreal eh2 = wexp(h / 2);
  const wreal c2 = wcos(s3 * h / 2), sn2 = wsin(s3 * h / 2);
  auto A1 = [&](wreal t) {
    return t * eh2 * sn2 / (1 - 2 * t * eh2 * c2 + t * t * E);
  };
  auto A2 = [&](wreal t) {
    return E / (E - t) + (t * eh2 * c2 - 1) / (1 - 2 * t * eh2 * c2 + t * t * E);
  };
  auto B1 = [&](wreal t) {
    return t * eh2 * sn2 / (t * t - 2 * t * eh2 * c2 + E);
  };
  auto B2 = [&](wreal t) {
    return E * t / (E * t - 1) +
           (t * eh2 * c2 - t * t) / (t * t - 2 * t * eh2 * c2 + E);
  };
  const wreal T1 = s3 / 2 - T * eh2 * sn2 / (1 - 2 * eh2 * c2 + E);
  const wreal T2 = wreal(3) / 2 - T * E / (E - 1) -
                   (T * eh2 * c2 - T) / (1 - 2 * eh2 * c2 + E);

  const wreal t1N = ipow(tau1, N), t2N = ipow(tau2, N);
  std::vector<wreal> M = {
      A1(tau1),       A1(tau2),       t1N * B1(tau1), t2N * B1(tau2),
      A2(tau1),       A2(tau2),       t1N * B2(tau1), t2N * B2(tau2),
      t1N * A1(tau1), t2N * A1(tau2), B1(tau1),       B1(tau2),
      t1N * A2(tau1), t2N * A2(tau2), B2(tau1),       B2(tau2)};
  std::vector<wreal> Mcopy = M;
  std::vector<wreal> rhs = {T1, T2, T1, T2};
  if (!lu_solve(M, rhs, 4))
    throw DegeneracyError("m=3 formula: 4x4 coefficient system singular");
  const wreal m1 = rhs[0], m2 = rhs[1], n1 = rhs[2], n2 = rhs[3];

  wreal sys_resid = 0;
  {
    std::vector<wreal> b0 = {T1, T2, T1, T2};
    wreal scale = 0;
    for (int r = 0; r < 4; ++r) {
      wreal acc = -b0[r];
      for (int c = 0; c < 4; ++c) {
        acc += Mcopy[r * 4 + c] * rhs[c];
        scale = std::max<wreal>(scale, wabs(Mcopy[r * 4 + c] * rhs[c]));
      }
      sys_resid = std::max<wreal>(sys_resid, wabs(acc));
    }
    if (scale > 0) sys_resid /= scale;
  }

  QuadratureRule rule;
  rule.config = ProblemConfig::create(3, N);
  rule.method = "closed-form-m3";
  rule.weights.resize(N + 1);
  {
    std::vector<wreal> p1(N + 1), p2(N + 1);
    p1[0] = p2[0] = 1;
    for (int j = 1; j <= N; ++j) {
      p1[j] = p1[j - 1] * tau1;
      p2[j] = p2[j - 1] * tau2;
    }
    for (int b = 1; b < N; ++b)
      rule.weights[b] = narrow(T + m1 * p1[b] + m2 * p2[b] +
                               n1 * p1[N - b] + n2 * p2[N - b]);
    rule.weights[0] =
        narrow(1 - (T / (E - 1) + m1 * tau1 / (E - tau1) +
                    m2 * tau2 / (E - tau2) + n1 * t1N / (tau1 * E - 1) +
                    n2 * t2N / (tau2 * E - 1)));
    rule.weights[N] =
        narrow(-1 + E * (T / (E - 1) + m1 * t1N / (E - tau1) +
                         m2 * t2N / (E - tau2) + n1 * tau1 / (tau1 * E - 1) +
                         n2 * tau2 / (tau2 * E - 1)));
  }

  if (params_out) {
    params_out->tau1 = narrow(tau1);
    params_out->tau2 = narrow(tau2);
    params_out->T = narrow(T);
    params_out->Kc = narrow(Kc);
    params_out->K1c = narrow(K1);
    params_out->K2c = narrow(K2);
    params_out->m1 = narrow(m1);
    params_out->m2 = narrow(m2);
    params_out->n1 = narrow(n1);
    params_out->n2 = narrow(n2);
    params_out->A11 = narrow(A1(tau1));
    params_out->A12 = narrow(A1(tau2));
    params_out->A21 = narrow(A2(tau1));
    params_out->A22 = narrow(A2(tau2));
    params_out->B11 = narrow(B1(tau1));
    params_out->B12 = narrow(B1(tau2));
    params_out->B21 = narrow(B2(tau1));
    params_out->B22 = narrow(B2(tau2));
    params_out->T1 = narrow(T1);
    params_out->T2 = narrow(T2);
    params_out->system_residual = narrow(sys_resid);
  }
  return rule;
}

QuadratureRule weights_m3(int N) { return weights_m3(N, nullptr); }

}  // namespace sardquad
