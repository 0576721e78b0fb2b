#include "sardquad/sobolev_solver.hpp"

#include <cmath>

#include "sardquad/ddreal.hpp"
#include "sardquad/kernel.hpp"

namespace sardquad {

namespace {

using dd::Complex;
using dd::Real;

Complex cpow_int(Complex z, int n) {
  if (n >= 0) return ipow(z, n);
  return ipow(Complex(1) / z, -n);
}

// Combined complex-exponential term describing one additive piece of u_m
// on an exterior branch: gamma -> Re(W z^gamma) with z = e^{mu h}.
struct SideTerm {
  Complex W;
  Complex z;
};

std::vector<SideTerm> q_side(int m, Real h) {
  std::vector<SideTerm> out;
  Real w0 = (Real(1) - dd::exp(Real(-1))) / Real(2);
  out.push_back({Complex(w0), Complex(dd::exp(h))});
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    Real th = dd::pi() * Real(2 * k) / Real(m);
    Complex mu(dd::cos(th), dd::sin(th));
    Complex w = Complex(1) - dd::exp(-mu);
    out.push_back({w, dd::exp(Complex(mu.re * h, mu.im * h))});
  }
  return out;
}

SideTerm p_side(int m, int idx, Real h) {
  if (idx == 0) return {Complex(1), Complex(dd::exp(-h))};
  int k = (idx + 1) / 2;
  Real th = dd::pi() * Real(2 * k) / Real(m);
  Complex mu(-dd::cos(th), dd::sin(th));
  Complex z = dd::exp(Complex(mu.re * h, mu.im * h));
  // cos part is Re e^{mu x}; sin part is Im e^{mu x} = Re(-i e^{mu x}).
  if (idx % 2 == 1) return {Complex(1), z};
  return {Complex(Real(0), Real(-1)), z};
}

// Double-word view of the operator's spectral data.
struct OpData {
  int m;
  Real mK;  // m / K
  Real D0, D1;
  std::vector<Complex> lam, AoverLam, A;
};

OpData op_data(const DiscreteOperator& op) {
  OpData d;
  d.m = op.m;
  d.mK = Real(op.m) / op.K_dd;
  Real s0 = op.M1_dd - op.K1_dd / op.K_dd, s1 = 1;
  for (size_t n = 0; n < op.lambda_dd.size(); ++n) {
    Complex al = op.A_dd[n] / op.lambda_dd[n];
    d.lam.push_back(op.lambda_dd[n]);
    d.A.push_back(op.A_dd[n]);
    d.AoverLam.push_back(al);
    s0 += al.re;
    s1 += op.A_dd[n].re;
  }
  d.D0 = d.mK * s0;
  d.D1 = d.mK * s1;
  return d;
}

Real dval(const OpData& d, int beta) {
  int b = beta < 0 ? -beta : beta;
  if (b == 0) return d.D0;
  if (b == 1) return d.D1;
  Real acc = 0;
  for (size_t n = 0; n < d.lam.size(); ++n)
    acc += (d.A[n] * ipow(d.lam[n], b - 1)).re;
  return d.mK * acc;
}

// sum_{gamma <= -1} D(beta - gamma) z^gamma, any beta >= -m.
Complex halfline_left(const OpData& d, int beta, Complex z) {
  Complex acc = Complex(0);
  for (int t = beta + 1; t <= 1; ++t)
    acc += Complex(dval(d, t)) * cpow_int(z, beta - t);
  int t0 = std::max(beta + 1, 2);
  Complex zb = cpow_int(z, beta);
  for (size_t n = 0; n < d.lam.size(); ++n) {
    Complex r = d.lam[n] / z;
    acc += Complex(d.mK) * d.AoverLam[n] * ipow(r, t0) / (Complex(1) - r) * zb;
  }
  return acc;
}

// sum_{gamma >= N+1} D(beta - gamma) z^gamma, any beta <= N+m.
Complex halfline_right(const OpData& d, int beta, Complex z, int N) {
  Complex acc = Complex(0);
  for (int t = N + 1 - beta; t <= 1; ++t)
    acc += Complex(dval(d, t)) * cpow_int(z, beta + t);
  int s0 = std::max(N + 1 - beta, 2);
  Complex zb = cpow_int(z, beta);
  for (size_t n = 0; n < d.lam.size(); ++n) {
    Complex r = d.lam[n] * z;
    acc += Complex(d.mK) * d.AoverLam[n] * ipow(r, s0) / (Complex(1) - r) * zb;
  }
  return acc;
}

struct BoundarySolution {
  std::vector<Real> dminus, dplus;
};

// Node values f_m(h beta), beta = 0..N, at double-word precision.
std::vector<Real> f_grid(int m, int N, Real h) {
  std::vector<Real> f(N + 1);
  for (int g = 0; g <= N; ++g) f[g] = f_series(m, h * Real(g));
  return f;
}

BoundarySolution solve_boundary_dd(const ProblemConfig& config,
                                   const DiscreteOperator& op,
                                   const OpData& d,
                                   const std::vector<Real>& f) {
  const int m = config.m, N = config.N;
  const Real h = op.h_dd;

  auto qs = q_side(m, h);
  std::vector<SideTerm> ps;
  for (int idx = 0; idx < m; ++idx) ps.push_back(p_side(m, idx, h));

  // Geometric moments of f against each root, for the middle sums at the
  // boundary rows: T_n = sum lam^g f(g), V_n = sum lam^(N-g) f(g).
  const size_t nroots = d.lam.size();
  std::vector<Complex> T(nroots, Complex(0)), V(nroots, Complex(0));
  for (size_t n = 0; n < nroots; ++n) {
    Complex up = Complex(1);
    for (int g = 0; g <= N; ++g) {
      T[n] += up * Complex(f[g]);
      up = up * d.lam[n];
    }
    Complex down = Complex(1);
    for (int g = N; g >= 0; --g) {
      V[n] += down * Complex(f[g]);
      down = down * d.lam[n];
    }
  }

  std::vector<int> betas;
  for (int j = 1; j <= m; ++j) betas.push_back(-j);
  for (int j = 1; j <= m; ++j) betas.push_back(N + j);

  const int n2 = 2 * m;
  std::vector<Real> M(n2 * n2, Real(0)), rhs(n2, Real(0));
  for (int r = 0; r < n2; ++r) {
    int beta = betas[r];
    Real known = 0;
    if (beta < 0) {
      // g >= beta+2 is purely geometric; only beta = -1 touches D(1).
      Real geo = 0;
      for (size_t n = 0; n < nroots; ++n) {
        Complex base = T[n];
        if (beta == -1) base = base - Complex(f[0]);
        geo += (d.A[n] * cpow_int(d.lam[n], -beta - 1) * base).re;
      }
      known = d.mK * geo;
      if (beta == -1) known += d.D1 * f[0];
    } else {
      Real geo = 0;
      for (size_t n = 0; n < nroots; ++n) {
        Complex base = V[n];
        if (beta == N + 1) base = base - Complex(f[N]);
        geo += (d.A[n] * cpow_int(d.lam[n], beta - N - 1) * base).re;
      }
      known = d.mK * geo;
      if (beta == N + 1) known += d.D1 * f[N];
    }
    for (const auto& t : qs) {
      Real inv2m = Real(1) / Real(2 * m);
      known -= (t.W * halfline_left(d, beta, t.z)).re * inv2m;
      known += (t.W * halfline_right(d, beta, t.z, N)).re * inv2m;
    }
    rhs[r] = -known;
    for (int j = 0; j < m; ++j) {
      M[r * n2 + j] = (ps[j].W * halfline_left(d, beta, ps[j].z)).re;
      M[r * n2 + m + j] = (ps[j].W * halfline_right(d, beta, ps[j].z, N)).re;
    }
  }
  if (!dd::lu_solve(M, rhs, n2))
    throw DegeneracyError("boundary system for split multipliers is singular");

  BoundarySolution out;
  out.dminus.assign(rhs.begin(), rhs.begin() + m);
  out.dplus.assign(rhs.begin() + m, rhs.end());
  return out;
}

}  // namespace

MultiplierSet SplitMultipliers::recombined(int m) const {
  MultiplierSet out;
  out.d0 = narrow((dplus[0] + dminus[0]) / 2);
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    out.d1.push_back(narrow((dplus[2 * k - 1] + dminus[2 * k - 1]) / 2));
    out.d2.push_back(narrow((dplus[2 * k] + dminus[2 * k]) / 2));
  }
  return out;
}

wreal UFunction::wvalue(int beta) const {
  const int m = config.m, N = config.N;
  const wreal h = wreal(1) / N;
  if (beta >= 0 && beta <= N) return f[beta];
  wreal x = h * beta;
  wreal q = 0;
  for (const auto& t : wide::q_terms(m)) q += wre(t.w * wexp(t.mu * wc(x, 0)));
  const auto& dv = beta < 0 ? mult.dminus : mult.dplus;
  wreal p = 0;
  for (int idx = 0; idx < m; ++idx) {
    auto term = wide::p_term(m, idx);
    p += dv[idx] * wre(term.w * wexp(term.mu * wc(x, 0)));
  }
  return (beta < 0 ? -q : q) / (2 * m) + p;
}

double UFunction::value(int beta) const { return narrow(wvalue(beta)); }

SplitMultipliers solve_boundary(const ProblemConfig& config,
                                const DiscreteOperator& op) {
  auto d = op_data(op);
  auto f = f_grid(config.m, config.N, op.h_dd);
  auto sol = solve_boundary_dd(config, op, d, f);
  SplitMultipliers out;
  for (const auto& v : sol.dminus) out.dminus.push_back(dd::to_wide(v));
  for (const auto& v : sol.dplus) out.dplus.push_back(dd::to_wide(v));
  return out;
}

UFunction build_u(const ProblemConfig& config, const DiscreteOperator& op) {
  UFunction u;
  u.config = config;
  u.op = &op;
  const wreal h = wreal(1) / config.N;
  u.f.resize(config.N + 1);
  for (int g = 0; g <= config.N; ++g)
    u.f[g] = wide::f_value(config.m, h * g);
  u.mult = solve_boundary(config, op);
  return u;
}

SobolevSolution sobolev_solve(const ProblemConfig& config,
                              const DiscreteOperator& op) {
  const int m = config.m, N = config.N;
  const Real h = op.h_dd;
  auto d = op_data(op);
  auto f = f_grid(m, N, h);
  auto bd = solve_boundary_dd(config, op, d, f);

  // Full term lists for the two exterior branches of u.
  const Real inv2m = Real(1) / Real(2 * m);
  std::vector<SideTerm> left, right;
  for (const auto& t : q_side(m, h)) {
    left.push_back({-(t.W * Complex(inv2m)), t.z});
    right.push_back({t.W * Complex(inv2m), t.z});
  }
  for (int idx = 0; idx < m; ++idx) {
    auto t = p_side(m, idx, h);
    left.push_back({t.W * Complex(bd.dminus[idx]), t.z});
    right.push_back({t.W * Complex(bd.dplus[idx]), t.z});
  }

  const size_t nroots = d.lam.size();
  // Collapse the per-term geometric tails onto the operator roots:
  // left tail at beta >= 1 is Re sum_n CL_n lam_n^(beta+1),
  // right tail at beta <= N-1 is Re sum_n CR_n lam_n^(N+1-beta).
  std::vector<Complex> CL(nroots, Complex(0)), CR(nroots, Complex(0));
  for (size_t n = 0; n < nroots; ++n) {
    Complex base = Complex(d.mK) * d.AoverLam[n];
    for (const auto& t : left) CL[n] += t.W * base / (t.z - d.lam[n]);
    for (const auto& t : right)
      CR[n] += t.W * base * ipow(t.z, N + 1) /
               (Complex(1) - d.lam[n] * t.z);
  }

  std::vector<Real> w(N + 1, Real(0));

  // Middle convolution sum_g D(b-g) f(g) via the root recurrences
  // L_n(b) = sum_{g<=b-2} lam^(b-1-g) f(g), R_n(b) = sum_{g>=b+2}
  // lam^(g-b-1) f(g); O(N m) total.
  {
    std::vector<Complex> L(nroots, Complex(0));
    for (int b = 0; b <= N; ++b) {
      Real acc = d.D0 * f[b];
      if (b >= 1) acc += d.D1 * f[b - 1];
      if (b <= N - 1) acc += d.D1 * f[b + 1];
      Real geo = 0;
      for (size_t n = 0; n < nroots; ++n) geo += (d.A[n] * L[n]).re;
      w[b] = acc + d.mK * geo;
      if (b >= 1)
        for (size_t n = 0; n < nroots; ++n)
          L[n] = d.lam[n] * (L[n] + Complex(f[b - 1]));
      else
        for (size_t n = 0; n < nroots; ++n) L[n] = Complex(0);
    }
    std::vector<Complex> R(nroots, Complex(0));
    for (int b = N; b >= 0; --b) {
      Real geo = 0;
      for (size_t n = 0; n < nroots; ++n) geo += (d.A[n] * R[n]).re;
      w[b] += d.mK * geo;
      if (b <= N - 1)
        for (size_t n = 0; n < nroots; ++n)
          R[n] = d.lam[n] * (R[n] + Complex(f[b + 1]));
    }
  }

  // Exterior tails.
  {
    std::vector<Complex> pw(nroots);
    for (size_t n = 0; n < nroots; ++n) pw[n] = d.lam[n] * d.lam[n];
    for (int b = 1; b <= N; ++b) {
      Real acc = 0;
      for (size_t n = 0; n < nroots; ++n) {
        acc += (CL[n] * pw[n]).re;
        pw[n] = pw[n] * d.lam[n];
      }
      w[b] += acc;
    }
    for (size_t n = 0; n < nroots; ++n) pw[n] = d.lam[n] * d.lam[n];
    for (int b = N - 1; b >= 0; --b) {
      Real acc = 0;
      for (size_t n = 0; n < nroots; ++n) {
        acc += (CR[n] * pw[n]).re;
        pw[n] = pw[n] * d.lam[n];
      }
      w[b] += acc;
    }
    // Endpoints see the full half-line sums of their own side.
    Real acc0 = 0, accN = 0;
    for (const auto& t : left) acc0 += (t.W * halfline_left(d, 0, t.z)).re;
    for (const auto& t : right)
      accN += (t.W * halfline_right(d, N, t.z, N)).re;
    w[0] += acc0;
    w[N] += accN;
  }

  QuadratureRule rule;
  rule.config = config;
  rule.method = "sobolev";
  rule.weights.resize(N + 1);
  for (int b = 0; b <= N; ++b) rule.weights[b] = dd::to_double(w[b]);

  SplitMultipliers sm;
  for (const auto& v : bd.dminus) sm.dminus.push_back(dd::to_wide(v));
  for (const auto& v : bd.dplus) sm.dplus.push_back(dd::to_wide(v));

  SobolevSolution out;
  out.rule = std::move(rule);
  out.multipliers = sm.recombined(m);
  return out;
}

SobolevSolution sobolev_solve(const ProblemConfig& config) {
  auto op = build_operator(config.m, dd::Real(1) / dd::Real(config.N));
  return sobolev_solve(config, op);
}

double weight_by_truncation(const UFunction& u, int beta, int window) {
  wreal acc = 0;
  for (int g = beta - window; g <= beta + window; ++g)
    acc += u.op->wvalue(beta - g) * u.wvalue(g);
  return narrow(acc);
}

}  // namespace sardquad
