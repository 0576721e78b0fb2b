#include "sardquad/discrete_operator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "sardquad/kernel.hpp"

namespace sardquad {

namespace {

std::vector<dd::Real> polymul(const std::vector<dd::Real>& p,
                              const std::vector<dd::Real>& q) {
  std::vector<dd::Real> r(p.size() + q.size() - 1, dd::Real(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

dd::Complex polyval(const std::vector<dd::Real>& p, dd::Complex x) {
  dd::Complex acc = dd::Complex(0);
  for (const dd::Real& c : p) acc = acc * x + dd::Complex(c);
  return acc;
}

// Eigenvalues of the companion matrix of the double-rounded polynomial,
// used as seeds for Newton polishing in the double-word scalar.
std::vector<std::complex<double>> companion_roots(
    const std::vector<dd::Real>& poly) {
  int deg = static_cast<int>(poly.size()) - 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
  double lead = dd::to_double(poly[0]);
  for (int i = 0; i < deg; ++i) C(0, i) = -dd::to_double(poly[i + 1]) / lead;
  for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> out(deg);
  for (int i = 0; i < deg; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

}  // namespace

DiscreteOperator build_operator(int m, dd::Real h) {
  if (m < 1 || m % 2 == 0) throw UsageError("m must be odd and >= 1");
  if (!(h.hi > 0 && h.hi <= 1)) throw UsageError("h must lie in (0, 1]");

  DiscreteOperator op;
  op.m = m;
  op.h = dd::to_double(h);
  op.h_dd = h;
  const int half = (m - 1) / 2;

  std::vector<dd::Real> a1(half + 1, dd::Real(0)), a2(half + 1, dd::Real(0)),
      b1(half + 1, dd::Real(0)), b2(half + 1, dd::Real(0));
  for (int k = 1; k <= half; ++k) {
    dd::Real th = dd::pi() * dd::Real(k) / dd::Real(m);
    dd::Real c = dd::cos(th), s = dd::sin(th);
    a1[k] = dd::Real(2) * (c * dd::cos(h * s) * dd::sinh(h * c) -
                           s * dd::sin(h * s) * dd::cosh(h * c));
    a2[k] = -(dd::Real(2) * (c * dd::sinh(dd::Real(2) * h * c) -
                             s * dd::sin(dd::Real(2) * h * s)));
    b1[k] = dd::Real(-4) * dd::cos(h * s) * dd::cosh(h * c);
    b2[k] = dd::Real(2) * (dd::Real(1) + dd::cos(dd::Real(2) * h * s) +
                           dd::cosh(dd::Real(2) * h * c));
  }

  const dd::Real sinh_h = dd::sinh(h), cosh_h = dd::cosh(h);
  // K = sinh h + sum a1 collapses by 2m-2 orders; the identity
  // K = 2m G_m(h) evaluates it without cancellation.
  op.K_dd = dd::Real(2 * m) * green_series(m, h);
  op.M1_dd = dd::Real(-2) * cosh_h;
  for (int k = 1; k <= half; ++k) op.M1_dd += b1[k];
  op.K1_dd = 0;
  for (int k = 1; k <= half; ++k) {
    dd::Real sum_other = dd::Real(-2) * cosh_h;
    for (int j = 1; j <= half; ++j)
      if (j != k) sum_other += b1[j];
    op.K1_dd += b1[k] * sinh_h + a2[k] + a1[k] * sum_other;
  }

  std::vector<std::vector<dd::Real>> quartics;
  for (int k = 1; k <= half; ++k)
    quartics.push_back({dd::Real(1), b1[k], b2[k], b1[k], dd::Real(1)});

  std::vector<dd::Real> polyB = {dd::Real(1)};
  for (const auto& q : quartics) polyB = polymul(polyB, q);

  std::vector<dd::Real> polyP(2 * m - 1, dd::Real(0));
  {
    for (size_t i = 0; i < polyB.size(); ++i) polyP[i] += sinh_h * polyB[i];
    std::vector<dd::Real> quad = {dd::Real(1), dd::Real(-2) * cosh_h,
                                  dd::Real(1)};
    for (int j = 1; j <= half; ++j) {
      std::vector<dd::Real> prod = {dd::Real(1)};
      for (int i = 1; i <= half; ++i)
        if (i != j) prod = polymul(prod, quartics[i - 1]);
      auto term = polymul(polymul(quad, {a1[j], a2[j], a1[j]}), prod);
      for (size_t i = 0; i < term.size(); ++i) polyP[i] += term[i];
    }
  }

  // Rounded views for the verification / reporting paths.
  op.a1.assign(half + 1, 0);
  op.a2.assign(half + 1, 0);
  op.b1.assign(half + 1, 0);
  op.b2.assign(half + 1, 0);
  for (int k = 1; k <= half; ++k) {
    op.a1[k] = dd::to_wide(a1[k]);
    op.a2[k] = dd::to_wide(a2[k]);
    op.b1[k] = dd::to_wide(b1[k]);
    op.b2[k] = dd::to_wide(b2[k]);
  }
  op.K = dd::to_wide(op.K_dd);
  op.K1 = dd::to_wide(op.K1_dd);
  op.M1 = dd::to_wide(op.M1_dd);
  op.polyB.resize(polyB.size());
  for (size_t i = 0; i < polyB.size(); ++i) op.polyB[i] = dd::to_wide(polyB[i]);
  op.polyP.resize(polyP.size());
  for (size_t i = 0; i < polyP.size(); ++i) op.polyP[i] = dd::to_wide(polyP[i]);

  if (m > 1) {
    std::vector<dd::Real> dP(2 * m - 2);
    for (int i = 0; i < 2 * m - 2; ++i)
      dP[i] = polyP[i] * dd::Real(2 * m - 2 - i);

    auto seeds = companion_roots(polyP);
    for (auto seed : seeds) {
      dd::Complex lam(dd::Real(wreal(seed.real())), dd::Real(wreal(seed.imag())));
      for (int it = 0; it < 10; ++it) {
        dd::Complex p = polyval(polyP, lam);
        dd::Complex dp = polyval(dP, lam);
        if (dd::abs_estimate(dp) == 0) break;
        dd::Complex step = p / dp;
        lam = lam - step;
        if (dd::abs_estimate(step) < 1e-62 * (1 + dd::abs_estimate(lam)))
          break;
      }
      double mod = dd::abs_estimate(lam);
      if (std::abs(mod - 1.0) < 1e-8)
        throw DegeneracyError("characteristic root too close to the unit circle");
      if (mod < 1.0) {
        dd::Complex quad =
            lam * lam - dd::Complex(dd::Real(2) * cosh_h) * lam + dd::Complex(1);
        op.lambda_dd.push_back(lam);
        op.A_dd.push_back(dd::Complex(op.K_dd) * quad * polyval(polyB, lam) /
                          (lam * polyval(dP, lam)));
        op.max_root_modulus = std::max(op.max_root_modulus, mod);
      }
    }
    if (static_cast<int>(op.lambda_dd.size()) != m - 1)
      throw DegeneracyError("root pairing failed: expected m-1 roots inside the unit disk");
    for (size_t n = 0; n < op.lambda_dd.size(); ++n) {
      op.lambda.push_back(wc(dd::to_wide(op.lambda_dd[n].re),
                             dd::to_wide(op.lambda_dd[n].im)));
      op.A.push_back(
          wc(dd::to_wide(op.A_dd[n].re), dd::to_wide(op.A_dd[n].im)));
    }
  }
  return op;
}

wreal DiscreteOperator::wvalue(int beta) const {
  int b = beta < 0 ? -beta : beta;
  wcomplex s = wc(0, 0);
  if (b >= 2) {
    for (size_t n = 0; n < lambda.size(); ++n)
      s += A[n] * ipow(lambda[n], b - 1);
  } else if (b == 1) {
    s = wc(1, 0);
    for (auto a : A) s += a;
  } else {
    s = wc(M1 - K1 / K, 0);
    for (size_t n = 0; n < lambda.size(); ++n) s += A[n] / lambda[n];
  }
  return m / K * wre(s);
}

double DiscreteOperator::value(int beta) const {
  return narrow(wvalue(beta));
}

std::vector<std::complex<double>> DiscreteOperator::roots() const {
  std::vector<std::complex<double>> out;
  for (auto l : lambda) out.emplace_back(narrow(wre(l)), narrow(wim(l)));
  return out;
}

double max_imag_residual(const DiscreteOperator& op, int max_beta) {
  double worst = 0;
  for (int b = 0; b <= max_beta; ++b) {
    wcomplex s = wc(0, 0);
    if (b >= 2) {
      for (size_t n = 0; n < op.lambda.size(); ++n)
        s += op.A[n] * ipow(op.lambda[n], b - 1);
    } else if (b == 1) {
      s = wc(1, 0);
      for (auto a : op.A) s += a;
    } else {
      s = wc(op.M1 - op.K1 / op.K, 0);
      for (size_t n = 0; n < op.lambda.size(); ++n) s += op.A[n] / op.lambda[n];
    }
    double im = std::abs(narrow(wim(s))), re = std::abs(narrow(wre(s)));
    worst = std::max(worst, im / (1 + re));
  }
  return worst;
}

double decay_bound_excess(const DiscreteOperator& op, int max_beta) {
  if (op.lambda.empty()) return 0.0;
  double rho = op.max_root_modulus + 1e-12;
  // Triangle-inequality amplitude bound |D(beta)| <= (m/|K|) sum|A_n| *
  // rho^(beta-1). Anchoring at |D(2)| instead is unsound: the amplitudes
  // can interfere destructively at beta = 2 and less so further out.
  double anchor = 0;
  for (auto a : op.A) anchor += narrow(wabs(a));
  anchor *= narrow(wabs(wreal(op.m) / op.K)) * rho;
  double worst = 0, bound = anchor;
  for (int b = 2; b <= max_beta; ++b) {
    worst = std::max(worst, std::abs(op.value(b)) / bound);
    bound *= rho;
  }
  return worst;
}

double reciprocal_residual(const DiscreteOperator& op) {
  wreal maxc = 0;
  for (wreal c : op.polyP) maxc = std::max<wreal>(maxc, wabs(c));
  double worst = 0;
  for (auto lam : op.lambda) {
    wcomplex inv = wc(1, 0) / lam;
    wcomplex acc = wc(0, 0);
    for (wreal c : op.polyP) acc = acc * inv + c;
    worst = std::max(worst, narrow(wabs(acc) / maxc));
  }
  return worst;
}

namespace {

// Index beyond which D_m is negligible relative to growth e^{h*window} of
// the functions it is convolved against.
int tail_cutoff(const DiscreteOperator& op, int window) {
  if (op.lambda.empty()) return window + 2;
  double decay = -std::log(op.max_root_modulus) - op.h;
  if (decay <= 0)
    throw DegeneracyError("operator tail does not dominate kernel growth");
  int n0 = static_cast<int>((88.0 + op.h * window) / decay) + 10;
  return std::max(n0, window + 2);
}

}  // namespace

double verify_delta(const DiscreteOperator& op, int window) {
  const wreal wh = wreal(op.h);
  const int cutoff = tail_cutoff(op, window);
  std::vector<wreal> D(cutoff + 1);
  for (int g = 0; g <= cutoff; ++g) D[g] = op.wvalue(g);

  wreal worst = 0;
  for (int b = -window; b <= window; ++b) {
    wreal acc = 0;
    for (int g = -cutoff; g <= cutoff; ++g)
      acc += D[std::abs(g)] * wide::green_value(op.m, wh * (b - g));
    if (b == 0) acc -= 1;
    if (wabs(acc) > worst) worst = wabs(acc);
  }
  return narrow(worst);
}

double verify_annihilation(const DiscreteOperator& op, int window) {
  const wreal wh = wreal(op.h);
  const int cutoff = tail_cutoff(op, window);
  std::vector<wreal> D(cutoff + 1);
  for (int g = 0; g <= cutoff; ++g) D[g] = op.wvalue(g);

  // The 2m annihilated grid functions as Re(w z^gamma).
  std::vector<std::pair<wcomplex, wcomplex>> funcs;  // (w, z)
  funcs.push_back({wc(1, 0), wexp(wc(wh, 0))});
  funcs.push_back({wc(1, 0), wexp(wc(-wh, 0))});
  for (int k = 1; k <= (op.m - 1) / 2; ++k) {
    wreal th = 2 * kWidePi * k / op.m;
    for (int sign = -1; sign <= 1; sign += 2) {
      wcomplex z = wexp(wc(sign * wh * wcos(th), wh * wsin(th)));
      funcs.push_back({wc(1, 0), z});    // cos component
      funcs.push_back({wc(0, -1), z});   // sin component
    }
  }

  double dmax = 0;
  for (int g = 0; g <= cutoff; ++g)
    dmax = std::max(dmax, std::abs(narrow(D[g])));

  double worst = 0;
  for (auto [w, z] : funcs) {
    wcomplex S = wc(0, 0);
    for (int g = -cutoff; g <= cutoff; ++g)
      S += D[std::abs(g)] * ipow(g >= 0 ? wc(1, 0) / z : z, std::abs(g));
    double logz = std::log(narrow(wabs(z)));
    for (int b = -window; b <= window; ++b) {
      wcomplex zb = b >= 0 ? ipow(z, b) : ipow(wc(1, 0) / z, -b);
      double conv = std::abs(narrow(wre(w * zb * S)));
      // normalize by the largest term of the sum: max |D| times
      // max |phi| over the summation arguments b-g, |g| <= cutoff
      double maxphi = std::exp(std::abs(logz) * (std::abs(b) + cutoff));
      worst = std::max(worst, conv / (dmax * maxphi));
    }
  }
  return worst;
}

}  // namespace sardquad
