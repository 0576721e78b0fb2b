#include "sardquad/analysis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>

#include "sardquad/closed_form.hpp"
#include "sardquad/dense_solver.hpp"
#include "sardquad/kernel.hpp"
#include "sardquad/sobolev_solver.hpp"

namespace sardquad {

std::vector<double> constraint_residuals(const QuadratureRule& rule) {
  const int m = rule.config.m, N = rule.config.N;
  const wreal h = wreal(1) / N;
  std::vector<double> out(m);
  for (int r = 0; r < m; ++r) {
    wreal acc = -wide::basis_integral(m, r);
    for (int b = 0; b <= N; ++b)
      acc += wreal(rule.weights[b]) * wide::basis_eval(m, r, h * b);
    out[r] = narrow(wabs(acc));
  }
  return out;
}

ErrorNormReport error_norm_squared_unchecked(
    const ProblemConfig& config, const std::vector<double>& weights) {
  const int m = config.m, N = config.N;
  const wreal h = wreal(1) / N;
  ErrorNormReport rep;
  wreal lin = 0, quad = 0;
  for (int b = 0; b <= N; ++b)
    lin += 2 * wreal(weights[b]) * wide::f_value(m, h * b);
  for (int b = 0; b <= N; ++b) {
    // evenness: fold the double sum over b > g; diagonal is zero (G(0)=0)
    for (int g = 0; g < b; ++g)
      quad += 2 * wreal(weights[b]) * wreal(weights[g]) *
              wide::green_value(m, h * (b - g));
  }
  wreal cst = wide::green_double_integral(m);
  rep.term_linear = narrow(lin);
  rep.term_quadratic = narrow(quad);
  rep.term_constant = narrow(cst);
  rep.norm_sq = narrow(lin - quad - cst);
  return rep;
}

ErrorNormReport error_norm_squared(const ProblemConfig& config,
                                   const QuadratureRule& rule) {
  auto res = constraint_residuals(rule);
  for (double r : res)
    if (r > 1e-6)
      throw VerificationError(
          "weights violate the exactness constraints; the norm identity is "
          "only valid on the constraint manifold");
  return error_norm_squared_unchecked(config, rule.weights);
}

double apply(const QuadratureRule& rule,
             const std::function<double(double)>& f) {
  double acc = 0;
  for (int b = 0; b <= rule.config.N; ++b)
    acc += rule.weights[b] * f(rule.node(b));
  return acc;
}

std::vector<NamedFunction> named_functions(
    const std::vector<std::string>& names) {
  std::vector<NamedFunction> out;
  for (const auto& n : names) {
    if (n == "exp") {
      out.push_back({"exp", [](double x) { return std::exp(-x); },
                     1.0 - std::exp(-1.0)});
    } else if (n == "runge") {
      out.push_back({"runge", [](double x) { return 1.0 / (1.0 + 25 * x * x); },
                     std::atan(5.0) / 5.0});
    } else if (n == "cospi") {
      out.push_back({"cospi", [](double x) { return std::cos(M_PI * x); }, 0.0});
    } else {
      throw UsageError("unknown test function: " + n);
    }
  }
  return out;
}

namespace {

QuadratureRule solve_by_method(int m, int N, const std::string& method) {
  auto config = ProblemConfig::create(m, N);
  if (method == "dense") return dense_solve(config).rule;
  if (method == "sobolev") return sobolev_solve(config).rule;
  if (method == "closed") {
    if (m == 1) return weights_m1(N);
    if (m == 3) return weights_m3(N);
    throw UsageError("closed-form weights exist only for m in {1, 3}");
  }
  throw UsageError("unknown method: " + method);
}

// Least-squares projection of arbitrary weights onto the constraint
// manifold: w + E^T (E E^T)^{-1} (g - E w).
std::vector<double> project_to_constraints(const ProblemConfig& config,
                                           const std::vector<double>& w) {
  const int m = config.m, N = config.N;
  auto basis = exactness_basis(m);
  Eigen::MatrixXd E(m, N + 1);
  Eigen::VectorXd g(m), wv(N + 1);
  for (int r = 0; r < m; ++r) {
    g(r) = basis_integral(basis[r]);
    for (int b = 0; b <= N; ++b) E(r, b) = basis[r].eval(config.h * b);
  }
  for (int b = 0; b <= N; ++b) wv(b) = w[b];
  Eigen::VectorXd corr =
      E.transpose() * (E * E.transpose()).ldlt().solve(g - E * wv);
  std::vector<double> out(N + 1);
  for (int b = 0; b <= N; ++b) out[b] = wv(b) + corr(b);
  return out;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(
    int m, const std::vector<int>& Ns,
    const std::vector<NamedFunction>& fns, const std::string& method) {
  if (Ns.empty()) throw UsageError("convergence study needs at least one N");
  std::vector<ConvergenceRow> rows;
  for (int N : Ns) {
    auto config = ProblemConfig::create(m, N);
    auto rule = solve_by_method(m, N, method);
    ConvergenceRow row;
    row.N = N;
    row.norm_sq = error_norm_squared(config, rule).norm_sq;
    std::vector<double> trap(N + 1, 1.0 / N);
    trap[0] = trap[N] = 0.5 / N;
    for (const auto& fn : fns) {
      row.function_errors.push_back(std::abs(sardquad::apply(rule, fn.f) - fn.integral));
      double tsum = 0;
      for (int b = 0; b <= N; ++b) tsum += trap[b] * fn.f(config.h * b);
      row.trapezoid_errors.push_back(std::abs(tsum - fn.integral));
    }
    row.trapezoid_projected_norm_sq =
        error_norm_squared_unchecked(config,
                                     project_to_constraints(config, trap))
            .norm_sq;
    if (!rows.empty()) {
      const auto& prev = rows.back();
      row.loglog_slope = (std::log(row.norm_sq) - std::log(prev.norm_sq)) /
                         (std::log(double(N)) - std::log(double(prev.N)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ProbeReport minimality_probe(const ProblemConfig& config,
                             const QuadratureRule& rule, int trials,
                             double magnitude, unsigned long long seed) {
  const int m = config.m, N = config.N;
  auto basis = exactness_basis(m);
  Eigen::MatrixXd E(m, N + 1);
  for (int r = 0; r < m; ++r)
    for (int b = 0; b <= N; ++b) E(r, b) = basis[r].eval(config.h * b);
  // Orthonormal basis of the row space via QR of E^T; projection onto the
  // null space is v - Q Q^T v.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(E.transpose());
  Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(N + 1, m);

  const double base = error_norm_squared(config, rule).norm_sq;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  ProbeReport rep;
  rep.trials = trials;
  rep.min_increase = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd v(N + 1);
    for (int b = 0; b <= N; ++b) v(b) = gauss(rng);
    v -= Q * (Q.transpose() * v);
    if (v.norm() == 0) continue;
    v /= v.norm();
    Eigen::VectorXd unit = v;
    v *= magnitude;
    for (int sign = -1; sign <= 1; sign += 2) {
      std::vector<double> w(N + 1);
      for (int b = 0; b <= N; ++b) w[b] = rule.weights[b] + sign * v(b);
      double inc = error_norm_squared_unchecked(config, w).norm_sq - base;
      rep.min_increase = std::min(rep.min_increase, inc);
      if (inc < -1e-12) ++rep.violations;
    }

    // Finite-difference stationarity along the same direction.
    const double step = 1e-6;
    std::vector<double> wp(N + 1), wm(N + 1);
    for (int b = 0; b <= N; ++b) {
      wp[b] = rule.weights[b] + step * unit(b);
      wm[b] = rule.weights[b] - step * unit(b);
    }
    double deriv = (error_norm_squared_unchecked(config, wp).norm_sq -
                    error_norm_squared_unchecked(config, wm).norm_sq) /
                   (2 * step);
    rep.stationarity = std::max(rep.stationarity, std::abs(deriv));
  }
  return rep;
}

}  // namespace sardquad
