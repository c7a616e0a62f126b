// Copyright 2026 The mirrorchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mirrorchan/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mirrorchan/quadrature.hpp"
#include "mirrorchan/specfun.hpp"

namespace mirrorchan {

namespace {

void check_positive(double omega, double omega_prime, double kappa) {
  if (!(omega > 0.0) || !(omega_prime > 0.0) || !(kappa > 0.0) || !std::isfinite(omega) ||
      !std::isfinite(omega_prime) || !std::isfinite(kappa))
    throw DomainError("Bogoliubov coefficients: omega, omega', kappa must be positive and finite");
}

// |Gamma(iy)| cosh(pi y / 2) and |Gamma(iy)| sinh(pi y / 2) without overflow.
double gamma_cosh(double y) { return std::sqrt(kPi / (2.0 * y) / std::tanh(0.5 * kPi * y)); }
double gamma_sinh(double y) { return std::sqrt(kPi / (2.0 * y) * std::tanh(0.5 * kPi * y)); }

// First point where 1 + zdot has decayed below 1e-18, searching forward from t0.
double horizon_cut(const Trajectory& traj, double t0) {
  double step = traj.time_scale();
  double t = t0;
  for (int i = 0; i < 200; ++i) {
    if (traj.one_plus_velocity(t) < 1e-18) return t;
    t += step;
    step *= 1.5;
  }
  throw ConvergenceError("numeric coefficients: no late-time cut before horizon", t);
}

}  // namespace

BogoliubovPair cw_coefficients(double omega, double omega_prime, double kappa,
                               const CoefficientOptions& opt) {
  check_positive(omega, omega_prime, kappa);
  const double y = omega / kappa;
  const double lprime = std::log(omega_prime / kappa);
  const Complex lg = log_gamma_imag(y);
  const double base = -std::log(kTwoPi * kappa) + 0.5 * std::log(omega / omega_prime);
  const double half = 0.5 * kPi * y;
  const double sa = opt.branch == LogBranch::kPlusPi ? half : -half;
  BogoliubovPair p;
  p.omega = omega;
  p.omega_prime = omega_prime;
  p.alpha = std::exp(Complex(base + sa, -y * lprime) + lg);
  const Complex b = -std::exp(Complex(base - sa, -y * lprime) + lg);
  p.beta = opt.convention == Convention::kSymplecticBlock ? std::conj(b) : b;
  return p;
}

Mat2 s_block(Complex alpha, Complex beta) {
  const Complex dm = alpha - beta;
  const Complex dp = alpha + beta;
  return {dm.real(), dp.imag(), -dm.imag(), dp.real()};
}

Mat2 s_block_planewave(double omega, double omega_prime, double kappa) {
  check_positive(omega, omega_prime, kappa);
  const double y = omega / kappa;
  const double pre = std::sqrt(omega / omega_prime) / (kPi * kappa);
  const double ch = pre * gamma_cosh(y);
  const double sh = pre * gamma_sinh(y);
  const double th = theta_phase(omega, omega_prime, kappa);
  const double cs = std::cos(th), sn = std::sin(th);
  return {ch * cs, -ch * sn, sh * sn, sh * cs};
}

Mat2 s_st_planewave(double omega, double omega_prime, double kappa) {
  check_positive(omega, omega_prime, kappa);
  const double h = 0.5 * kPi * omega / kappa;
  const double s = 1.0 / (kTwoPi * kappa * omega_prime);
  return Mat2::diag(s / std::tanh(h), s * std::tanh(h));
}

NumericBogoliubov numeric_coefficients(const Trajectory& traj, double omega, double omega_prime,
                                       const NumericOptions& opt) {
  if (!(omega > 0.0) || !(omega_prime > 0.0))
    throw DomainError("numeric_coefficients: frequencies must be positive");
  if (opt.levels < 2 || opt.nodes_per_panel < 2 || opt.nodes_per_panel > 64)
    throw DomainError("numeric_coefficients: invalid options");

  const double eta0 = opt.damping_scale * omega_prime;
  const double eta_min = std::ldexp(eta0, -(opt.levels - 1));
  const double vmax = opt.damping_cutoff / eta_min;

  const RayMap f = ray_f(traj);
  const double t_lo = f.mirror_time(-vmax);
  double t_hi;
  std::vector<double> feats = traj.features();
  if (traj.horizon()) {
    t_hi = horizon_cut(traj, std::max(t_lo, feats.empty() ? 0.0 : feats.back()));
  } else {
    t_hi = f.mirror_time(vmax);
    feats.push_back(f.mirror_time(0.0));
  }

  const double tscale = traj.time_scale();
  auto max_width = [&](double t) {
    const double rate =
        omega * traj.one_minus_velocity(t) + omega_prime * traj.one_plus_velocity(t);
    return std::min(opt.turns_per_panel * kTwoPi / rate, 0.25 * (t_hi - t_lo));
  };
  const auto panels = graded_panels(t_lo, t_hi, feats, tscale / 16.0, max_width);
  const GaussRule& rule = gauss_legendre(opt.nodes_per_panel);

  std::vector<Complex> sa(static_cast<std::size_t>(opt.levels)), sb(sa.size());
  std::vector<double> etas(sa.size());
  for (std::size_t k = 0; k < etas.size(); ++k) etas[k] = std::ldexp(eta0, -static_cast<int>(k));

  std::size_t nodes = 0;
  for (const Panel& p : panels) {
    const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double t = mid + half * rule.x[i];
      const double jac = traj.one_plus_velocity(t);
      const double wt = half * rule.w[i] * jac;
      if (wt == 0.0) continue;
      const double u = traj.retarded_time(t);
      const double v = traj.advanced_time(t);
      const Complex out = std::polar(1.0, -omega * u);
      const Complex in = std::polar(1.0, omega_prime * v);
      const Complex ea = out * in;
      const Complex eb = out * std::conj(in);
      for (std::size_t k = 0; k < etas.size(); ++k) {
        const double damp = wt * std::exp(-etas[k] * std::fabs(v));
        sa[k] += damp * ea;
        sb[k] += damp * eb;
      }
      ++nodes;
    }
  }

  const Extrapolated ea = richardson(sa);
  const Extrapolated eb = richardson(sb);
  const double pre = std::sqrt(omega_prime / omega) / kTwoPi;

  NumericBogoliubov r;
  r.pair.omega = omega;
  r.pair.omega_prime = omega_prime;
  r.pair.alpha = pre * ea.value;
  const Complex beta_sp = pre * eb.value;
  r.pair.beta = opt.convention == Convention::kSymplecticBlock ? std::conj(beta_sp) : beta_sp;
  r.alpha_error = pre * ea.error;
  r.beta_error = pre * eb.error;
  const double scale = std::max(std::abs(r.pair.alpha), std::abs(r.pair.beta));
  r.converged = std::isfinite(scale) && r.alpha_error <= opt.rel_tol * scale &&
                r.beta_error <= opt.rel_tol * scale;
  r.nodes = nodes;
  return r;
}

}  // namespace mirrorchan
