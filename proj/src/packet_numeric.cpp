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

#include <algorithm>
#include <cmath>

#include "mirrorchan/quadrature.hpp"
#include "mirrorchan/simd/phasor.hpp"
#include "mirrorchan/wavepacket.hpp"

namespace mirrorchan {

namespace {

constexpr double kAsymptoticThreshold = 40.0;

// sum_m c_m x^{-1/2-m} / (i s)^{m+1}, c_m = d^m x^{-1/2} / dx^m coefficients.
Complex endpoint_series(double x, double s) {
  const Complex is(0.0, s);
  Complex term = 1.0 / (std::sqrt(x) * is);
  Complex sum = term;
  double prev = std::abs(term);
  for (int m = 0; m < 60; ++m) {
    term *= (-0.5 - m) / (x * is);
    const double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    if (mag < 1e-18 * std::abs(sum)) break;
    prev = mag;
  }
  return sum;
}

double horizon_cut(const Trajectory& traj, double t0) {
  double step = traj.time_scale();
  double t = t0;
  for (int i = 0; i < 200; ++i) {
    if (traj.one_plus_velocity(t) < 1e-18) return t;
    t += step;
    step *= 1.5;
  }
  throw ConvergenceError("numeric packet: no late-time cut before horizon", t);
}

}  // namespace

Complex bin_transform(int j, double s) {
  if (j < 0) throw DomainError("bin_transform: j must be non-negative");
  const double a = j, b = j + 1.0;
  if (s == 0.0) return 2.0 * (std::sqrt(b) - std::sqrt(a));
  const double as = std::fabs(s);
  if (as * std::max(a, 1.0) >= kAsymptoticThreshold) {
    // \int_a^b g e^{-isx} = -[sum_m g^(m) e^{-isx} / (is)^{m+1}]_a^b
    const Complex upper = std::polar(1.0, -s * b) * endpoint_series(b, s);
    if (j == 0) {
      const Complex full = std::polar(std::sqrt(kPi / as), s > 0.0 ? -0.25 * kPi : 0.25 * kPi);
      return full - upper;
    }
    const Complex lower = std::polar(1.0, -s * a) * endpoint_series(a, s);
    return lower - upper;
  }
  const GaussRule& rule = gauss_legendre(16);
  Complex sum(0.0, 0.0);
  if (j == 0) {
    // x = sigma^2
    const int panels = static_cast<int>(std::ceil(as / kPi)) + 1;
    for (int p = 0; p < panels; ++p) {
      const double lo = static_cast<double>(p) / panels, half = 0.5 / panels;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double sg = lo + half * (1.0 + rule.x[i]);
        sum += 2.0 * half * rule.w[i] * std::polar(1.0, -s * sg * sg);
      }
    }
    return sum;
  }
  const int panels = static_cast<int>(std::ceil(as / kTwoPi)) + 1;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + static_cast<double>(p) / panels, half = 0.5 / panels;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double x = lo + half * (1.0 + rule.x[i]);
      sum += half * rule.w[i] / std::sqrt(x) * std::polar(1.0, -s * x);
    }
  }
  return sum;
}

NumericPacketTable::NumericPacketTable(const Trajectory& traj, const PacketIndex& idx,
                                       double x_max, const PacketNumericOptions& opt) {
  validate(idx);
  if (opt.levels < 2 || opt.nodes_per_panel < 2 || opt.nodes_per_panel > 64 ||
      !(opt.damping_scale > 0.0))
    throw DomainError("numeric packet: invalid options");
  if (!(x_max > 0.0)) throw DomainError("numeric packet: x_max must be positive");
  for (int k = 0; k < opt.levels; ++k) etas_.push_back(std::ldexp(opt.damping_scale, -k));
  damping_ = opt.damping;
  const double reach = damping_ == Damping::kGaussian ? std::sqrt(opt.damping_cutoff) : opt.damping_cutoff;
  const double vmax = reach / etas_.back();

  // Without a horizon the damping is centred on the advanced time of the packet's own
  // time bin; with one, overlaps come from rays just below the horizon and v = 0 is kept.
  const double un = kTwoPi * idx.n;
  const auto hz = traj.horizon();
  std::vector<double> feats = traj.features();
  if (!hz) {
    const double t_c = ray_p(traj).mirror_time(un);
    v_c_ = traj.advanced_time(t_c);
    feats.push_back(t_c);
  }
  const RayMap f = ray_f(traj);
  const double t_lo = f.mirror_time(v_c_ - vmax);
  double t_hi;
  if (hz && !(v_c_ + vmax < *hz)) {
    t_hi = horizon_cut(traj, std::max(t_lo, *std::max_element(feats.begin(), feats.end())));
  } else {
    t_hi = f.mirror_time(v_c_ + vmax);
  }
  const double xb = idx.j + 1.0;
  auto max_width = [&](double t) {
    const double rate = x_max * traj.one_plus_velocity(t) + xb * traj.one_minus_velocity(t);
    return std::min(opt.turns_per_panel * kTwoPi / rate, 0.25 * (t_hi - t_lo));
  };
  const auto panels = graded_panels(t_lo, t_hi, feats, traj.time_scale() / 16.0, max_width);
  const GaussRule& rule = gauss_legendre(opt.nodes_per_panel);
  v_.reserve(panels.size() * rule.x.size());
  wg_.reserve(panels.size() * rule.x.size());
  for (const Panel& p : panels) {
    const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double t = mid + half * rule.x[i];
      const double w = half * rule.w[i] * traj.one_plus_velocity(t);
      if (w == 0.0) continue;
      v_.push_back(traj.advanced_time(t));
      wg_.push_back(w * bin_transform(idx.j, traj.retarded_time(t) - un));
    }
  }
}

void NumericPacketTable::damped_sums(int level, int sign, double x0, double dx,
                                     std::span<Complex> out) const {
  const double eta = etas_.at(static_cast<std::size_t>(level));
  std::vector<double> freq;
  std::vector<Complex> coef;
  freq.reserve(v_.size());
  coef.reserve(v_.size());
  for (std::size_t k = 0; k < v_.size(); ++k) {
    const double ev = eta * std::fabs(v_[k] - v_c_);
    const double d = damping_ == Damping::kGaussian ? ev * ev : ev;
    if (d > 745.0) continue;
    freq.push_back(sign >= 0 ? v_[k] : -v_[k]);
    coef.push_back(wg_[k] * std::exp(-d));
  }
  simd::phasor_sum(freq, coef, x0, dx, out);
}

PacketCoefficients packet_coefficients_numeric(const Trajectory& traj, const PacketIndex& idx,
                                               double omega_prime,
                                               const PacketNumericOptions& opt) {
  validate(idx);
  if (!(omega_prime > 0.0) || !std::isfinite(omega_prime))
    throw DomainError("packet_coefficients_numeric: omega' must be positive and finite");
  const double eps = idx.epsilon;
  const Trajectory tr = traj.rescaled(eps);
  const double xp = omega_prime / eps;
  const bool sym = opt.convention == Convention::kSymplecticBlock;
  PacketIndex bidx = idx;
  if (sym) bidx.n = -idx.n;
  const NumericPacketTable ta(tr, idx, xp, opt);
  const NumericPacketTable tb(tr, bidx, xp, opt);
  std::vector<Complex> sa(static_cast<std::size_t>(ta.levels())), sb(sa.size());
  for (int k = 0; k < ta.levels(); ++k) {
    ta.damped_sums(k, +1, xp, 0.0, std::span<Complex>(&sa[static_cast<std::size_t>(k)], 1));
    tb.damped_sums(k, -1, xp, 0.0, std::span<Complex>(&sb[static_cast<std::size_t>(k)], 1));
  }
  const Extrapolated ea = richardson(sa);
  const Extrapolated eb = richardson(sb);
  const double pre = std::sqrt(xp) / (kTwoPi * std::sqrt(eps));
  PacketCoefficients c;
  c.index = idx;
  c.omega_prime = omega_prime;
  c.alpha = pre * ea.value;
  c.beta = sym ? std::conj(pre * eb.value) : pre * eb.value;
  c.quad_error = pre * std::max(ea.error, eb.error);
  const double scale = std::max(std::abs(c.alpha), std::abs(c.beta));
  c.converged = std::isfinite(scale) && c.quad_error <= opt.rel_tol * scale;
  return c;
}

}  // namespace mirrorchan
