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

#include "mirrorchan/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mirrorchan/quadrature.hpp"
#include "mirrorchan/simd/phasor.hpp"
#include "mirrorchan/specfun.hpp"

namespace mirrorchan {

namespace {

constexpr int kGaussOrder = 16;

}  // namespace

void validate(const PacketIndex& idx) {
  if (idx.j < 0) throw DomainError("packet index: j must be non-negative");
  if (!(idx.epsilon > 0.0) || !std::isfinite(idx.epsilon))
    throw DomainError("packet index: epsilon must be positive and finite");
}

double central_frequency(const PacketIndex& idx) {
  validate(idx);
  return (idx.j + 0.5) * idx.epsilon;
}

double CwPacketSampler::turns(const PacketIndex& idx, double kappa, double L) {
  const double kt = kappa / idx.epsilon;
  const double shift = L / (kTwoPi * kt);
  const double ymax = (idx.j + 1.0) / kt;
  const double gamma_turns = (std::fabs(std::log(std::max(ymax, 1.0))) + 1.0) / (kTwoPi * kt);
  return std::max(std::fabs(idx.n - shift), std::fabs(idx.n + shift)) + gamma_turns;
}

CwPacketSampler::CwPacketSampler(const PacketIndex& idx, double kappa, double max_turns,
                                 Convention conv, double panels_per_turn) {
  validate(idx);
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("packet sampler: kappa must be positive");
  const double kt = kappa / idx.epsilon;
  const bool singular = idx.j == 0;
  int panels = static_cast<int>(std::ceil(std::max(max_turns, 0.0) * panels_per_turn)) + 2;
  if (singular) panels *= 2;
  const GaussRule& rule = gauss_legendre(kGaussOrder);
  const std::size_t total = static_cast<std::size_t>(panels) * rule.x.size();
  freq_.reserve(total);
  a_coef_.reserve(total);
  b_freq_.reserve(total);
  b_coef_.reserve(total);
  const double norm = 1.0 / (kTwoPi * kt);
  for (int p = 0; p < panels; ++p) {
    const double lo = static_cast<double>(p) / panels;
    const double half = 0.5 / panels;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double s = lo + half * (1.0 + rule.x[i]);
      double x, wx;
      if (singular) {
        x = s * s;
        wx = 2.0 * s * half * rule.w[i];
      } else {
        x = idx.j + s;
        wx = half * rule.w[i];
      }
      const double y = x / kt;
      const Complex lg = log_gamma_imag(y);
      const Complex ph = std::polar(norm * wx * std::sqrt(x), kTwoPi * (x - idx.j) * idx.n);
      const double hy = 0.5 * kPi * y;
      freq_.push_back(-y);
      a_coef_.push_back(ph * std::exp(hy + lg));
      if (conv == Convention::kSymplecticBlock) {
        b_freq_.push_back(y);
        b_coef_.push_back(-ph * std::exp(-hy + std::conj(lg)));
      } else {
        b_freq_.push_back(-y);
        b_coef_.push_back(-ph * std::exp(-hy + lg));
      }
    }
  }
}

void CwPacketSampler::sample(double L0, double dL, std::span<Complex> alpha_hat,
                             std::span<Complex> beta_hat) const {
  simd::phasor_sum(freq_, a_coef_, L0, dL, alpha_hat);
  simd::phasor_sum(b_freq_, b_coef_, L0, dL, beta_hat);
}

PacketHat packet_hat(const PacketIndex& idx, double L, double kappa, Convention conv,
                     double rel_tol) {
  if (!std::isfinite(L)) throw DomainError("packet_hat: non-finite log-frequency");
  const double t = CwPacketSampler::turns(idx, kappa, L);
  Complex a1[1] = {}, b1[1] = {}, a2[1] = {}, b2[1] = {};
  CwPacketSampler(idx, kappa, t, conv, 1.0).sample(L, 0.0, a1, b1);
  CwPacketSampler(idx, kappa, t, conv, 2.0).sample(L, 0.0, a2, b2);
  PacketHat h;
  h.alpha = a2[0];
  h.beta = b2[0];
  h.quad_error = std::max(std::abs(a2[0] - a1[0]), std::abs(b2[0] - b1[0]));
  const double scale = std::max(std::abs(h.alpha), std::abs(h.beta));
  h.converged = h.quad_error <= rel_tol * scale || scale == 0.0;
  return h;
}

PacketCoefficients packet_coefficients(const PacketIndex& idx, double omega_prime, double kappa,
                                       Convention conv, double rel_tol) {
  if (!(omega_prime > 0.0) || !std::isfinite(omega_prime))
    throw DomainError("packet_coefficients: omega' must be positive and finite");
  const PacketHat h = packet_hat(idx, std::log(omega_prime / kappa), kappa, conv, rel_tol);
  const double s = 1.0 / std::sqrt(omega_prime);
  PacketCoefficients c;
  c.index = idx;
  c.omega_prime = omega_prime;
  c.alpha = s * h.alpha;
  c.beta = s * h.beta;
  c.quad_error = s * h.quad_error;
  c.converged = h.converged;
  return c;
}

}  // namespace mirrorchan
