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

#pragma once

#include <span>
#include <vector>

#include "mirrorchan/bogoliubov.hpp"
#include "mirrorchan/trajectory.hpp"
#include "mirrorchan/types.hpp"

namespace mirrorchan {

// Packet (j, n): frequencies [j eps, (j+1) eps], time bin centred on u = 2 pi n / eps.
struct PacketIndex {
  int j = 0;
  int n = 0;
  double epsilon = 0.1;
};

void validate(const PacketIndex& idx);
[[nodiscard]] double central_frequency(const PacketIndex& idx);

struct PacketCoefficients {
  PacketIndex index;
  double omega_prime = 0.0;
  Complex alpha;
  Complex beta;
  double quad_error = 0.0;
  bool converged = true;
};

// Carlitz-Willey packet coefficients alpha_{jn, w'}, beta_{jn, w'}.
[[nodiscard]] PacketCoefficients packet_coefficients(const PacketIndex& idx, double omega_prime,
                                                     double kappa,
                                                     Convention conv = Convention::kSymplecticBlock,
                                                     double rel_tol = 1e-8);

// sqrt(w') times the packet coefficients at w' = kappa exp(L). Finite for |L| far
// beyond the range where w' itself is representable.
struct PacketHat {
  Complex alpha;
  Complex beta;
  double quad_error = 0.0;
  bool converged = true;
};

[[nodiscard]] PacketHat packet_hat(const PacketIndex& idx, double L, double kappa,
                                   Convention conv = Convention::kSymplecticBlock,
                                   double rel_tol = 1e-8);

// Frequency-node table of one Carlitz-Willey packet; evaluates the hat coefficients on
// uniform L grids through simd::phasor_sum. max_turns bounds the number of
// oscillations of the frequency integrand over the grids it will be used on.
class CwPacketSampler {
 public:
  CwPacketSampler(const PacketIndex& idx, double kappa, double max_turns,
                  Convention conv = Convention::kSymplecticBlock, double panels_per_turn = 1.0);

  // Adds alpha_hat(L0 + m dL), beta_hat(L0 + m dL) into the outputs.
  void sample(double L0, double dL, std::span<Complex> alpha_hat, std::span<Complex> beta_hat) const;
  [[nodiscard]] std::size_t nodes() const noexcept { return freq_.size(); }
  // Oscillations of the alpha (beta) frequency integrand at log-frequency L.
  [[nodiscard]] static double turns(const PacketIndex& idx, double kappa, double L);

 private:
  std::vector<double> freq_;
  std::vector<Complex> a_coef_;
  std::vector<double> b_freq_;
  std::vector<Complex> b_coef_;
};

// Bin transform G_j(s) = \int_j^{j+1} x^{-1/2} exp(-i x s) dx.
[[nodiscard]] Complex bin_transform(int j, double s);

enum class Damping {
  kExponential,  // exp(-eta |v|)
  kGaussian,     // exp(-(eta v)^2)
};

struct PacketNumericOptions {
  // eta_k = damping_scale * eps / 2^k, k < levels.
  double damping_scale = 0.05;
  Damping damping = Damping::kGaussian;
  int levels = 4;
  int nodes_per_panel = 16;
  double turns_per_panel = 1.0;
  double damping_cutoff = 40.0;
  double rel_tol = 1e-3;
  Convention convention = Convention::kSymplecticBlock;
};

// Node table in mirror time for the swapped-order packet integral
//   alpha_{jn}(w') = sqrt(w') / (2 pi sqrt(eps)) \int dt (1 + zdot) e^{i w' v(t)} G_n(u(t)),
// built in units where eps = 1 and valid for rescaled frequencies x' <= x_max.
class NumericPacketTable {
 public:
  NumericPacketTable(const Trajectory& traj, const PacketIndex& idx, double x_max,
                     const PacketNumericOptions& opt);

  [[nodiscard]] int levels() const noexcept { return static_cast<int>(etas_.size()); }
  [[nodiscard]] double eta(int level) const { return etas_.at(static_cast<std::size_t>(level)); }
  [[nodiscard]] std::size_t nodes() const noexcept { return v_.size(); }
  // Adds sum_k w_k G_k exp(sign i x v_k) D(eta_level, v_k - v_n) for x = x0 + m dx, where
  // v_n is the advanced time reflected into the centre of the packet's time bin, or 0 when
  // the trajectory has a horizon.
  void damped_sums(int level, int sign, double x0, double dx, std::span<Complex> out) const;

 private:
  std::vector<double> v_;
  std::vector<Complex> wg_;
  std::vector<double> etas_;
  Damping damping_ = Damping::kGaussian;
  double v_c_ = 0.0;
};

// Coefficients of an arbitrary trajectory from NumericPacketTable, extrapolated to
// eta -> 0. Returned in absolute units.
[[nodiscard]] PacketCoefficients packet_coefficients_numeric(const Trajectory& traj,
                                                             const PacketIndex& idx,
                                                             double omega_prime,
                                                             const PacketNumericOptions& opt = {});

}  // namespace mirrorchan
