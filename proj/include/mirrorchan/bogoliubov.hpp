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

#include "mirrorchan/trajectory.hpp"
#include "mirrorchan/types.hpp"

namespace mirrorchan {

// Phase convention of the (alpha, beta) pair.
//  kSymplecticBlock: the pair whose general S block equals the closed-form
//    Carlitz-Willey block; used throughout the channel construction.
//  kScalarProduct: alpha = (phi_in, phi_out), beta = (phi_in^*, phi_out) in the
//    Klein-Gordon product on past null infinity. Differs by beta -> conj(beta).
enum class Convention { kSymplecticBlock, kScalarProduct };

// Branch of ln(-x), x > 0, in the Carlitz-Willey integral. kMinusPi is a fault hook.
enum class LogBranch { kPlusPi, kMinusPi };

struct CoefficientOptions {
  Convention convention = Convention::kSymplecticBlock;
  LogBranch branch = LogBranch::kPlusPi;
};

struct BogoliubovPair {
  double omega = 0.0;
  double omega_prime = 0.0;
  Complex alpha;
  Complex beta;
};

// Closed-form Carlitz-Willey coefficients; omega, omega', kappa > 0.
[[nodiscard]] BogoliubovPair cw_coefficients(double omega, double omega_prime, double kappa,
                                             const CoefficientOptions& opt = {});

// S = [[Re(a - b), Im(a + b)], [-Im(a - b), Re(a + b)]].
[[nodiscard]] Mat2 s_block(Complex alpha, Complex beta);
[[nodiscard]] inline Mat2 s_block(const BogoliubovPair& p) { return s_block(p.alpha, p.beta); }

// Closed-form Carlitz-Willey S block.
[[nodiscard]] Mat2 s_block_planewave(double omega, double omega_prime, double kappa);

// S S^T = diag(coth(pi y / 2), tanh(pi y / 2)) / (2 pi kappa omega'), y = omega / kappa.
[[nodiscard]] Mat2 s_st_planewave(double omega, double omega_prime, double kappa);

struct NumericOptions {
  // eta_k = damping_scale * omega' / 2^k, k < levels.
  double damping_scale = 0.1;
  int levels = 4;
  int nodes_per_panel = 16;
  // Upper bound on oscillation periods per panel.
  double turns_per_panel = 1.0;
  // Integration stops where exp(-eta_min |v|) < exp(-damping_cutoff).
  double damping_cutoff = 40.0;
  double rel_tol = 1e-3;
  Convention convention = Convention::kSymplecticBlock;
};

struct NumericBogoliubov {
  BogoliubovPair pair;
  double alpha_error = 0.0;
  double beta_error = 0.0;
  bool converged = false;
  std::size_t nodes = 0;
};

// Coefficients of an arbitrary trajectory from the damped mirror-time integral
//   (1/2pi) sqrt(w'/w) \int dt (1 + zdot) exp(-i w u(t) +- i w' v(t) - eta |v(t)|)
// extrapolated to eta -> 0.
[[nodiscard]] NumericBogoliubov numeric_coefficients(const Trajectory& traj, double omega,
                                                     double omega_prime,
                                                     const NumericOptions& opt = {});

}  // namespace mirrorchan
