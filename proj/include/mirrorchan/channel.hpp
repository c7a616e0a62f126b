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

#include <string_view>

#include "mirrorchan/bogoliubov.hpp"
#include "mirrorchan/trajectory.hpp"
#include "mirrorchan/types.hpp"
#include "mirrorchan/wavepacket.hpp"

namespace mirrorchan {

// Gaussian channel V_out = T V_in T^T + N on one mode.
struct ChannelPair {
  Mat2 T;
  Mat2 N;
  double quad_error = 0.0;
};

enum class ChannelClass {
  kAmplifier,          // tau > 1
  kClassicalAdditive,  // tau = 1
  kAttenuator,         // 0 < tau < 1
  kErasure,            // tau = 0
  kPhaseConjugating,   // tau < 0
};

[[nodiscard]] std::string_view class_name(ChannelClass c);

struct CanonicalParams {
  double tau = 0.0;
  double n_bar = 0.0;
  ChannelClass cls = ChannelClass::kErasure;
  double nu = 0.0;      // sqrt(det N)
  double margin = 0.0;  // nu - |1 - tau| / 2
};

struct ClassifyOptions {
  // Width of the tau = 1 and tau = 0 classes.
  double tau_tol = 1e-9;
  // Allowed violation of sqrt(det N) >= |1 - tau| / 2, relative to max(1, nu).
  double physicality_tol = 1e-9;
};

// Band classification of tau >= 0; throws DomainError for tau < -tol.
[[nodiscard]] ChannelClass classify(double tau, double tol);

// T V T^T + N for a physical covariance matrix V (symmetric, det V >= 1/4).
[[nodiscard]] Mat2 apply_channel(const ChannelPair& ch, const Mat2& v_in);

// sqrt(det N) - |1 - det T| / 2; negative for maps that are not completely positive.
[[nodiscard]] double physicality_margin(const ChannelPair& ch);

// tau, n_bar and class; throws UnphysicalError if the pair is not completely positive.
[[nodiscard]] CanonicalParams canonical_params(const ChannelPair& ch, const ClassifyOptions& opt = {});

enum class NoiseMethod { kClosedForm, kQuadrature };

// N = (ln(W_inf / W_0) - 1/w) / (4 pi kappa) diag(coth(pi y / 2), tanh(pi y / 2)).
[[nodiscard]] Mat2 planewave_noise_closed(double omega, double kappa, double cutoff_low,
                                          double cutoff_high);

// Plane-wave Carlitz-Willey channel with T = S_{ww} and N from the cutoff integral.
// Throws UnphysicalError when ln(W_inf / W_0) < max(2/w - 2 pi kappa, 2 pi kappa).
[[nodiscard]] ChannelPair assemble_planewave(double omega, double kappa, double cutoff_low,
                                             double cutoff_high,
                                             NoiseMethod method = NoiseMethod::kClosedForm);

// (S_B T S_A, S_B N S_B^T) with S_A = R(theta)^T, S_B = diag(sqrt(tanh), sqrt(coth)).
[[nodiscard]] ChannelPair canonical_form_planewave(double omega, double kappa, double cutoff_low,
                                                   double cutoff_high);

struct PacketNoiseOptions {
  // Log-frequency window half-width beyond the outermost lobe, in time bins.
  double pad_bins = 16.0;
  // Samples per time bin on the log-frequency grid (>= 2 resolves the integrand).
  double samples_per_bin = 8.0;
  Convention convention = Convention::kSymplecticBlock;
};

// Packet integrals over w' (all dimensionless):
//   sigma = \int |a|^2 + |b|^2,  anomalous = \int a b,  norm = \int |a|^2 - |b|^2.
struct PacketChannel {
  ChannelPair channel;
  double sigma = 0.0;
  Complex anomalous;
  double norm = 0.0;
  double norm_error = 0.0;
  // True for j = 0, where sigma and |anomalous| grow logarithmically with the window.
  bool window_regularized = false;
};

// Carlitz-Willey packet channel with T = S_{jn, w~}, w~ = (j + 1/2) eps.
[[nodiscard]] PacketChannel assemble_packet(const PacketIndex& idx, double kappa,
                                            const PacketNoiseOptions& opt = {});

struct NumericNoiseOptions {
  // Frequency window [j / d - bins, (j + 1) d + bins] eps for the w' integral, where
  // d = (1 + v) / (1 - v) is the largest Doppler factor of a mirror with speed <= v.
  double window_bins = 8.0;
  // Grid spacing in units of the damping rate of each level.
  double samples_per_eta = 4.0;
  bool with_noise = true;
};

// Packet channel of an arbitrary trajectory from the swapped-order mirror-time integral.
// The noise part needs max_speed() < 1; quad_error includes |norm - 1|.
[[nodiscard]] PacketChannel assemble_packet_numeric(const Trajectory& traj, const PacketIndex& idx,
                                                    const PacketNumericOptions& popt = {},
                                                    const NumericNoiseOptions& nopt = {});

}  // namespace mirrorchan
