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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorchan/channel.hpp"

namespace mirrorchan {

enum class SweepMode { kPlaneWave, kPacket };
enum class TrajChoice { kCarlitzWilley, kDarcx };
enum class PacketMethod {
  kAuto,      // closed-form frequency integrals for CW, mirror-time integrals otherwise
  kAnalytic,  // CW only
  kNumeric,
};

struct SweepSpec {
  SweepMode mode = SweepMode::kPacket;
  TrajChoice traj = TrajChoice::kCarlitzWilley;
  double kappa = 1.0;
  double epsilon = 0.1;
  std::vector<double> xi{0.5};
  double nu = 1.0;
  // When set, nu = xi_nu_product / xi for every xi.
  std::optional<double> xi_nu_product;

  double omega_min = 0.1;
  double omega_max = 2.0;
  int omega_steps = 40;
  bool omega_log = false;
  double cutoff_low = 1e-3;
  double cutoff_high = 1e3;

  int j_min = 0;
  int j_max = 4;
  int n_min = -40;
  int n_max = 40;
  PacketMethod method = PacketMethod::kAuto;
  double pad_bins = 16.0;

  // Width of the tau = 1 and tau = 0 classes; unset means 1e-9 (plane wave) or 1e-3 (packet).
  std::optional<double> tau_tol;
  double physicality_tol = 1e-9;
  // Rows with quad_error > flag_tol * max(1, |tau|) are flagged.
  double flag_tol = 1e-3;

  std::string out;
  int jobs = 1;
  std::string preset;
};

// Settings as key = value strings; keys are the SweepSpec field names.
using Settings = std::map<std::string, std::string>;

[[nodiscard]] const std::vector<std::string>& setting_keys();
// Throws std::invalid_argument on unknown keys or malformed values.
void apply_setting(SweepSpec& spec, std::string_view key, std::string_view value);
void apply_settings(SweepSpec& spec, const Settings& s);
// Flat "key = value" text, '#' starts a comment. Throws std::invalid_argument.
[[nodiscard]] Settings parse_config(std::string_view text);
[[nodiscard]] Settings read_config_file(const std::string& path);
// fig1, fig2 and fig3; throws std::invalid_argument for unknown names.
[[nodiscard]] Settings preset_settings(std::string_view name);
[[nodiscard]] std::vector<std::string> preset_names();

// Checks grid sizes, ranges and mode/trajectory compatibility. Throws std::invalid_argument.
void validate(const SweepSpec& spec);
[[nodiscard]] double resolved_tau_tol(const SweepSpec& spec);
[[nodiscard]] std::size_t grid_size(const SweepSpec& spec);

struct ResultRow {
  // Coordinates.
  double omega = 0.0;
  double cutoff_low = 0.0;
  double cutoff_high = 0.0;
  std::string traj;
  double kappa = 0.0;
  double epsilon = 0.0;
  double xi = 0.0;
  double nu = 0.0;
  int j = 0;
  int n = 0;
  // Results.
  double tau = 0.0;
  double n_bar = 0.0;
  std::string cls;
  double quad_error = 0.0;
  double margin = 0.0;
  double wall_time = 0.0;
  bool flagged = false;
  std::string message;
};

struct SweepResult {
  std::vector<ResultRow> rows;
  std::size_t flagged = 0;
  double wall_time = 0.0;
};

// Grid points are evaluated on spec.jobs threads and returned in grid order.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec);

[[nodiscard]] std::string csv_header(SweepMode mode);
[[nodiscard]] std::string csv_row(SweepMode mode, const ResultRow& row);
[[nodiscard]] std::string to_csv(SweepMode mode, const SweepResult& result);
// JSON document with the resolved spec, tolerances and summary counts.
[[nodiscard]] std::string metadata_json(const SweepSpec& spec, const SweepResult& result);

// Runs the sweep and writes spec.out and spec.out + ".meta.json".
SweepResult run_planewave_sweep(const SweepSpec& spec);
SweepResult run_packet_sweep(const SweepSpec& spec);

// Transmissivity det T of a Carlitz-Willey packet without the noise integral.
[[nodiscard]] double packet_tau(const PacketIndex& idx, double kappa);

struct EpsilonSearch {
  double lo = 1e-3;  // in units of kappa
  double hi = 10.0;
  int scan_points = 17;
  double rel_tol = 1e-4;
};

struct EpsilonOptimum {
  double epsilon = 0.0;
  double tau = 0.0;
  int evaluations = 0;
  // Maximum sits on the edge of the search range.
  bool at_boundary = false;
  // The coarse scan had more than one local maximum.
  bool bracket_violation = false;
  std::vector<std::string> log;
};

// Golden-section search in ln eps for the maximum of tau(j, n) of a CW packet.
[[nodiscard]] EpsilonOptimum optimize_epsilon(double kappa, int j, int n,
                                              const EpsilonSearch& range = {});

}  // namespace mirrorchan
