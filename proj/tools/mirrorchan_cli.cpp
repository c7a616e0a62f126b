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

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirrorchan/selftest.hpp"
#include "mirrorchan/sweep.hpp"

namespace {

using mirrorchan::Settings;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kFlagged = 3;

constexpr const char* kConfigHelp = R"(
Sweep settings resolve as: explicit flag > --config file > --preset > built-in default.
The config file is flat "key = value" text, one setting per line, '#' starts a comment.
Keys match the flags with '-' written as '_':
  traj (cw|darcx)  kappa  epsilon  xi (comma list)  nu  xi_nu_product
  omega_min  omega_max  omega_steps  omega_spacing (linear|log)  cutoff_low  cutoff_high
  j_min  j_max  n_min  n_max  method (auto|analytic|numeric)  pad_bins
  tau_tol  physicality_tol  flag_tol  out  jobs
Presets (packet): fig1, fig2 (cw, kappa 1, eps 0.1, j 0..4, n -40..40),
  fig3 (darcx, eps 2e-44, xi 5.6e-27,3.6e-27,1.6e-27, xi*nu 1e-50, j 0, n -20..20).
Exit status: 0 ok, 1 failure, 2 usage error, 3 rows flagged in the CSV.)";

// Options bound to setting keys; only those given on the command line are applied.
struct Bound {
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> opts;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    opts.emplace_back(key, app->add_option(flag, values[key], help));
  }

  [[nodiscard]] Settings given() const {
    Settings s;
    for (const auto& [key, opt] : opts)
      if (opt->count() > 0) s[key] = values.at(key);
    return s;
  }
};

struct SweepCommand {
  CLI::App* app = nullptr;
  Bound bound;
  std::string config;
  std::string preset;
};

void add_common(SweepCommand& c) {
  c.bound.add(c.app, "--kappa", "kappa", "Carlitz-Willey acceleration parameter");
  c.bound.add(c.app, "--out", "out", "CSV output path; metadata goes to PATH.meta.json");
  c.bound.add(c.app, "--jobs", "jobs", "worker threads");
  c.bound.add(c.app, "--tau-tol", "tau_tol", "width of the tau = 1 and tau = 0 classes");
  c.bound.add(c.app, "--physicality-tol", "physicality_tol", "allowed complete-positivity violation");
  c.bound.add(c.app, "--flag-tol", "flag_tol", "flag rows with quad_error above flag_tol * max(1, |tau|)");
  c.app->add_option("--config", c.config, "flat key = value settings file");
}

int run_sweep_command(const SweepCommand& c, mirrorchan::SweepMode mode) {
  mirrorchan::SweepSpec spec;
  spec.mode = mode;
  try {
    if (!c.preset.empty()) {
      if (mode != mirrorchan::SweepMode::kPacket)
        throw std::invalid_argument("presets apply to the packet subcommand");
      apply_settings(spec, mirrorchan::preset_settings(c.preset));
      spec.preset = c.preset;
    }
    if (!c.config.empty()) apply_settings(spec, mirrorchan::read_config_file(c.config));
    apply_settings(spec, c.bound.given());
    validate(spec);
    if (spec.out.empty()) throw std::invalid_argument("--out PATH is required");
  } catch (const std::invalid_argument& e) {
    std::cerr << "mirrorchan " << c.app->get_name() << ": " << e.what() << "\n"
              << "Run with --help for usage.\n";
    return kUsage;
  }
  try {
    const auto res = mode == mirrorchan::SweepMode::kPlaneWave ? run_planewave_sweep(spec)
                                                               : run_packet_sweep(spec);
    std::fprintf(stderr, "%zu rows, %zu flagged, %.2f s -> %s\n", res.rows.size(), res.flagged,
                 res.wall_time, spec.out.c_str());
    for (const auto& r : res.rows) {
      if (!r.flagged) continue;
      if (mode == mirrorchan::SweepMode::kPlaneWave)
        std::fprintf(stderr, "  flagged omega=%.17g: %s\n", r.omega, r.message.c_str());
      else
        std::fprintf(stderr, "  flagged xi=%.6g j=%d n=%d: %s\n", r.xi, r.j, r.n, r.message.c_str());
    }
    return res.flagged > 0 ? kFlagged : kOk;
  } catch (const std::exception& e) {
    std::cerr << "mirrorchan " << c.app->get_name() << ": " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian channels of a scalar field reflected by a moving mirror"};
  app.footer(kConfigHelp);
  app.require_subcommand(1);

  SweepCommand pw;
  pw.app = app.add_subcommand("planewave", "Carlitz-Willey plane-wave channel over an omega grid");
  add_common(pw);
  pw.bound.add(pw.app, "--omega-min", "omega_min", "first frequency");
  pw.bound.add(pw.app, "--omega-max", "omega_max", "last frequency");
  pw.bound.add(pw.app, "--omega-steps", "omega_steps", "number of frequencies");
  pw.bound.add(pw.app, "--omega-spacing", "omega_spacing", "linear or log");
  pw.bound.add(pw.app, "--cutoff-low", "cutoff_low", "infrared cutoff of the noise integral");
  pw.bound.add(pw.app, "--cutoff-high", "cutoff_high", "ultraviolet cutoff of the noise integral");
  pw.bound.add(pw.app, "--traj", "traj", "trajectory (plane waves: cw only)");

  SweepCommand pk;
  pk.app = app.add_subcommand("packet", "Wave-packet channel over a (j, n) grid");
  add_common(pk);
  pk.app->add_option("--preset", pk.preset, "fig1, fig2 or fig3");
  pk.bound.add(pk.app, "--traj", "traj", "cw or darcx");
  pk.bound.add(pk.app, "--epsilon", "epsilon", "packet frequency bin width");
  pk.bound.add(pk.app, "--xi", "xi", "Darcx xi, or a comma-separated list");
  pk.bound.add(pk.app, "--nu", "nu", "Darcx nu");
  pk.bound.add(pk.app, "--xi-nu-product", "xi_nu_product", "set nu = product / xi for each xi");
  pk.bound.add(pk.app, "--j-min", "j_min", "first frequency bin");
  pk.bound.add(pk.app, "--j-max", "j_max", "last frequency bin");
  pk.bound.add(pk.app, "--n-min", "n_min", "first time bin");
  pk.bound.add(pk.app, "--n-max", "n_max", "last time bin");
  pk.bound.add(pk.app, "--method", "method", "auto, analytic (cw) or numeric");
  pk.bound.add(pk.app, "--pad-bins", "pad_bins", "noise window padding in time bins (analytic)");

  auto* opt = app.add_subcommand("optimize-eps", "Bin width maximizing tau(j, n) of a CW packet");
  double kappa = 1.0;
  int j = 0, n = 0;
  mirrorchan::EpsilonSearch range;
  opt->add_option("--kappa", kappa, "Carlitz-Willey acceleration parameter")->capture_default_str();
  opt->add_option("--j", j, "frequency bin")->capture_default_str();
  opt->add_option("--n", n, "time bin")->capture_default_str();
  opt->add_option("--eps-min", range.lo, "lower end of the search, in units of kappa")->capture_default_str();
  opt->add_option("--eps-max", range.hi, "upper end of the search, in units of kappa")->capture_default_str();
  opt->add_option("--scan-points", range.scan_points, "coarse log-spaced scan before refinement")
      ->capture_default_str();

  auto* st = app.add_subcommand("selftest", "Run the built-in oracle suite");
  std::string fault;
  st->add_option("--inject-fault", fault, "test hook: gamma-branch")
      ->check(CLI::IsMember({"gamma-branch"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (pw.app->parsed()) return run_sweep_command(pw, mirrorchan::SweepMode::kPlaneWave);
  if (pk.app->parsed()) return run_sweep_command(pk, mirrorchan::SweepMode::kPacket);

  if (opt->parsed()) {
    try {
      const auto r = mirrorchan::optimize_epsilon(kappa, j, n, range);
      for (const auto& line : r.log) std::fprintf(stderr, "optimize-eps: %s\n", line.c_str());
      nlohmann::json out{{"kappa", kappa},          {"j", j},
                         {"n", n},                  {"epsilon", r.epsilon},
                         {"tau", r.tau},            {"evaluations", r.evaluations},
                         {"at_boundary", r.at_boundary}, {"bracket_violation", r.bracket_violation}};
      std::cout << out.dump(2) << "\n";
      return kOk;
    } catch (const mirrorchan::DomainError& e) {
      std::cerr << "mirrorchan optimize-eps: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "mirrorchan optimize-eps: " << e.what() << "\n";
      return kFailure;
    }
  }

  const auto report = mirrorchan::run_selftest(fault == "gamma-branch" ? mirrorchan::Fault::kGammaBranch
                                                                       : mirrorchan::Fault::kNone);
  for (const auto& c : report.checks)
    std::printf("%s %-58s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
  return report.passed() ? kOk : kFailure;
}
