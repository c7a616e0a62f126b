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

#include "mirrorchan/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include <json.hpp>

#include "mirrorchan/simd/phasor.hpp"
#include "mirrorchan/trajectory.hpp"
#include "mirrorchan/wavepacket.hpp"

namespace mirrorchan {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw std::invalid_argument("invalid value '" + std::string(value) + "' for " + std::string(key));
}

double to_double(std::string_view key, std::string_view value) {
  value = trim(value);
  double x = 0.0;
  const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc() || p != value.data() + value.size() || !std::isfinite(x))
    bad_value(key, value);
  return x;
}

int to_int(std::string_view key, std::string_view value) {
  value = trim(value);
  int x = 0;
  const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc() || p != value.data() + value.size()) bad_value(key, value);
  return x;
}

std::vector<double> to_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const auto comma = value.find(',', pos);
    const auto item = value.substr(pos, comma == std::string_view::npos ? value.npos : comma - pos);
    out.push_back(to_double(key, item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string_view traj_name(TrajChoice t) {
  return t == TrajChoice::kDarcx ? "darcx" : "cw";
}

std::string_view method_name(PacketMethod m) {
  switch (m) {
    case PacketMethod::kAnalytic:
      return "analytic";
    case PacketMethod::kNumeric:
      return "numeric";
    case PacketMethod::kAuto:
      break;
  }
  return "auto";
}

double nu_for(const SweepSpec& spec, double xi) {
  return spec.xi_nu_product ? *spec.xi_nu_product / xi : spec.nu;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

double omega_at(const SweepSpec& s, int i) {
  if (s.omega_steps == 1) return s.omega_min;
  const double f = static_cast<double>(i) / (s.omega_steps - 1);
  if (s.omega_log) return s.omega_min * std::pow(s.omega_max / s.omega_min, f);
  return s.omega_min + f * (s.omega_max - s.omega_min);
}

void fill_params(ResultRow& r, const ChannelPair& ch, const ClassifyOptions& copt) {
  r.tau = ch.T.det();
  r.quad_error = ch.quad_error;
  r.margin = physicality_margin(ch);
  try {
    const CanonicalParams p = canonical_params(ch, copt);
    r.n_bar = p.n_bar;
    r.cls = std::string(class_name(p.cls));
  } catch (const UnphysicalError& e) {
    r.n_bar = std::nan("");
    r.cls = "unphysical";
    r.flagged = true;
    r.message = e.what();
  }
}

ResultRow planewave_point(const SweepSpec& s, int i) {
  ResultRow r;
  r.traj = "cw";
  r.omega = omega_at(s, i);
  r.cutoff_low = s.cutoff_low;
  r.cutoff_high = s.cutoff_high;
  r.kappa = s.kappa;
  r.epsilon = std::nan("");
  r.xi = std::nan("");
  r.nu = std::nan("");
  ClassifyOptions copt{resolved_tau_tol(s), s.physicality_tol};
  try {
    fill_params(r, assemble_planewave(r.omega, s.kappa, s.cutoff_low, s.cutoff_high), copt);
  } catch (const UnphysicalError& e) {
    // Cutoffs too narrow: N has a negative eigenvalue at this frequency.
    const ChannelPair ch{s_block_planewave(r.omega, r.omega, s.kappa),
                         planewave_noise_closed(r.omega, s.kappa, s.cutoff_low, s.cutoff_high)};
    r.tau = ch.T.det();
    r.margin = physicality_margin(ch);
    r.n_bar = std::nan("");
    r.cls = "unphysical";
    r.flagged = true;
    r.message = e.what();
  }
  return r;
}

ResultRow packet_point(const SweepSpec& s, double xi, int j, int n) {
  ResultRow r;
  const bool cw = s.traj == TrajChoice::kCarlitzWilley;
  r.traj = std::string(traj_name(s.traj));
  r.kappa = cw ? s.kappa : std::nan("");
  r.epsilon = s.epsilon;
  r.xi = cw ? std::nan("") : xi;
  r.nu = cw ? std::nan("") : nu_for(s, xi);
  r.j = j;
  r.n = n;
  const PacketIndex idx{j, n, s.epsilon};
  PacketChannel pc;
  if (cw && s.method != PacketMethod::kNumeric) {
    PacketNoiseOptions opt;
    opt.pad_bins = s.pad_bins;
    pc = assemble_packet(idx, s.kappa, opt);
  } else {
    const Trajectory traj = cw ? Trajectory::carlitz_willey(s.kappa) : Trajectory::darcx(xi, r.nu);
    pc = assemble_packet_numeric(traj, idx);
  }
  // quad_error is absolute on entries of size ~max(1, |tau|).
  const double tol = std::max(s.physicality_tol,
                              pc.channel.quad_error / std::max(1.0, std::fabs(pc.channel.T.det())));
  fill_params(r, pc.channel, ClassifyOptions{resolved_tau_tol(s), tol});
  return r;
}

template <class Fn>
std::vector<ResultRow> run_pool(std::size_t count, int jobs, Fn&& point) {
  std::vector<ResultRow> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        rows[i] = point(i);
      } catch (const std::exception& e) {
        rows[i].flagged = true;
        rows[i].cls = "error";
        rows[i].tau = std::nan("");
        rows[i].n_bar = std::nan("");
        rows[i].quad_error = std::nan("");
        rows[i].message = e.what();
      }
      rows[i].wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const auto k = static_cast<std::size_t>(std::clamp(jobs, 1, 1024));
  std::vector<std::jthread> pool;
  pool.reserve(k - 1);
  for (std::size_t t = 1; t < std::min(k, count); ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys{
      "traj",       "kappa",       "epsilon",   "xi",          "nu",       "xi_nu_product",
      "omega_min",  "omega_max",   "omega_steps", "omega_spacing", "cutoff_low", "cutoff_high",
      "j_min",      "j_max",       "n_min",     "n_max",       "method",   "pad_bins",
      "tau_tol",    "physicality_tol", "flag_tol", "out",       "jobs"};
  return keys;
}

void apply_setting(SweepSpec& s, std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "traj") {
    if (v == "cw") s.traj = TrajChoice::kCarlitzWilley;
    else if (v == "darcx") s.traj = TrajChoice::kDarcx;
    else bad_value(key, v);
  } else if (key == "kappa") {
    s.kappa = to_double(key, v);
  } else if (key == "epsilon") {
    s.epsilon = to_double(key, v);
  } else if (key == "xi") {
    s.xi = to_list(key, v);
  } else if (key == "nu") {
    s.nu = to_double(key, v);
    s.xi_nu_product.reset();
  } else if (key == "xi_nu_product") {
    s.xi_nu_product = to_double(key, v);
  } else if (key == "omega_min") {
    s.omega_min = to_double(key, v);
  } else if (key == "omega_max") {
    s.omega_max = to_double(key, v);
  } else if (key == "omega_steps") {
    s.omega_steps = to_int(key, v);
  } else if (key == "omega_spacing") {
    if (v == "log") s.omega_log = true;
    else if (v == "linear") s.omega_log = false;
    else bad_value(key, v);
  } else if (key == "cutoff_low") {
    s.cutoff_low = to_double(key, v);
  } else if (key == "cutoff_high") {
    s.cutoff_high = to_double(key, v);
  } else if (key == "j_min") {
    s.j_min = to_int(key, v);
  } else if (key == "j_max") {
    s.j_max = to_int(key, v);
  } else if (key == "n_min") {
    s.n_min = to_int(key, v);
  } else if (key == "n_max") {
    s.n_max = to_int(key, v);
  } else if (key == "method") {
    if (v == "auto") s.method = PacketMethod::kAuto;
    else if (v == "analytic") s.method = PacketMethod::kAnalytic;
    else if (v == "numeric") s.method = PacketMethod::kNumeric;
    else bad_value(key, v);
  } else if (key == "pad_bins") {
    s.pad_bins = to_double(key, v);
  } else if (key == "tau_tol") {
    s.tau_tol = to_double(key, v);
  } else if (key == "physicality_tol") {
    s.physicality_tol = to_double(key, v);
  } else if (key == "flag_tol") {
    s.flag_tol = to_double(key, v);
  } else if (key == "out") {
    s.out = std::string(v);
  } else if (key == "jobs") {
    s.jobs = to_int(key, v);
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
}

void apply_settings(SweepSpec& spec, const Settings& s) {
  for (const auto& [k, v] : s) apply_setting(spec, k, v);
}

Settings parse_config(std::string_view text) {
  Settings out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const auto& keys = setting_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

Settings read_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3"}; }

Settings preset_settings(std::string_view name) {
  if (name == "fig1" || name == "fig2") {
    return {{"traj", "cw"},   {"kappa", "1"},   {"epsilon", "0.1"}, {"j_min", "0"},
            {"j_max", "4"},   {"n_min", "-40"}, {"n_max", "40"},    {"method", "auto"}};
  }
  if (name == "fig3") {
    return {{"traj", "darcx"},
            {"epsilon", "2e-44"},
            {"xi", "5.6e-27,3.6e-27,1.6e-27"},
            {"xi_nu_product", "1e-50"},
            {"j_min", "0"},
            {"j_max", "0"},
            {"n_min", "-20"},
            {"n_max", "20"},
            {"method", "numeric"}};
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

void validate(const SweepSpec& s) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  need(s.jobs >= 1, "jobs must be >= 1");
  need(!s.tau_tol || *s.tau_tol >= 0.0, "tau_tol must be >= 0");
  need(s.physicality_tol >= 0.0 && s.flag_tol > 0.0, "tolerances must be positive");
  if (s.mode == SweepMode::kPlaneWave) {
    need(s.traj == TrajChoice::kCarlitzWilley,
         "plane-wave mode needs the Carlitz-Willey trajectory: for Darcx the plane wave approach "
         "leads to undefined tau");
    need(s.kappa > 0.0, "kappa must be positive");
    need(s.omega_steps >= 1, "empty omega grid (omega_steps < 1)");
    need(s.omega_min > 0.0 && s.omega_max >= s.omega_min, "empty omega grid (need 0 < omega_min <= omega_max)");
    need(s.omega_steps == 1 || s.omega_max > s.omega_min, "omega_max must exceed omega_min for more than one step");
    need(s.cutoff_low > 0.0 && s.cutoff_high > s.cutoff_low, "need 0 < cutoff_low < cutoff_high");
    return;
  }
  need(s.epsilon > 0.0, "epsilon must be positive");
  need(s.j_min >= 0 && s.j_max >= s.j_min, "empty j grid (need 0 <= j_min <= j_max)");
  need(s.n_max >= s.n_min, "empty n grid (need n_min <= n_max)");
  need(s.pad_bins >= 1.0, "pad_bins must be >= 1");
  if (s.traj == TrajChoice::kCarlitzWilley) {
    need(s.kappa > 0.0, "kappa must be positive");
  } else {
    need(!s.xi.empty(), "empty xi list");
    need(s.method != PacketMethod::kAnalytic, "the analytic packet method is Carlitz-Willey only");
    for (double xi : s.xi) {
      need(xi != 0.0 && std::fabs(xi) < 1.0, "xi must satisfy 0 < |xi| < 1");
      const double nu = nu_for(s, xi);
      need(std::isfinite(nu) && nu != 0.0, "nu must be finite and nonzero");
    }
  }
}

double resolved_tau_tol(const SweepSpec& s) {
  if (s.tau_tol) return *s.tau_tol;
  return s.mode == SweepMode::kPlaneWave ? 1e-9 : 1e-3;
}

std::size_t grid_size(const SweepSpec& s) {
  if (s.mode == SweepMode::kPlaneWave) return static_cast<std::size_t>(std::max(s.omega_steps, 0));
  const auto nj = static_cast<std::size_t>(std::max(s.j_max - s.j_min + 1, 0));
  const auto nn = static_cast<std::size_t>(std::max(s.n_max - s.n_min + 1, 0));
  const std::size_t nx = s.traj == TrajChoice::kDarcx ? s.xi.size() : 1;
  return nx * nj * nn;
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  const std::size_t count = grid_size(spec);
  if (spec.mode == SweepMode::kPlaneWave) {
    res.rows = run_pool(count, spec.jobs,
                        [&](std::size_t i) { return planewave_point(spec, static_cast<int>(i)); });
  } else {
    const auto nn = static_cast<std::size_t>(spec.n_max - spec.n_min + 1);
    const auto nj = static_cast<std::size_t>(spec.j_max - spec.j_min + 1);
    res.rows = run_pool(count, spec.jobs, [&](std::size_t i) {
      const std::size_t ix = i / (nj * nn);
      const int j = spec.j_min + static_cast<int>((i / nn) % nj);
      const int n = spec.n_min + static_cast<int>(i % nn);
      const double xi = spec.traj == TrajChoice::kDarcx ? spec.xi[ix] : std::nan("");
      return packet_point(spec, xi, j, n);
    });
  }
  for (auto& r : res.rows) {
    if (!(r.quad_error <= spec.flag_tol * std::max(1.0, std::fabs(r.tau)))) {
      r.flagged = true;
      if (r.message.empty()) r.message = "quadrature error above flag tolerance";
    }
    if (r.flagged) ++res.flagged;
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string csv_header(SweepMode mode) {
  return mode == SweepMode::kPlaneWave ? "omega,kappa,cutoff_low,cutoff_high,tau,n_bar,class"
                                       : "traj,kappa,epsilon,xi,nu,j,n,tau,n_bar,class,quad_error";
}

std::string csv_row(SweepMode mode, const ResultRow& r) {
  std::string s;
  if (mode == SweepMode::kPlaneWave) {
    s = format_double(r.omega) + ',' + format_double(r.kappa) + ',' + format_double(r.cutoff_low) +
        ',' + format_double(r.cutoff_high) + ',' + format_double(r.tau) + ',' +
        format_double(r.n_bar) + ',' + r.cls;
  } else {
    s = r.traj + ',' + format_double(r.kappa) + ',' + format_double(r.epsilon) + ',' +
        format_double(r.xi) + ',' + format_double(r.nu) + ',' + std::to_string(r.j) + ',' +
        std::to_string(r.n) + ',' + format_double(r.tau) + ',' + format_double(r.n_bar) + ',' +
        r.cls + ',' + format_double(r.quad_error);
  }
  return s;
}

std::string to_csv(SweepMode mode, const SweepResult& result) {
  std::string out = csv_header(mode) + '\n';
  for (const auto& r : result.rows) out += csv_row(mode, r) + '\n';
  return out;
}

std::string metadata_json(const SweepSpec& s, const SweepResult& result) {
  using nlohmann::json;
  json j;
  const bool pw = s.mode == SweepMode::kPlaneWave;
  j["mode"] = pw ? "planewave" : "packet";
  j["preset"] = s.preset;
  j["traj"] = traj_name(s.traj);
  if (s.traj == TrajChoice::kCarlitzWilley) j["kappa"] = s.kappa;
  if (pw) {
    j["omega_min"] = s.omega_min;
    j["omega_max"] = s.omega_max;
    j["omega_steps"] = s.omega_steps;
    j["omega_spacing"] = s.omega_log ? "log" : "linear";
    j["cutoff_low"] = s.cutoff_low;
    j["cutoff_high"] = s.cutoff_high;
    j["noise"] = "closed_form";
  } else {
    j["epsilon"] = s.epsilon;
    if (s.traj == TrajChoice::kDarcx) {
      j["xi"] = s.xi;
      json nus = json::array();
      for (double xi : s.xi) nus.push_back(nu_for(s, xi));
      j["nu"] = nus;
      if (s.xi_nu_product) j["xi_nu_product"] = *s.xi_nu_product;
    }
    j["j_min"] = s.j_min;
    j["j_max"] = s.j_max;
    j["n_min"] = s.n_min;
    j["n_max"] = s.n_max;
    const bool analytic = s.traj == TrajChoice::kCarlitzWilley && s.method != PacketMethod::kNumeric;
    j["method"] = method_name(s.method);
    j["resolved_method"] = analytic ? "analytic" : "numeric";
    if (analytic) {
      const PacketNoiseOptions d;
      j["pad_bins"] = s.pad_bins;
      j["samples_per_bin"] = d.samples_per_bin;
    } else {
      const PacketNumericOptions d;
      const NumericNoiseOptions nd;
      j["damping_scale"] = d.damping_scale;
      j["damping"] = d.damping == Damping::kGaussian ? "gaussian" : "exponential";
      j["damping_levels"] = d.levels;
      j["nodes_per_panel"] = d.nodes_per_panel;
      j["damping_cutoff"] = d.damping_cutoff;
      j["coefficient_rel_tol"] = d.rel_tol;
      j["noise_window_bins"] = nd.window_bins;
      j["noise_samples_per_eta"] = nd.samples_per_eta;
    }
  }
  j["convention"] = "symplectic_block";
  j["tau_tol"] = resolved_tau_tol(s);
  j["physicality_tol"] = s.physicality_tol;
  j["flag_tol"] = s.flag_tol;
  j["jobs"] = s.jobs;
  j["simd"] = simd::isa_name(simd::active_isa());
  j["rows"] = result.rows.size();
  j["flagged"] = result.flagged;
  json flagged = json::array();
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& r = result.rows[i];
    if (r.flagged) flagged.push_back({{"row", i}, {"message", r.message}});
  }
  j["flagged_rows"] = flagged;
  j["csv"] = s.out;
  return j.dump(2) + '\n';
}

namespace {

SweepResult run_and_write(SweepSpec spec, SweepMode mode) {
  spec.mode = mode;
  validate(spec);
  if (spec.out.empty()) throw std::invalid_argument("no output path (out)");
  SweepResult res = run_sweep(spec);
  write_file(spec.out, to_csv(mode, res));
  write_file(spec.out + ".meta.json", metadata_json(spec, res));
  return res;
}

}  // namespace

SweepResult run_planewave_sweep(const SweepSpec& spec) {
  return run_and_write(spec, SweepMode::kPlaneWave);
}

SweepResult run_packet_sweep(const SweepSpec& spec) {
  return run_and_write(spec, SweepMode::kPacket);
}

double packet_tau(const PacketIndex& idx, double kappa) {
  const PacketCoefficients c = packet_coefficients(idx, central_frequency(idx), kappa);
  if (!c.converged) throw ConvergenceError("packet_tau: coefficients did not converge", c.quad_error);
  return s_block(c.alpha, c.beta).det();
}

EpsilonOptimum optimize_epsilon(double kappa, int j, int n, const EpsilonSearch& range) {
  if (!(kappa > 0.0) || !(range.lo > 0.0) || !(range.hi > range.lo) || range.scan_points < 3)
    throw DomainError("optimize_epsilon: need kappa > 0, 0 < lo < hi and scan_points >= 3");
  EpsilonOptimum res;
  auto tau_at = [&](double log_eps) {
    ++res.evaluations;
    return packet_tau(PacketIndex{j, n, std::exp(log_eps)}, kappa);
  };
  const double a = std::log(range.lo * kappa);
  const double b = std::log(range.hi * kappa);
  const int m = range.scan_points;
  std::vector<double> xs(static_cast<std::size_t>(m)), ys(xs.size());
  for (int i = 0; i < m; ++i) {
    xs[static_cast<std::size_t>(i)] = a + (b - a) * i / (m - 1);
    ys[static_cast<std::size_t>(i)] = tau_at(xs[static_cast<std::size_t>(i)]);
  }
  int peaks = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool left = i == 0 || ys[i] > ys[i - 1];
    const bool right = i + 1 == xs.size() || ys[i] >= ys[i + 1];
    if (left && right) ++peaks;
  }
  const auto best = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  if (peaks > 1) {
    res.bracket_violation = true;
    res.log.push_back("scan has " + std::to_string(peaks) +
                      " local maxima; refining around the best grid point");
  }
  res.at_boundary = best == 0 || best + 1 == xs.size();
  if (res.at_boundary)
    res.log.push_back(std::string("maximum on the ") + (best == 0 ? "lower" : "upper") +
                      " edge of the search range");

  double lo = xs[best == 0 ? 0 : best - 1];
  double hi = xs[std::min(best + 1, xs.size() - 1)];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = tau_at(x1), f2 = tau_at(x2);
  while (hi - lo > range.rel_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = tau_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = tau_at(x1);
    }
  }
  double x = f1 > f2 ? x1 : x2;
  double f = std::max(f1, f2);
  if (ys[best] > f) {
    x = xs[best];
    f = ys[best];
  }
  res.epsilon = std::exp(x);
  res.tau = f;
  return res;
}

}  // namespace mirrorchan
