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

#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mirrorchan/sweep.hpp"

using namespace mirrorchan;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

SweepSpec planewave_spec() {
  SweepSpec s;
  s.mode = SweepMode::kPlaneWave;
  s.omega_min = 0.12;
  s.omega_max = 0.2;
  s.omega_steps = 9;
  return s;
}

}  // namespace

TEST_CASE("config parsing") {
  const Settings s = parse_config("# comment\nkappa = 2.5\n\n  xi=0.1,0.2 # trailing\nout = a b.csv\n");
  CHECK(s.at("kappa") == "2.5");
  CHECK(s.at("xi") == "0.1,0.2");
  CHECK(s.at("out") == "a b.csv");
  CHECK_THROWS_AS((void)parse_config("kapa = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_config("kappa 1\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)read_config_file("/nonexistent/mirrorchan.cfg"), std::invalid_argument);
  SweepSpec spec;
  CHECK_THROWS_AS(apply_setting(spec, "kappa", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(spec, "traj", "hyperbolic"), std::invalid_argument);
  apply_setting(spec, "xi", "0.1, 0.2,0.3");
  CHECK(spec.xi.size() == 3);
}

TEST_CASE("settings precedence: later layers win") {
  SweepSpec s;
  apply_settings(s, preset_settings("fig3"));
  CHECK(s.traj == TrajChoice::kDarcx);
  CHECK(s.epsilon == 2e-44);
  CHECK(s.xi.size() == 3);
  apply_settings(s, parse_config("epsilon = 1e-40\n"));
  apply_settings(s, Settings{{"n_max", "3"}});
  CHECK(s.epsilon == 1e-40);
  CHECK(s.n_max == 3);
  CHECK(s.n_min == -20);
  CHECK_THROWS_AS((void)preset_settings("fig9"), std::invalid_argument);
}

TEST_CASE("validation") {
  SweepSpec s = planewave_spec();
  s.omega_steps = 0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = planewave_spec();
  s.traj = TrajChoice::kDarcx;
  CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("undefined tau"), std::invalid_argument);
  SweepSpec p;
  p.n_min = 2;
  p.n_max = 1;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = SweepSpec{};
  p.traj = TrajChoice::kDarcx;
  p.xi = {1.5};
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  CHECK(resolved_tau_tol(planewave_spec()) == 1e-9);
  CHECK(resolved_tau_tol(SweepSpec{}) == 1e-3);
}

TEST_CASE("plane-wave sweep crosses the classical-additive point monotonically") {
  SweepSpec s = planewave_spec();
  s.omega_min = 1.0 / kTwoPi - 0.02;
  s.omega_max = 1.0 / kTwoPi + 0.02;
  s.omega_steps = 5;
  const SweepResult r = run_sweep(s);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.flagged == 0);
  const char* want[] = {"amplifier", "amplifier", "classical_additive", "attenuator", "attenuator"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r.rows[i].cls == want[i]);
    if (i > 0) CHECK(r.rows[i].omega > r.rows[i - 1].omega);
  }
  CHECK(r.rows[2].tau == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("CSV format and byte-identical output") {
  const auto dir = std::filesystem::temp_directory_path() / "mirrorchan_test_sweep";
  std::filesystem::create_directories(dir);
  SweepSpec s = planewave_spec();
  s.out = (dir / "a.csv").string();
  (void)run_planewave_sweep(s);
  s.out = (dir / "b.csv").string();
  s.jobs = 4;
  (void)run_planewave_sweep(s);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.rfind("omega,kappa,cutoff_low,cutoff_high,tau,n_bar,class\n", 0) == 0);
  CHECK(a.find('\r') == std::string::npos);
  CHECK(std::count(a.begin(), a.end(), '\n') == 10);
  // 17 significant digits round-trip.
  const std::string first = a.substr(a.find('\n') + 1, a.find(',', a.find('\n')) - a.find('\n') - 1);
  CHECK(std::stod(first) == 0.12);
  CHECK(std::filesystem::exists(dir / "a.csv.meta.json"));
  CHECK(slurp(dir / "a.csv.meta.json").find("\"tau_tol\"") != std::string::npos);
}

TEST_CASE("unphysical plane-wave points are flagged, not dropped") {
  SweepSpec s = planewave_spec();
  s.omega_min = 0.02;
  s.omega_max = 0.02;
  s.omega_steps = 1;
  const SweepResult r = run_sweep(s);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.flagged == 1);
  CHECK(r.rows[0].cls == "unphysical");
}

TEST_CASE("small packet sweep") {
  SweepSpec s;
  s.j_max = 1;
  s.n_min = -1;
  s.n_max = 1;
  s.jobs = 3;
  const SweepResult r = run_sweep(s);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.flagged == 0);
  CHECK(r.rows[0].j == 0);
  CHECK(r.rows[0].n == -1);
  CHECK(r.rows[4].j == 1);
  CHECK(r.rows[4].n == 0);
  CHECK(r.rows[1].tau == doctest::Approx(0.421184178686045).epsilon(1e-9));
  CHECK(r.rows[1].cls == "attenuator");
  CHECK(csv_header(SweepMode::kPacket) == "traj,kappa,epsilon,xi,nu,j,n,tau,n_bar,class,quad_error");
  const std::string row = csv_row(SweepMode::kPacket, r.rows[1]);
  CHECK(row.rfind("cw,1,0.10000000000000001,nan,nan,0,0,", 0) == 0);
}

TEST_CASE("epsilon search reports a maximum on the edge of the range") {
  // tau(0, 0) falls monotonically with eps at kappa = 1.
  EpsilonSearch range;
  range.lo = 0.01;
  range.hi = 1.0;
  range.scan_points = 7;
  const EpsilonOptimum r = optimize_epsilon(1.0, 0, 0, range);
  CHECK(r.at_boundary);
  CHECK(r.epsilon == doctest::Approx(0.01).epsilon(1e-3));
  CHECK(r.tau == doctest::Approx(packet_tau({0, 0, 0.01}, 1.0)).epsilon(1e-6));
  CHECK(r.tau < 4.0 / (3.0 * kPi));
  CHECK_FALSE(r.bracket_violation);
  CHECK_THROWS_AS((void)optimize_epsilon(1.0, 0, 0, EpsilonSearch{1.0, 0.5}), DomainError);
}
