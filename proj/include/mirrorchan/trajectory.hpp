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

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mirrorchan/types.hpp"

namespace mirrorchan {

enum class TrajectoryKind { kCarlitzWilley, kDarcx, kCustom };

// User-supplied mirror motion z(t). velocity/acceleration may be left empty, in which
// case central differences on position are used.
struct CustomMotion {
  std::function<double(double)> position;
  std::function<double(double)> velocity;
  std::function<double(double)> acceleration;
  double max_speed = 0.0;
  double time_scale = 1.0;
  std::vector<double> features;
  std::optional<double> horizon;
  std::string label = "custom";
};

// Timelike worldline z(t) of a perfectly reflecting mirror in 1+1 dimensions.
class Trajectory {
 public:
  // z(t) = -t - W(exp(-2 kappa t)) / kappa; horizon at v = 0.
  [[nodiscard]] static Trajectory carlitz_willey(double kappa);
  // z(t) = -(xi/nu) asinh(exp(nu t)); requires |xi| < 1, nu != 0.
  [[nodiscard]] static Trajectory darcx(double xi, double nu);
  [[nodiscard]] static Trajectory custom(CustomMotion motion);
  [[nodiscard]] static Trajectory static_mirror(double z0 = 0.0);

  [[nodiscard]] TrajectoryKind kind() const noexcept;
  [[nodiscard]] double kappa() const;
  [[nodiscard]] double xi() const;
  [[nodiscard]] double nu() const;
  [[nodiscard]] std::string label() const;

  [[nodiscard]] double position(double t) const;
  [[nodiscard]] double velocity(double t) const;
  [[nodiscard]] double acceleration(double t) const;
  [[nodiscard]] double proper_acceleration(double t) const;
  [[nodiscard]] double one_plus_velocity(double t) const;
  [[nodiscard]] double one_minus_velocity(double t) const;
  // v = t + z(t) and u = t - z(t) of the mirror event at time t.
  [[nodiscard]] double advanced_time(double t) const;
  [[nodiscard]] double retarded_time(double t) const;

  // Supremum of the advanced time, if finite.
  [[nodiscard]] std::optional<double> horizon() const;
  // Supremum of |zdot|; 1 for trajectories with a horizon.
  [[nodiscard]] double max_speed() const;
  [[nodiscard]] double time_scale() const;
  [[nodiscard]] std::vector<double> features() const;

  // Same motion in units where frequencies are divided by s and times multiplied by s.
  [[nodiscard]] Trajectory rescaled(double s) const;

 private:
  struct Cw {
    double kappa;
  };
  struct Dx {
    double xi;
    double nu;
  };
  using Repr = std::variant<Cw, Dx, CustomMotion>;
  explicit Trajectory(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

enum class RayDirection {
  kInFromOut,  // p(u): incoming null coordinate v reflected into outgoing u
  kOutFromIn,  // f(v): outgoing u produced by incoming v
};

// Reflection map between null coordinates. Closed forms are used for Carlitz-Willey;
// other motions are inverted by safeguarded Newton iteration on the mirror time.
class RayMap {
 public:
  RayMap(Trajectory traj, RayDirection dir) : traj_(std::move(traj)), dir_(dir) {}

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double evaluate_numeric(double x) const;
  // Mirror time t at which the ray labelled x meets the mirror.
  [[nodiscard]] double mirror_time(double x) const;
  [[nodiscard]] RayDirection direction() const noexcept { return dir_; }
  [[nodiscard]] const Trajectory& trajectory() const noexcept { return traj_; }

 private:
  Trajectory traj_;
  RayDirection dir_;
};

[[nodiscard]] RayMap ray_p(const Trajectory& traj);
[[nodiscard]] RayMap ray_f(const Trajectory& traj);

}  // namespace mirrorchan
