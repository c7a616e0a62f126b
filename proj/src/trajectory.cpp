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

#include "mirrorchan/trajectory.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mirrorchan/specfun.hpp"

namespace mirrorchan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double cw_w(double kappa, double t) { return lambert_w0_exp(-2.0 * kappa * t); }

double asinh_exp(double x) {
  if (x > 20.0) return x + std::log(2.0) + 0.25 * std::exp(-2.0 * x);
  if (x < -20.0) return std::exp(x);
  return std::asinh(std::exp(x));
}

double fd_velocity(const CustomMotion& m, double t) {
  if (m.velocity) return m.velocity(t);
  const double h = 1e-5 * m.time_scale;
  return (m.position(t + h) - m.position(t - h)) / (2.0 * h);
}

double fd_acceleration(const CustomMotion& m, double t) {
  if (m.acceleration) return m.acceleration(t);
  const double h = 1e-4 * m.time_scale;
  if (m.velocity) return (m.velocity(t + h) - m.velocity(t - h)) / (2.0 * h);
  return (m.position(t + h) - 2.0 * m.position(t) + m.position(t - h)) / (h * h);
}

double darcx_velocity(double xi, double nu, double t) {
  const double x = nu * t;
  if (x > 0.0) return -xi / std::sqrt(1.0 + std::exp(-2.0 * x));
  const double e = std::exp(x);
  return -xi * e / std::sqrt(1.0 + e * e);
}

}  // namespace

Trajectory Trajectory::carlitz_willey(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw DomainError("carlitz_willey: kappa must be positive and finite");
  return Trajectory(Cw{kappa});
}

Trajectory Trajectory::darcx(double xi, double nu) {
  if (!std::isfinite(xi) || !(std::fabs(xi) < 1.0))
    throw DomainError("darcx: |xi| must be below 1 for a timelike worldline");
  if (!std::isfinite(nu) || nu == 0.0) throw DomainError("darcx: nu must be finite and nonzero");
  return Trajectory(Dx{xi, nu});
}

Trajectory Trajectory::custom(CustomMotion motion) {
  if (!motion.position) throw DomainError("custom trajectory: position function required");
  if (!(motion.max_speed < 1.0) || motion.max_speed < 0.0)
    throw DomainError("custom trajectory: max_speed must lie in [0, 1)");
  if (!(motion.time_scale > 0.0)) throw DomainError("custom trajectory: time_scale must be positive");
  return Trajectory(std::move(motion));
}

Trajectory Trajectory::static_mirror(double z0) {
  CustomMotion m;
  m.position = [z0](double) { return z0; };
  m.velocity = [](double) { return 0.0; };
  m.acceleration = [](double) { return 0.0; };
  m.max_speed = 0.0;
  m.time_scale = 1.0;
  std::ostringstream os;
  os << "static(" << z0 << ")";
  m.label = os.str();
  return Trajectory(std::move(m));
}

TrajectoryKind Trajectory::kind() const noexcept {
  return std::visit(Overloaded{[](const Cw&) { return TrajectoryKind::kCarlitzWilley; },
                               [](const Dx&) { return TrajectoryKind::kDarcx; },
                               [](const CustomMotion&) { return TrajectoryKind::kCustom; }},
                    repr_);
}

double Trajectory::kappa() const {
  if (const auto* c = std::get_if<Cw>(&repr_)) return c->kappa;
  throw DomainError("kappa: not a Carlitz-Willey trajectory");
}

double Trajectory::xi() const {
  if (const auto* d = std::get_if<Dx>(&repr_)) return d->xi;
  throw DomainError("xi: not a Darcx trajectory");
}

double Trajectory::nu() const {
  if (const auto* d = std::get_if<Dx>(&repr_)) return d->nu;
  throw DomainError("nu: not a Darcx trajectory");
}

std::string Trajectory::label() const {
  return std::visit(Overloaded{[](const Cw&) { return std::string("cw"); },
                               [](const Dx&) { return std::string("darcx"); },
                               [](const CustomMotion& m) { return m.label; }},
                    repr_);
}

double Trajectory::position(double t) const {
  return std::visit(
      Overloaded{[t](const Cw& c) { return -t - cw_w(c.kappa, t) / c.kappa; },
                 [t](const Dx& d) { return -(d.xi / d.nu) * asinh_exp(d.nu * t); },
                 [t](const CustomMotion& m) { return m.position(t); }},
      repr_);
}

double Trajectory::velocity(double t) const {
  return std::visit(Overloaded{[t](const Cw& c) {
                                 const double w = cw_w(c.kappa, t);
                                 return (w - 1.0) / (w + 1.0);
                               },
                               [t](const Dx& d) { return darcx_velocity(d.xi, d.nu, t); },
                               [t](const CustomMotion& m) { return fd_velocity(m, t); }},
                    repr_);
}

double Trajectory::acceleration(double t) const {
  return std::visit(Overloaded{[t](const Cw& c) {
                                 const double w = cw_w(c.kappa, t);
                                 const double q = 1.0 + w;
                                 return -4.0 * c.kappa * w / (q * q * q);
                               },
                               [t](const Dx& d) {
                                 const double x = d.nu * t;
                                 const double q = std::exp(-std::fabs(x));
                                 const double num = x > 0.0 ? q * q : q;
                                 return -d.xi * d.nu * num / std::pow(1.0 + q * q, 1.5);
                               },
                               [t](const CustomMotion& m) { return fd_acceleration(m, t); }},
                    repr_);
}

double Trajectory::proper_acceleration(double t) const {
  if (const auto* c = std::get_if<Cw>(&repr_)) return -c->kappa / (2.0 * std::sqrt(cw_w(c->kappa, t)));
  const double g = one_plus_velocity(t) * one_minus_velocity(t);
  return acceleration(t) / std::pow(g, 1.5);
}

double Trajectory::one_plus_velocity(double t) const {
  if (const auto* c = std::get_if<Cw>(&repr_)) {
    const double w = cw_w(c->kappa, t);
    return 2.0 * w / (1.0 + w);
  }
  return 1.0 + velocity(t);
}

double Trajectory::one_minus_velocity(double t) const {
  if (const auto* c = std::get_if<Cw>(&repr_)) return 2.0 / (1.0 + cw_w(c->kappa, t));
  return 1.0 - velocity(t);
}

double Trajectory::advanced_time(double t) const {
  if (const auto* c = std::get_if<Cw>(&repr_)) return -cw_w(c->kappa, t) / c->kappa;
  return t + position(t);
}

double Trajectory::retarded_time(double t) const {
  if (const auto* c = std::get_if<Cw>(&repr_)) return 2.0 * t + cw_w(c->kappa, t) / c->kappa;
  return t - position(t);
}

std::optional<double> Trajectory::horizon() const {
  return std::visit(Overloaded{[](const Cw&) { return std::optional<double>(0.0); },
                               [](const Dx&) { return std::optional<double>(); },
                               [](const CustomMotion& m) { return m.horizon; }},
                    repr_);
}

double Trajectory::max_speed() const {
  return std::visit(Overloaded{[](const Cw&) { return 1.0; },
                               [](const Dx& d) { return std::fabs(d.xi); },
                               [](const CustomMotion& m) { return m.horizon ? 1.0 : m.max_speed; }},
                    repr_);
}

double Trajectory::time_scale() const {
  return std::visit(Overloaded{[](const Cw& c) { return 1.0 / c.kappa; },
                               [](const Dx& d) { return 1.0 / std::fabs(d.nu); },
                               [](const CustomMotion& m) { return m.time_scale; }},
                    repr_);
}

std::vector<double> Trajectory::features() const {
  return std::visit(Overloaded{[](const Cw&) { return std::vector<double>{0.0}; },
                               [](const Dx&) { return std::vector<double>{0.0}; },
                               [](const CustomMotion& m) { return m.features; }},
                    repr_);
}

Trajectory Trajectory::rescaled(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("rescaled: scale must be positive");
  return std::visit(
      Overloaded{[s](const Cw& c) { return carlitz_willey(c.kappa / s); },
                 [s](const Dx& d) { return darcx(d.xi, d.nu / s); },
                 [s](const CustomMotion& m) {
                   CustomMotion r;
                   r.position = [p = m.position, s](double t) { return s * p(t / s); };
                   if (m.velocity) r.velocity = [v = m.velocity, s](double t) { return v(t / s); };
                   if (m.acceleration)
                     r.acceleration = [a = m.acceleration, s](double t) { return a(t / s) / s; };
                   r.max_speed = m.max_speed;
                   r.time_scale = m.time_scale * s;
                   for (double f : m.features) r.features.push_back(f * s);
                   if (m.horizon) r.horizon = *m.horizon * s;
                   r.label = m.label;
                   return Trajectory(std::move(r));
                 }},
      repr_);
}

double RayMap::mirror_time(double x) const {
  if (!std::isfinite(x)) throw DomainError("ray map: non-finite argument");
  const bool from_u = dir_ == RayDirection::kInFromOut;
  if (!from_u) {
    if (const auto h = traj_.horizon(); h && !(x < *h))
      throw DomainError("ray map f(v): v lies at or beyond the horizon");
  }
  auto h = [&](double t) { return from_u ? traj_.retarded_time(t) : traj_.advanced_time(t); };
  auto dh = [&](double t) {
    return from_u ? traj_.one_minus_velocity(t) : traj_.one_plus_velocity(t);
  };
  const double t0 = 0.5 * x;
  double step = std::fmax(1.0, 0.5 * std::fabs(x)) * traj_.time_scale();
  double lo = t0, hi = t0;
  int guard = 0;
  while (h(lo) > x) {
    lo -= step;
    step *= 2.0;
    if (++guard > 2000 || !std::isfinite(lo)) throw DomainError("ray map: cannot bracket root");
  }
  step = std::fmax(1.0, 0.5 * std::fabs(x)) * traj_.time_scale();
  while (h(hi) < x) {
    hi += step;
    step *= 2.0;
    if (++guard > 2000 || !std::isfinite(hi)) throw DomainError("ray map: cannot bracket root");
  }
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double g = h(t) - x;
    if (g == 0.0) return t;
    if (g < 0.0)
      lo = t;
    else
      hi = t;
    const double d = dh(t);
    double next = d > 0.0 ? t - g / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double dt = std::fabs(next - t);
    t = next;
    if (dt <= 2.0 * std::numeric_limits<double>::epsilon() * std::fmax(1.0, std::fabs(t)) ||
        hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::fmax(1.0, std::fabs(t)))
      return t;
  }
  return t;
}

double RayMap::evaluate_numeric(double x) const {
  const double t = mirror_time(x);
  return dir_ == RayDirection::kInFromOut ? traj_.advanced_time(t) : traj_.retarded_time(t);
}

double RayMap::operator()(double x) const {
  if (traj_.kind() == TrajectoryKind::kCarlitzWilley) {
    const double k = traj_.kappa();
    if (dir_ == RayDirection::kInFromOut) {
      if (!std::isfinite(x)) throw DomainError("ray map p(u): non-finite argument");
      return -std::exp(-k * x) / k;
    }
    if (!(x < 0.0)) throw DomainError("ray map f(v): v lies at or beyond the horizon");
    return -std::log(-k * x) / k;
  }
  return evaluate_numeric(x);
}

RayMap ray_p(const Trajectory& traj) { return RayMap(traj, RayDirection::kInFromOut); }
RayMap ray_f(const Trajectory& traj) { return RayMap(traj, RayDirection::kOutFromIn); }

}  // namespace mirrorchan
