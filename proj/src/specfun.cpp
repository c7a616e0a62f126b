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

#include "mirrorchan/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace mirrorchan {

namespace {

constexpr double kE = 2.718281828459045;
constexpr double kELo = 1.4456468917292502e-16;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// w = -1 + p - p^2/3 + 11/72 p^3 - ... with p = sqrt(2 (e x + 1)).
double branch_point_series(double p) {
  constexpr std::array<double, 8> c = {-1.0,
                                       1.0,
                                       -1.0 / 3.0,
                                       11.0 / 72.0,
                                       -43.0 / 540.0,
                                       769.0 / 17280.0,
                                       -221.0 / 8505.0,
                                       680863.0 / 43545600.0};
  double w = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) w = w * p + *it;
  return w;
}

double halley(double x, double w) {
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w)))
      return w;
  }
  throw ConvergenceError("lambert_w0: Halley iteration did not converge", x);
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return 0.0;
  // e*x + 1 carried in extended precision; it vanishes at the branch point.
  const double q = std::fma(kE, x, 1.0) + kELo * x;
  if (q < 0.0) {
    if (q > -4.0 * std::numeric_limits<double>::epsilon()) return -1.0;
    throw DomainError("lambert_w0: argument below -1/e: " + std::to_string(x));
  }
  const double p = std::sqrt(2.0 * q);
  if (p < 1e-3) return branch_point_series(p);
  if (std::fabs(x) < 1e-8) return x * (1.0 - x * (1.0 - 1.5 * x));
  double w0;
  if (p < 0.5) {
    w0 = branch_point_series(p);
  } else if (x < 3.0) {
    const double l = std::log1p(x);
    w0 = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w0 = l1 - l2 + l2 / l1;
  }
  return halley(x, w0);
}

double lambert_w0_exp(double X) {
  if (std::isnan(X)) throw DomainError("lambert_w0_exp: NaN argument");
  if (X < -30.0) {
    const double e = std::exp(X);
    return e * (1.0 - e);
  }
  if (X <= 30.0) return lambert_w0(std::exp(X));
  if (std::isinf(X)) return X;
  // w + ln w = X
  double w = X - std::log(X);
  for (int iter = 0; iter < 64; ++iter) {
    const double f = w + std::log(w) - X;
    const double step = f / (1.0 + 1.0 / w);
    w -= step;
    if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * w) return w;
  }
  throw ConvergenceError("lambert_w0_exp: Newton iteration did not converge", X);
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (z.real() < 0.0) throw DomainError("log_gamma: Re z < 0 not supported");
  if (z == Complex(0.0, 0.0)) throw DomainError("log_gamma: pole at z = 0");
  constexpr double kShift = 15.0;
  Complex shift_sum(0.0, 0.0);
  while (std::abs(z) < kShift) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  constexpr std::array<double, 8> b = {1.0 / 12.0,      -1.0 / 360.0,    1.0 / 1260.0,
                                       -1.0 / 1680.0,   1.0 / 1188.0,    -691.0 / 360360.0,
                                       1.0 / 156.0,     -3617.0 / 122400.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  for (auto it = b.rbegin(); it != b.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series - shift_sum;
}

Complex log_gamma_imag(double y) {
  if (y == 0.0) throw DomainError("log_gamma_imag: pole at y = 0");
  const Complex v = log_gamma(Complex(0.0, std::fabs(y)));
  return y > 0.0 ? v : std::conj(v);
}

Complex gamma_imag(double y) { return std::exp(log_gamma_imag(y)); }

double log_abs_gamma_imag_closed(double y) {
  if (y == 0.0) throw DomainError("log_abs_gamma_imag_closed: pole at y = 0");
  const double a = std::fabs(y);
  const double x = kPi * a;
  // log sinh(x) = x - ln 2 + log1p(-exp(-2x))
  const double log_sinh = x < 1.0 ? std::log(std::sinh(x)) : x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  return 0.5 * (std::log(kPi) - std::log(a) - log_sinh);
}

double theta_phase(double omega, double omega_prime, double kappa) {
  if (!(omega > 0.0) || !(omega_prime > 0.0) || !(kappa > 0.0))
    throw DomainError("theta_phase: omega, omega', kappa must be positive");
  const double y = omega / kappa;
  return y * std::log(omega_prime / kappa) - log_gamma_imag(y).imag();
}

}  // namespace mirrorchan
