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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mirrorchan {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative or quadrature procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Channel data violating complete positivity.
class UnphysicalError : public std::runtime_error {
 public:
  UnphysicalError(const std::string& what, double margin)
      : std::runtime_error(what), margin_(margin) {}
  [[nodiscard]] double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

// Row-major real 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  [[nodiscard]] static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  [[nodiscard]] static constexpr Mat2 diag(double x, double y) { return {x, 0.0, 0.0, y}; }
  [[nodiscard]] static Mat2 rotation(double theta) {
    const double cs = std::cos(theta), sn = std::sin(theta);
    return {cs, -sn, sn, cs};
  }

  [[nodiscard]] constexpr double det() const { return a * d - b * c; }
  [[nodiscard]] constexpr double trace() const { return a + d; }
  [[nodiscard]] constexpr Mat2 transpose() const { return {a, c, b, d}; }
  [[nodiscard]] double max_abs() const {
    return std::fmax(std::fmax(std::fabs(a), std::fabs(b)), std::fmax(std::fabs(c), std::fabs(d)));
  }
  [[nodiscard]] bool is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
  }
};

[[nodiscard]] constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}
[[nodiscard]] constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
[[nodiscard]] constexpr Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
[[nodiscard]] constexpr Mat2 operator*(double s, const Mat2& x) {
  return {s * x.a, s * x.b, s * x.c, s * x.d};
}

}  // namespace mirrorchan
