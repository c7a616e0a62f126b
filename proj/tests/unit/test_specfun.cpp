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

#include "mirrorchan/specfun.hpp"

using namespace mirrorchan;

namespace {

// Independent W0 by bisection on w e^w = x.
double w_bisect(double x) {
  double lo = -1.0, hi = std::max(1.0, std::log1p(x) + 1.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lambert_w0 matches high-precision values") {
  struct Ref {
    double x, w;
  };
  const Ref refs[] = {{-0.3678, -0.97936071495782847748},
                      {-0.2, -0.25917110181907374506},
                      {0.001, 0.00099900149733853088996},
                      {1.0, 0.567143290409783873},
                      {7.5, 1.5662309537823875394},
                      {1e6, 11.383358086140052622}};
  for (const auto& r : refs) CHECK(lambert_w0(r.x) == doctest::Approx(r.w).epsilon(1e-13));
}

TEST_CASE("lambert_w0 agrees with bisection") {
  for (double x = -0.36; x < 1e4; x = x < 0 ? x + 0.05 : x * 3.0 + 0.01)
    CHECK(lambert_w0(x) == doctest::Approx(w_bisect(x)).epsilon(1e-12));
}

TEST_CASE("lambert_w0 at the branch point and at zero") {
  CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(1e-300) == doctest::Approx(1e-300));
  CHECK_THROWS_AS((void)lambert_w0(-0.5), DomainError);
}

TEST_CASE("lambert_w0_exp covers arguments whose exponential overflows") {
  CHECK(lambert_w0_exp(100.0) == doctest::Approx(95.44148664557583184).epsilon(1e-14));
  CHECK(lambert_w0_exp(1000.0) == doctest::Approx(993.09916947238910439).epsilon(1e-14));
  CHECK(lambert_w0_exp(-50.0) == doctest::Approx(1.928749847963917783e-22).epsilon(1e-13));
  for (double X = -30.0; X <= 30.0; X += 2.5)
    CHECK(lambert_w0_exp(X) == doctest::Approx(lambert_w0(std::exp(X))).epsilon(1e-13));
  CHECK(std::isfinite(lambert_w0_exp(1e300)));
}

TEST_CASE("log_gamma on the imaginary axis matches high-precision values") {
  struct Ref {
    double y, re, im;
  };
  const Ref refs[] = {{0.3, 1.1320265534262975884, -1.7336169989627523067},
                      {2.0, -2.5692259669908746506, -1.4411500104851083078},
                      {17.5, -28.00109762617075228, 31.798354829319047005},
                      {-1.25, -1.1559345116589043203, 1.8249434140143919318}};
  for (const auto& r : refs) {
    const Complex z = log_gamma_imag(r.y);
    CHECK(z.real() == doctest::Approx(r.re).epsilon(1e-13));
    CHECK(z.imag() == doctest::Approx(r.im).epsilon(1e-13));
  }
}

TEST_CASE("log_gamma off the axis") {
  const Complex a = log_gamma({0.5, 3.0});
  CHECK(a.real() == doctest::Approx(-3.7934504504362231734).epsilon(1e-13));
  CHECK(a.imag() == doctest::Approx(0.30981927108643916606).epsilon(1e-13));
  const Complex b = log_gamma({4.0, -7.0});
  CHECK(b.real() == doctest::Approx(-3.1323017150686033256).epsilon(1e-13));
  CHECK(b.imag() == doctest::Approx(-11.28215677892660177).epsilon(1e-13));
  CHECK(log_gamma({1.0, 0.0}).real() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)log_gamma({0.0, 0.0}), DomainError);
}

TEST_CASE("|Gamma(iy)| closed form agrees with Stirling path") {
  for (double y = 1e-3; y < 300.0; y *= 1.9) {
    CHECK(log_gamma_imag(y).real() ==
          doctest::Approx(log_abs_gamma_imag_closed(y)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("Gamma(-iy) is the conjugate of Gamma(iy)") {
  for (double y : {0.01, 0.7, 3.0, 40.0}) {
    const Complex g = gamma_imag(y);
    const Complex h = gamma_imag(-y);
    CHECK(h.real() == g.real());
    CHECK(h.imag() == -g.imag());
  }
}

TEST_CASE("theta_phase definition") {
  const double w = 1.7, wp = 0.4, k = 0.9;
  CHECK(theta_phase(w, wp, k) ==
        doctest::Approx(w / k * std::log(wp / k) - log_gamma_imag(w / k).imag()).epsilon(1e-15));
}
