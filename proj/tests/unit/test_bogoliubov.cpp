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
#include <random>

#include "mirrorchan/bogoliubov.hpp"
#include "mirrorchan/trajectory.hpp"

using namespace mirrorchan;

TEST_CASE("Carlitz-Willey coefficients match high-precision values") {
  struct Ref {
    double w, wp, k, ar, ai, br, bi;
  };
  const Ref refs[] = {
      {1, 1, 1, -0.11863133232416387, -0.3812864000863098, 0.0051265246985788204,
       -0.016476879328417756},
      {0.5, 2, 1.3, -0.092896873424408104, -0.24203376614840679, 0.027748592639350449,
       -0.072296258574137696},
      {3, 0.2, 0.7, 1.0376153830759883, 0.24530662219217224, -1.4747186445244828e-6,
       3.4864387640408259e-7},
  };
  for (const auto& r : refs) {
    const BogoliubovPair p = cw_coefficients(r.w, r.wp, r.k);
    CHECK(p.alpha.real() == doctest::Approx(r.ar).epsilon(1e-12));
    CHECK(p.alpha.imag() == doctest::Approx(r.ai).epsilon(1e-12));
    CHECK(p.beta.real() == doctest::Approx(r.br).epsilon(1e-12));
    CHECK(p.beta.imag() == doctest::Approx(r.bi).epsilon(1e-12));
  }
}

TEST_CASE("scalar-product convention conjugates beta") {
  const BogoliubovPair a = cw_coefficients(0.8, 1.7, 0.6);
  const BogoliubovPair b = cw_coefficients(0.8, 1.7, 0.6, {Convention::kScalarProduct});
  CHECK(a.alpha == b.alpha);
  CHECK(a.beta == std::conj(b.beta));
}

TEST_CASE("thermal spectrum and unit Wronskian ratio") {
  for (double k : {0.2, 1.0, 5.0})
    for (double w : {0.01, 0.4, 3.0, 20.0})
      for (double wp : {1e-3, 0.5, 8.0}) {
        const BogoliubovPair p = cw_coefficients(w, wp, k);
        CHECK(std::norm(p.beta) * kTwoPi * k * wp * std::expm1(kTwoPi * w / k) ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::norm(p.alpha) / std::norm(p.beta) == doctest::Approx(std::exp(kTwoPi * w / k)).epsilon(1e-10));
      }
}

TEST_CASE("wrong log branch breaks the thermal spectrum") {
  const BogoliubovPair p = cw_coefficients(1.0, 1.0, 1.0, {Convention::kSymplecticBlock, LogBranch::kMinusPi});
  CHECK(std::fabs(std::norm(p.beta) * kTwoPi * std::expm1(kTwoPi) - 1.0) > 1.0);
}

TEST_CASE("S block determinant and S S^T") {
  CHECK(s_block_planewave(1.0, 1.0, 1.0).det() == doctest::Approx(0.15915494309189535).epsilon(1e-13));
  for (double w : {0.05, 0.7, 6.0})
    for (double wp : {0.03, 1.0, 11.0})
      for (double k : {0.3, 2.0}) {
        const Mat2 s = s_block_planewave(w, wp, k);
        CHECK(s.det() == doctest::Approx(1.0 / (kTwoPi * k * wp)).epsilon(1e-12));
        const Mat2 sst = s * s.transpose();
        const Mat2 want = s_st_planewave(w, wp, k);
        const double h = 0.5 * kPi * w / k;
        CHECK(want.a == doctest::Approx(1.0 / (std::tanh(h) * kTwoPi * k * wp)).epsilon(1e-13));
        CHECK(want.d == doctest::Approx(std::tanh(h) / (kTwoPi * k * wp)).epsilon(1e-13));
        CHECK(std::fabs(sst.a - want.a) <= 1e-12 * want.a);
        CHECK(std::fabs(sst.d - want.d) <= 1e-12 * want.a);
        CHECK(std::fabs(sst.b) <= 1e-12 * want.a);
        CHECK(std::fabs(sst.c) <= 1e-12 * want.a);
      }
}

TEST_CASE("general S definition equals the closed-form block") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const double w = std::exp(lg(rng)), wp = std::exp(lg(rng)), k = std::exp(0.5 * lg(rng));
    const Mat2 a = s_block(cw_coefficients(w, wp, k));
    const Mat2 b = s_block_planewave(w, wp, k);
    CHECK((a - b).max_abs() <= 1e-12 * b.max_abs());
  }
}

TEST_CASE("damped mirror-time integral reproduces the closed form") {
  const Trajectory cw = Trajectory::carlitz_willey(1.0);
  for (const auto& [w, wp] : {std::pair{0.5, 1.0}, std::pair{2.0, 0.3}, std::pair{1.0, 4.0}}) {
    const NumericBogoliubov nb = numeric_coefficients(cw, w, wp);
    const BogoliubovPair an = cw_coefficients(w, wp, 1.0);
    CHECK(nb.converged);
    CHECK(std::abs(nb.pair.alpha - an.alpha) <= 1e-3 * std::abs(an.alpha));
    CHECK(std::abs(nb.pair.beta - an.beta) <= 1e-3 * std::abs(an.beta) + 1e-3 * std::abs(an.alpha) * 1e-2);
  }
}

TEST_CASE("static mirror creates no particles") {
  const NumericBogoliubov nb = numeric_coefficients(Trajectory::static_mirror(0.0), 1.0, 0.6);
  CHECK(std::abs(nb.pair.beta) < 1e-4);
}

TEST_CASE("invalid frequencies are rejected") {
  CHECK_THROWS_AS((void)cw_coefficients(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS((void)cw_coefficients(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS((void)s_block_planewave(1.0, 1.0, 0.0), DomainError);
}
