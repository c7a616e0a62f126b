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

#include "mirrorchan/channel.hpp"
#include "mirrorchan/trajectory.hpp"

using namespace mirrorchan;

namespace {

Mat2 random_symplectic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double r = u(rng);
  return Mat2::rotation(3.0 * u(rng)) * Mat2::diag(std::exp(r), std::exp(-r)) * Mat2::rotation(3.0 * u(rng));
}

}  // namespace

TEST_CASE("classification bands") {
  CHECK(classify(1.5, 1e-9) == ChannelClass::kAmplifier);
  CHECK(classify(1.0, 1e-9) == ChannelClass::kClassicalAdditive);
  CHECK(classify(1.0 + 5e-10, 1e-9) == ChannelClass::kClassicalAdditive);
  CHECK(classify(0.5, 1e-9) == ChannelClass::kAttenuator);
  CHECK(classify(0.0, 1e-9) == ChannelClass::kErasure);
  CHECK(classify(1e-4, 1e-3) == ChannelClass::kErasure);
  CHECK_THROWS_AS((void)classify(-0.1, 1e-9), DomainError);
  CHECK(class_name(ChannelClass::kClassicalAdditive) == "classical_additive");
}

TEST_CASE("identity channel is classical additive with no noise") {
  const CanonicalParams p = canonical_params({Mat2::identity(), Mat2{}, 0.0});
  CHECK(p.tau == 1.0);
  CHECK(p.n_bar == 0.0);
  CHECK(p.cls == ChannelClass::kClassicalAdditive);
}

TEST_CASE("unphysical pairs are rejected") {
  const ChannelPair amp{Mat2::diag(2.0, 2.0), Mat2::diag(0.1, 0.1), 0.0};
  CHECK(physicality_margin(amp) < 0.0);
  CHECK_THROWS_AS((void)canonical_params(amp), UnphysicalError);
  const ChannelPair neg{Mat2::identity(), Mat2::diag(-1.0, -1.0), 0.0};
  CHECK(physicality_margin(neg) < 0.0);
}

TEST_CASE("apply_channel") {
  const Mat2 sq = 0.5 * Mat2::diag(std::exp(2.0), std::exp(-2.0));
  const Mat2 out = apply_channel({Mat2::diag(std::sqrt(2.0), std::sqrt(2.0)), Mat2{}, 0.0}, sq);
  CHECK(out.a == doctest::Approx(std::exp(2.0)));
  CHECK(out.d == doctest::Approx(std::exp(-2.0)));
  const Mat2 vac = Mat2::diag(0.5, 0.5);
  CHECK((apply_channel({Mat2::identity(), Mat2{}, 0.0}, vac) - vac).max_abs() == 0.0);
  // Vacuum through the plane-wave channel: (1/2) T T^T + N, with T T^T = diag(coth, tanh) / (2 pi).
  const ChannelPair pw = assemble_planewave(1.0, 1.0, 1e-3, 1e3);
  const Mat2 v = apply_channel(pw, vac);
  const double h = 0.5 * kPi;
  const double c = (std::log(1e6) - 1.0) / (4.0 * kPi);
  CHECK(v.a == doctest::Approx(0.5 / (std::tanh(h) * kTwoPi) + c / std::tanh(h)).epsilon(1e-12));
  CHECK(v.d == doctest::Approx(0.5 * std::tanh(h) / kTwoPi + c * std::tanh(h)).epsilon(1e-12));
  CHECK(std::fabs(v.b) < 1e-14);
  CHECK_THROWS_AS((void)apply_channel(pw, Mat2::diag(0.1, 0.1)), DomainError);
}

TEST_CASE("plane-wave channel: transmissivity law and noise") {
  const ChannelPair t1 = assemble_planewave(1.0 / kTwoPi, 1.0, 1e-3, 1e3);
  CHECK(t1.T.det() == doctest::Approx(1.0).epsilon(1e-13));
  const ChannelPair p = assemble_planewave(1.0, 1.0, 1e-3, 1e3);
  const double c = (std::log(1e6) - 1.0) / (4.0 * kPi);
  CHECK(p.N.a == doctest::Approx(c / std::tanh(0.5 * kPi)).epsilon(1e-14));
  CHECK(p.N.d == doctest::Approx(c * std::tanh(0.5 * kPi)).epsilon(1e-14));
  CHECK(p.N.b == 0.0);
  CHECK(p.N.c == 0.0);
}

TEST_CASE("noise quadrature agrees with the closed form") {
  for (const auto& [w, k, lo, hi] : {std::tuple{1.0, 1.0, 1e-3, 1e3}, std::tuple{0.3, 2.0, 1e-5, 1e2},
                                     std::tuple{4.0, 0.5, 1e-2, 1e6}}) {
    const ChannelPair a = assemble_planewave(w, k, lo, hi, NoiseMethod::kClosedForm);
    const ChannelPair b = assemble_planewave(w, k, lo, hi, NoiseMethod::kQuadrature);
    CHECK((a.N - b.N).max_abs() <= 1e-10 * a.N.max_abs());
  }
}

TEST_CASE("plane-wave cutoff errors") {
  CHECK_THROWS_AS((void)assemble_planewave(1.0, 1.0, 1e3, 1e-3), DomainError);
  CHECK_THROWS_AS((void)assemble_planewave(1.0, 1.0, 1.0, 2.0), UnphysicalError);
}

TEST_CASE("derived n_bar cases and the transmissivity-one point") {
  const double lo = 1e-3, hi = 1e3, lr = std::log(hi / lo);
  // tau = 1 at w = 1 / (2 pi kappa).
  const CanonicalParams p1 = canonical_params(assemble_planewave(1.0 / kTwoPi, 1.0, lo, hi));
  CHECK(p1.cls == ChannelClass::kClassicalAdditive);
  CHECK(p1.n_bar == doctest::Approx(lr / (4.0 * kPi) - 0.5).epsilon(1e-12));
  // Attenuator (tau < 1): (w lnR - 2 pi w kappa) / (4 pi w kappa - 2).
  for (double w : {0.5, 2.0}) {
    const CanonicalParams p = canonical_params(assemble_planewave(w, 1.0, lo, hi));
    CHECK(p.cls == ChannelClass::kAttenuator);
    CHECK(p.n_bar == doctest::Approx((w * lr - kTwoPi * w) / (4.0 * kPi * w - 2.0)).epsilon(1e-12));
  }
  // Amplifier (tau > 1): (w lnR + 2 pi w kappa - 2) / (2 - 4 pi w kappa); needs wide cutoffs.
  const double w = 1.0 / (4.0 * kPi), lr2 = std::log(1e20);
  const CanonicalParams pa = canonical_params(assemble_planewave(w, 1.0, 1e-10, 1e10));
  CHECK(pa.cls == ChannelClass::kAmplifier);
  CHECK(pa.tau == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(pa.n_bar == doctest::Approx((w * lr2 + kTwoPi * w - 2.0) / (2.0 - 4.0 * kPi * w)).epsilon(1e-12));
}

TEST_CASE("amplifier with cutoffs 1e-3 and 1e3 would need negative n_bar") {
  const double w = 1.0 / (4.0 * kPi);
  const Mat2 n = planewave_noise_closed(w, 1.0, 1e-3, 1e3);
  const double nu = std::sqrt(n.det());
  CHECK(nu == doctest::Approx((std::log(1e6) - 4.0 * kPi) / (4.0 * kPi)).epsilon(1e-12));
  CHECK(nu / (2.0 - 1.0) - 0.5 < 0.0);
  CHECK_THROWS_AS((void)assemble_planewave(w, 1.0, 1e-3, 1e3), UnphysicalError);
}

TEST_CASE("tau and n_bar are symplectic invariants") {
  std::mt19937_64 rng(11);
  for (double w : {0.1, 0.7, 3.0}) {
    const ChannelPair ch = assemble_planewave(w, 1.0, 1e-8, 1e8);
    const CanonicalParams p = canonical_params(ch);
    for (int i = 0; i < 4; ++i) {
      const Mat2 sa = random_symplectic(rng), sb = random_symplectic(rng);
      const CanonicalParams q = canonical_params({sb * ch.T * sa, sb * ch.N * sb.transpose(), 0.0});
      CHECK(q.tau == doctest::Approx(p.tau).epsilon(1e-9));
      CHECK(q.n_bar == doctest::Approx(p.n_bar).epsilon(1e-9));
    }
  }
}

TEST_CASE("explicit reduction to canonical form") {
  for (double w : {0.1, 0.9}) {
    const ChannelPair c = canonical_form_planewave(w, 1.0, 1e-6, 1e6);
    const double s = std::sqrt(1.0 / (kTwoPi * w));
    CHECK(std::fabs(c.T.a - s) < 1e-12 * s);
    CHECK(std::fabs(c.T.d - s) < 1e-12 * s);
    CHECK(std::fabs(c.T.b) < 1e-12 * s);
    CHECK(std::fabs(c.N.a - c.N.d) < 1e-12 * c.N.a);
    CHECK(std::fabs(c.N.b) < 1e-12 * c.N.a);
  }
}

TEST_CASE("CW packet channel") {
  const PacketChannel p00 = assemble_packet({0, 0, 0.1}, 1.0);
  CHECK(p00.channel.T.det() == doctest::Approx(0.421184178686045).epsilon(1e-9));
  CHECK(p00.norm == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(p00.window_regularized);
  for (const auto& [j, tau] : {std::pair{1, 0.106909432648114}, std::pair{2, 0.0637981021084643}}) {
    const PacketChannel p = assemble_packet({j, 0, 0.1}, 1.0);
    CHECK(p.channel.T.det() == doctest::Approx(tau).epsilon(1e-9));
    CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(physicality_margin(p.channel) > 0.0);
    CHECK(std::fabs(p.channel.N.b - p.channel.N.c) < 1e-12);
  }
}

TEST_CASE("packet sigma is the bin average of coth") {
  // (1/eps) \int_{j eps}^{(j+1) eps} coth(pi w / kappa) dw, kappa = 1, eps = 0.1.
  CHECK(assemble_packet({1, 0, 0.1}, 1.0).sigma == doctest::Approx(2.36091780778094).epsilon(1e-6));
  CHECK(assemble_packet({2, 0, 0.1}, 1.0).sigma == doctest::Approx(1.54190908460927).epsilon(1e-6));
  const double s0 = assemble_packet({1, 0, 0.1}, 1.0).sigma;
  for (int n : {-7, 1, 30}) CHECK(assemble_packet({1, n, 0.1}, 1.0).sigma == doctest::Approx(s0).epsilon(1e-7));
  // Halving the bin width splits the average.
  const double a = assemble_packet({2, 0, 0.05}, 1.0).sigma;
  const double b = assemble_packet({3, 0, 0.05}, 1.0).sigma;
  CHECK(0.5 * (a + b) == doctest::Approx(s0).epsilon(1e-6));
}

TEST_CASE("normalization over a packet grid") {
  for (int j : {0, 1, 2})
    for (int n : {-5, 0, 5}) {
      const PacketChannel p = assemble_packet({j, n, 0.1}, 1.0);
      CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("static mirror packet channel is the identity up to density scaling") {
  const PacketChannel p = assemble_packet_numeric(Trajectory::static_mirror(0.0), {1, 2, 1.0});
  CHECK(p.channel.T.det() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(p.channel.N.max_abs() < 1e-6);
  CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("numeric packet channel agrees with the analytic one for CW") {
  const PacketChannel a = assemble_packet({1, 0, 0.1}, 1.0);
  NumericNoiseOptions nopt;
  nopt.with_noise = false;
  const PacketChannel b = assemble_packet_numeric(Trajectory::carlitz_willey(1.0), {1, 0, 0.1}, {}, nopt);
  CHECK(b.channel.T.det() == doctest::Approx(a.channel.T.det()).epsilon(1e-6));
  // Frequencies of a horizon-forming mirror spread over unbounded ratios.
  CHECK_THROWS_AS((void)assemble_packet_numeric(Trajectory::carlitz_willey(1.0), {1, 0, 0.1}), DomainError);
}

TEST_CASE("numeric packet channel of a fast Darcx mirror is unitary") {
  const PacketChannel p = assemble_packet_numeric(Trajectory::darcx(0.5, 1.0), {0, 0, 0.1});
  CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::isfinite(p.channel.N.a));
}
