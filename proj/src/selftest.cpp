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

#include "mirrorchan/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <vector>

#include "mirrorchan/bogoliubov.hpp"
#include "mirrorchan/channel.hpp"
#include "mirrorchan/simd/phasor.hpp"
#include "mirrorchan/specfun.hpp"
#include "mirrorchan/trajectory.hpp"
#include "mirrorchan/wavepacket.hpp"

namespace mirrorchan {

namespace {

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Worst |value - 1| or similar over a check; passes when below tol.
SelftestCheck worst(std::string name, double err, double tol) {
  return {std::move(name), err <= tol, fmt("max error %.3g (tol %.1g)", err, tol)};
}

SelftestCheck lambert() {
  double err = 0.0;
  for (double x : {-0.36787944117144, -0.3, -0.1, -1e-6, 1e-8, 0.5, 1.0, 10.0, 1e3, 1e10}) {
    const double w = lambert_w0(x);
    err = std::max(err, std::fabs(w * std::exp(w) - x) / std::max(std::fabs(x), 1e-300));
  }
  for (double X : {-20.0, 0.0, 5.0, 25.0}) {
    err = std::max(err, std::fabs(lambert_w0_exp(X) - lambert_w0(std::exp(X))) /
                            lambert_w0(std::exp(X)));
  }
  for (double X : {50.0, 500.0, 5e5}) {
    const double w = lambert_w0_exp(X);
    err = std::max(err, std::fabs(w + std::log(w) - X) / X);
  }
  return worst("lambert_w: W e^W = x", err, 1e-12);
}

SelftestCheck gamma_modulus() {
  double err = 0.0;
  for (double y = 0.01; y < 60.0; y *= 1.7)
    err = std::max(err, std::fabs(log_gamma_imag(y).real() - log_abs_gamma_imag_closed(y)) /
                            std::max(1.0, std::fabs(log_abs_gamma_imag_closed(y))));
  return worst("log_gamma: |Gamma(iy)|^2 = pi / (y sinh pi y)", err, 1e-12);
}

SelftestCheck gamma_recurrence() {
  double err = 0.0;
  for (const Complex z : {Complex(0.3, 0.7), Complex(2.5, -4.0), Complex(0.01, 12.0), Complex(7.0, 0.2)}) {
    const Complex d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    // Equal modulo 2 pi i.
    const double im = std::remainder(d.imag(), kTwoPi);
    err = std::max(err, std::hypot(d.real(), im));
  }
  return worst("log_gamma: Gamma(z + 1) = z Gamma(z)", err, 1e-12);
}

SelftestCheck thermal(Fault fault) {
  CoefficientOptions opt;
  if (fault == Fault::kGammaBranch) opt.branch = LogBranch::kMinusPi;
  double err = 0.0;
  for (double kappa : {0.3, 1.0, 4.0})
    for (double w : {0.05, 0.3, 1.0, 2.5, 6.0})
      for (double wp : {0.01, 0.2, 1.0, 3.0, 40.0}) {
        const BogoliubovPair p = cw_coefficients(w, wp, kappa, opt);
        const double lhs = std::norm(p.beta) * kTwoPi * kappa * wp * std::expm1(kTwoPi * w / kappa);
        err = std::max(err, std::fabs(lhs - 1.0));
      }
  return worst("thermal spectrum |beta|^2 2 pi kappa w' (e^{2 pi w / kappa} - 1) = 1", err, 1e-10);
}

SelftestCheck det_law() {
  double err = 0.0;
  for (double w = 0.05; w < 25.0; w *= 2.3)
    for (double k = 0.05; k < 25.0; k *= 2.3) {
      const double want = 1.0 / (kTwoPi * w * k);
      err = std::max(err, std::fabs(s_block_planewave(w, w, k).det() - want) / want);
    }
  return worst("plane-wave det T = 1 / (2 pi w kappa)", err, 1e-12);
}

SelftestCheck block_paths() {
  double err = 0.0;
  for (double w : {0.1, 1.0, 5.0})
    for (double wp : {0.07, 1.3, 9.0}) {
      const Mat2 a = s_block(cw_coefficients(w, wp, 1.0));
      const Mat2 b = s_block_planewave(w, wp, 1.0);
      err = std::max(err, (a - b).max_abs() / b.max_abs());
    }
  return worst("S block: coefficient path = closed form", err, 1e-12);
}

SelftestCheck ray_maps() {
  const Trajectory cw = Trajectory::carlitz_willey(1.3);
  double err = 0.0;
  for (double u : {-3.0, 0.0, 2.0, 10.0}) {
    const RayMap p = ray_p(cw);
    err = std::max(err, std::fabs(p(u) - p.evaluate_numeric(u)) / std::max(1e-300, std::fabs(p(u))));
  }
  for (double v : {-50.0, -1.0, -1e-3}) {
    const RayMap f = ray_f(cw);
    err = std::max(err, std::fabs(f(v) - f.evaluate_numeric(v)) / std::max(1.0, std::fabs(f(v))));
  }
  return worst("ray maps: closed form = root-found", err, 1e-10);
}

SelftestCheck numeric_cw() {
  const Trajectory cw = Trajectory::carlitz_willey(1.0);
  double err = 0.0;
  bool conv = true;
  for (const auto& [w, wp] : {std::pair{0.5, 1.0}, std::pair{2.0, 0.7}}) {
    const NumericBogoliubov nb = numeric_coefficients(cw, w, wp);
    const BogoliubovPair an = cw_coefficients(w, wp, 1.0);
    conv = conv && nb.converged;
    err = std::max(err, std::fabs(std::abs(nb.pair.alpha) / std::abs(an.alpha) - 1.0));
    err = std::max(err, std::fabs(std::abs(nb.pair.beta) / std::abs(an.beta) - 1.0));
  }
  SelftestCheck c = worst("CW damped integral = closed form (moduli)", err, 1e-2);
  c.passed = c.passed && conv;
  return c;
}

SelftestCheck packet_norm() {
  double err = 0.0;
  for (const auto& [j, n] : {std::pair{0, 0}, std::pair{1, 3}, std::pair{2, -5}}) {
    const PacketChannel pc = assemble_packet({j, n, 0.1}, 1.0);
    err = std::max(err, std::fabs(pc.norm - 1.0));
  }
  return worst("packet normalization \\int |a|^2 - |b|^2 = 1", err, 1e-3);
}

SelftestCheck simd_equivalence() {
  std::vector<double> f(37);
  std::vector<Complex> c(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    f[k] = 0.37 * static_cast<double>(k) - 4.1;
    c[k] = Complex(std::cos(1.7 * k), std::sin(0.3 * k)) / static_cast<double>(k + 1);
  }
  const std::size_t m = 700;
  const double x0 = -3.2, dx = 0.031;
  std::vector<Complex> ref(m), out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < f.size(); ++k)
      ref[i] += c[k] * std::polar(1.0, f[k] * (x0 + static_cast<double>(i) * dx));
  double err = 0.0;
  for (const simd::Isa isa : {simd::Isa::kScalar, simd::Isa::kAvx2}) {
    if (!simd::isa_available(isa)) continue;
    std::fill(out.begin(), out.end(), Complex{});
    simd::phasor_sum_with(isa, f, c, x0, dx, out);
    for (std::size_t i = 0; i < m; ++i) err = std::max(err, std::abs(out[i] - ref[i]));
  }
  return worst("phasor_sum kernels = direct evaluation", err, 1e-12);
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport run_selftest(Fault fault) {
  const std::vector<std::pair<const char*, std::function<SelftestCheck()>>> suite{
      {"lambert_w", lambert},
      {"gamma_modulus", gamma_modulus},
      {"gamma_recurrence", gamma_recurrence},
      {"thermal", [fault] { return thermal(fault); }},
      {"det_law", det_law},
      {"block_paths", block_paths},
      {"ray_maps", ray_maps},
      {"numeric_cw", numeric_cw},
      {"packet_norm", packet_norm},
      {"simd", simd_equivalence},
  };
  SelftestReport r;
  for (const auto& [name, fn] : suite) {
    try {
      r.checks.push_back(fn());
    } catch (const std::exception& e) {
      r.checks.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  return r;
}

}  // namespace mirrorchan
