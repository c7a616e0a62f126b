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

#include "mirrorchan/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mirrorchan/quadrature.hpp"
#include "mirrorchan/specfun.hpp"

namespace mirrorchan {

namespace {

// S(a, b) S(a, b)^T integrated: sigma I + 2 [[-Re X, Im X], [Im X, Re X]].
Mat2 sst_from_integrals(double sigma, Complex x) {
  return {sigma - 2.0 * x.real(), 2.0 * x.imag(), 2.0 * x.imag(), sigma + 2.0 * x.real()};
}

Mat2 noise_from(double sigma, Complex x, const Mat2& T) {
  return 0.5 * sst_from_integrals(sigma, x) - 0.5 * (T * T.transpose());
}

struct WindowSums {
  double sigma = 0.0;
  double norm = 0.0;
  Complex x;
};

double trapezoid_norm(std::span<const Complex> f, std::size_t lo, std::size_t hi, double h) {
  double s = 0.5 * (std::norm(f[lo]) + std::norm(f[hi]));
  for (std::size_t m = lo + 1; m < hi; ++m) s += std::norm(f[m]);
  return h * s;
}

Complex trapezoid_product(std::span<const Complex> a, std::span<const Complex> b, std::size_t lo,
                          std::size_t hi, double h) {
  Complex s = 0.5 * (a[lo] * b[lo] + a[hi] * b[hi]);
  for (std::size_t m = lo + 1; m < hi; ++m) s += a[m] * b[m];
  return h * s;
}

WindowSums trapezoid(std::span<const Complex> a, std::span<const Complex> b, std::size_t lo,
                     std::size_t hi, double h) {
  const double aa = trapezoid_norm(a, lo, hi, h), bb = trapezoid_norm(b, lo, hi, h);
  return {aa + bb, aa - bb, trapezoid_product(a, b, lo, hi, h)};
}

// I(P), I(2P), I(4P) with I(P) = I_inf - c1/P - c2/P^2.
template <class V>
std::pair<V, double> pad_extrapolate(const V& i1, const V& i2, const V& i4) {
  const V best = (8.0 * i4 - 6.0 * i2 + i1) / 3.0;
  const V lower = 2.0 * i4 - i2;
  return {best, std::abs(best - lower)};
}

}  // namespace

std::string_view class_name(ChannelClass c) {
  switch (c) {
    case ChannelClass::kAmplifier:
      return "amplifier";
    case ChannelClass::kClassicalAdditive:
      return "classical_additive";
    case ChannelClass::kAttenuator:
      return "attenuator";
    case ChannelClass::kErasure:
      return "erasure";
    case ChannelClass::kPhaseConjugating:
      return "phase_conjugating";
  }
  return "unknown";
}

ChannelClass classify(double tau, double tol) {
  if (!std::isfinite(tau) || tau < -tol) throw DomainError("classify: tau must be >= 0");
  if (std::fabs(tau - 1.0) <= tol) return ChannelClass::kClassicalAdditive;
  if (tau <= tol) return ChannelClass::kErasure;
  return tau > 1.0 ? ChannelClass::kAmplifier : ChannelClass::kAttenuator;
}

Mat2 apply_channel(const ChannelPair& ch, const Mat2& v_in) {
  if (!v_in.is_finite() || std::fabs(v_in.b - v_in.c) > 1e-12 * std::max(1.0, v_in.max_abs()))
    throw DomainError("apply_channel: covariance matrix must be finite and symmetric");
  if (v_in.det() < 0.25 * (1.0 - 1e-12) || v_in.a <= 0.0)
    throw DomainError("apply_channel: covariance matrix violates det V >= 1/4");
  Mat2 out = ch.T * v_in * ch.T.transpose() + ch.N;
  const double off = 0.5 * (out.b + out.c);
  out.b = off;
  out.c = off;
  return out;
}

double physicality_margin(const ChannelPair& ch) {
  const double dn = ch.N.det();
  // Signed: negative when N is indefinite or negative definite.
  const double nu = dn >= 0.0 && ch.N.trace() >= 0.0 ? std::sqrt(dn) : -std::sqrt(std::fabs(dn));
  return nu - 0.5 * std::fabs(1.0 - ch.T.det());
}

CanonicalParams canonical_params(const ChannelPair& ch, const ClassifyOptions& opt) {
  if (!ch.T.is_finite() || !ch.N.is_finite())
    throw DomainError("canonical_params: non-finite channel matrices");
  CanonicalParams p;
  p.tau = ch.T.det();
  const double dn = ch.N.det();
  p.margin = physicality_margin(ch);
  const double nu_abs = std::sqrt(std::fabs(dn));
  if (p.margin < -opt.physicality_tol * std::max(1.0, nu_abs))
    throw UnphysicalError("canonical_params: sqrt(det N) < |1 - tau| / 2", p.margin);
  p.nu = dn > 0.0 ? nu_abs : 0.0;
  const double t = p.tau;
  p.cls = t < -opt.tau_tol ? ChannelClass::kPhaseConjugating : classify(t, opt.tau_tol);
  switch (p.cls) {
    case ChannelClass::kClassicalAdditive:
      p.n_bar = p.nu;
      break;
    case ChannelClass::kErasure:
      p.n_bar = p.nu - 0.5;
      break;
    case ChannelClass::kAmplifier:
      p.n_bar = p.nu / (t - 1.0) - 0.5;
      break;
    case ChannelClass::kAttenuator:
    case ChannelClass::kPhaseConjugating:
      p.n_bar = p.nu / (1.0 - t) - 0.5;
      break;
  }
  return p;
}

Mat2 planewave_noise_closed(double omega, double kappa, double cutoff_low, double cutoff_high) {
  if (!(cutoff_low > 0.0) || !(cutoff_high > cutoff_low) || !std::isfinite(cutoff_high))
    throw DomainError("planewave noise: require 0 < cutoff_low < cutoff_high < inf");
  if (!(omega > 0.0) || !(kappa > 0.0)) throw DomainError("planewave noise: omega, kappa must be positive");
  const double h = 0.5 * kPi * omega / kappa;
  const double s = (std::log(cutoff_high / cutoff_low) - 1.0 / omega) / (4.0 * kPi * kappa);
  return Mat2::diag(s / std::tanh(h), s * std::tanh(h));
}

ChannelPair assemble_planewave(double omega, double kappa, double cutoff_low, double cutoff_high,
                               NoiseMethod method) {
  ChannelPair ch;
  ch.N = planewave_noise_closed(omega, kappa, cutoff_low, cutoff_high);
  ch.T = s_block_planewave(omega, omega, kappa);
  if (method == NoiseMethod::kQuadrature) {
    // Integrand in L = ln w' is w' S S^T.
    const double l0 = std::log(cutoff_low), l1 = std::log(cutoff_high);
    const int panels = std::max(1, static_cast<int>(std::ceil((l1 - l0) / 4.0)));
    const GaussRule& rule = gauss_legendre(16);
    Mat2 acc;
    for (int p = 0; p < panels; ++p) {
      const double a = l0 + (l1 - l0) * p / panels, b = l0 + (l1 - l0) * (p + 1) / panels;
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double wp = std::exp(mid + half * rule.x[i]);
        const Mat2 s = s_block_planewave(omega, wp, kappa);
        acc = acc + (half * rule.w[i] * wp) * (s * s.transpose());
      }
    }
    const Mat2 nq = 0.5 * acc - 0.5 * (ch.T * ch.T.transpose());
    ch.quad_error = (nq - ch.N).max_abs();
    ch.N = nq;
  }
  const double lr = std::log(cutoff_high / cutoff_low);
  const double need = std::max(2.0 / omega - kTwoPi * kappa, kTwoPi * kappa);
  if (lr < need * (1.0 - 1e-12))
    throw UnphysicalError("assemble_planewave: cutoffs too narrow for a physical channel", lr - need);
  return ch;
}

ChannelPair canonical_form_planewave(double omega, double kappa, double cutoff_low,
                                     double cutoff_high) {
  const ChannelPair ch = assemble_planewave(omega, kappa, cutoff_low, cutoff_high);
  const double h = 0.5 * kPi * omega / kappa;
  const Mat2 sb = Mat2::diag(std::sqrt(std::tanh(h)), 1.0 / std::sqrt(std::tanh(h)));
  const Mat2 sa = Mat2::rotation(theta_phase(omega, omega, kappa)).transpose();
  ChannelPair c;
  c.T = sb * ch.T * sa;
  c.N = sb * ch.N * sb.transpose();
  return c;
}

PacketChannel assemble_packet(const PacketIndex& idx, double kappa, const PacketNoiseOptions& opt) {
  validate(idx);
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("assemble_packet: kappa must be positive");
  if (!(opt.pad_bins >= 1.0) || !(opt.samples_per_bin >= 2.0))
    throw DomainError("assemble_packet: pad_bins >= 1 and samples_per_bin >= 2 required");
  const double kt = kappa / idx.epsilon;
  const double bin = kTwoPi * kt;
  const auto spb = static_cast<std::size_t>(std::ceil(opt.samples_per_bin));
  const auto pad = static_cast<std::size_t>(std::ceil(opt.pad_bins));
  const auto nb = static_cast<std::size_t>(std::abs(idx.n));
  const double dl = bin / static_cast<double>(spb);
  const std::size_t m3 = (nb + 4 * pad) * spb;
  const double lmax = static_cast<double>(m3) * dl;

  const CwPacketSampler sampler(idx, kappa, CwPacketSampler::turns(idx, kappa, lmax), opt.convention);
  std::vector<Complex> a(2 * m3 + 1), b(2 * m3 + 1);
  sampler.sample(-lmax, dl, a, b);

  // |a|^2 and |b|^2 are windowed around their own lobes, a b symmetrically around 0.
  const std::size_t centre = m3;
  const std::size_t lobe = nb * spb;
  const std::size_t ia = idx.n >= 0 ? centre + lobe : centre - lobe;
  const bool mirrored = opt.convention == Convention::kSymplecticBlock;
  const std::size_t ib = (idx.n >= 0) == mirrored ? centre - lobe : centre + lobe;
  WindowSums w[3];
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t half = (std::size_t{1} << k) * pad * spb;
    const double aa = trapezoid_norm(a, ia - half, ia + half, dl);
    const double bb = trapezoid_norm(b, ib - half, ib + half, dl);
    w[k].sigma = aa + bb;
    w[k].norm = aa - bb;
    w[k].x = trapezoid_product(a, b, centre - lobe - half, centre + lobe + half, dl);
  }

  PacketChannel pc;
  const auto [norm, norm_err] = pad_extrapolate(w[0].norm, w[1].norm, w[2].norm);
  pc.norm = norm;
  pc.norm_error = norm_err;
  double err = norm_err;
  if (idx.j == 0) {
    pc.window_regularized = true;
    pc.sigma = w[0].sigma;
    pc.anomalous = w[0].x;
  } else {
    const auto [sg, sg_err] = pad_extrapolate(w[0].sigma, w[1].sigma, w[2].sigma);
    const auto [xx, xx_err] = pad_extrapolate(w[0].x, w[1].x, w[2].x);
    pc.sigma = sg;
    pc.anomalous = xx;
    err = std::max({err, sg_err, xx_err});
  }

  const double wc = central_frequency(idx);
  const PacketHat h = packet_hat(idx, std::log(wc / kappa), kappa, opt.convention);
  const double s = 1.0 / std::sqrt(wc);
  pc.channel.T = s_block(s * h.alpha, s * h.beta);
  pc.channel.N = noise_from(pc.sigma, pc.anomalous, pc.channel.T);
  const double terr = s * h.quad_error * 2.0 * pc.channel.T.max_abs();
  pc.channel.quad_error = std::max(err, terr);
  return pc;
}

PacketChannel assemble_packet_numeric(const Trajectory& traj, const PacketIndex& idx,
                                      const PacketNumericOptions& popt,
                                      const NumericNoiseOptions& nopt) {
  validate(idx);
  const double eps = idx.epsilon;
  const Trajectory tr = traj.rescaled(eps);
  const double xc = idx.j + 0.5;
  const double beta = traj.max_speed();
  if (nopt.with_noise && !(beta < 1.0))
    throw DomainError("assemble_packet_numeric: the noise integral needs a mirror with bounded speed");
  // Reflection Doppler-shifts the bin by at most a factor d either way.
  const double d = (1.0 + beta) / (1.0 - beta);
  const double lo = std::max(0.0, idx.j / d - nopt.window_bins);
  const double hi = (idx.j + 1.0) * d + nopt.window_bins;
  const double xmax = nopt.with_noise ? hi : xc;
  const bool sym = popt.convention == Convention::kSymplecticBlock;
  PacketIndex bidx = idx;
  if (sym) bidx.n = -idx.n;
  const NumericPacketTable ta(tr, idx, xmax, popt);
  const NumericPacketTable tb(tr, bidx, xmax, popt);
  const int levels = ta.levels();
  const auto nl = static_cast<std::size_t>(levels);

  auto finish = [&](Complex sa, Complex sb, double x) {
    const double pre = std::sqrt(x) / kTwoPi;
    return std::pair<Complex, Complex>{pre * sa, sym ? std::conj(pre * sb) : pre * sb};
  };

  std::vector<Complex> ca(nl), cb(nl);
  for (int k = 0; k < levels; ++k) {
    Complex sa[1] = {}, sb[1] = {};
    ta.damped_sums(k, +1, xc, 0.0, sa);
    tb.damped_sums(k, -1, xc, 0.0, sb);
    const auto [al, be] = finish(sa[0], sb[0], xc);
    ca[static_cast<std::size_t>(k)] = al;
    cb[static_cast<std::size_t>(k)] = be;
  }
  const Extrapolated ea = richardson(ca), eb = richardson(cb);
  const double s = 1.0 / std::sqrt(eps);
  PacketChannel pc;
  pc.channel.T = s_block(s * ea.value, s * eb.value);
  double err = s * std::max(ea.error, eb.error) * 2.0 * pc.channel.T.max_abs();

  if (nopt.with_noise) {
    std::vector<Complex> sig(nl), xs(nl), nrm(nl);
    for (int k = 0; k < levels; ++k) {
      const double want = ta.eta(k) / nopt.samples_per_eta;
      const auto m = static_cast<std::size_t>(std::ceil((hi - lo) / want)) + 1;
      const double dx = (hi - lo) / static_cast<double>(m - 1);
      std::vector<Complex> sa(m), sb(m), a(m), b(m);
      ta.damped_sums(k, +1, lo, dx, sa);
      tb.damped_sums(k, -1, lo, dx, sb);
      for (std::size_t i = 0; i < m; ++i) {
        const auto [al, be] = finish(sa[i], sb[i], lo + static_cast<double>(i) * dx);
        a[i] = al;
        b[i] = be;
      }
      const WindowSums w = trapezoid(a, b, 0, m - 1, dx);
      sig[static_cast<std::size_t>(k)] = w.sigma;
      xs[static_cast<std::size_t>(k)] = w.x;
      nrm[static_cast<std::size_t>(k)] = w.norm;
    }
    const Extrapolated es = richardson(sig), ex = richardson(xs), en = richardson(nrm);
    pc.sigma = es.value.real();
    pc.anomalous = ex.value;
    pc.norm = en.value.real();
    pc.norm_error = en.error;
    err = std::max({err, es.error, ex.error, en.error, std::fabs(pc.norm - 1.0)});
    pc.channel.N = noise_from(pc.sigma, pc.anomalous, pc.channel.T);
  } else {
    pc.channel.N = Mat2{std::nan(""), std::nan(""), std::nan(""), std::nan("")};
  }
  pc.channel.quad_error = err;
  return pc;
}

}  // namespace mirrorchan
