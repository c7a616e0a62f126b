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

#include "mirrorchan/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mirrorchan {

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    r.x[lo] = -x;
    r.x[hi] = x;
    r.w[lo] = w;
    r.w[hi] = w;
  }
  if (n % 2 == 1) r.x[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

struct RuleTable {
  std::array<GaussRule, 65> rules;
  RuleTable() {
    for (int n = 1; n <= 64; ++n) rules[static_cast<std::size_t>(n)] = build_rule(n);
  }
};

void grow(double from, double to, double w0, const std::function<double(double)>& max_width,
          std::vector<Panel>& out, std::size_t max_panels) {
  const double dir = to > from ? 1.0 : -1.0;
  const std::size_t first = out.size();
  double t = from;
  double w = w0;
  while (dir * (to - t) > 0.0) {
    w = std::min(w, max_width(t));
    if (!(w > 0.0)) throw ConvergenceError("graded_panels: non-positive panel width", w);
    double next = t + dir * w;
    if (dir * (next - to) >= 0.0 || std::fabs(to - next) < 1e-3 * w) next = to;
    if (dir > 0.0)
      out.push_back({t, next});
    else
      out.push_back({next, t});
    if (out.size() > max_panels)
      throw ConvergenceError("graded_panels: panel budget exceeded", static_cast<double>(out.size()));
    t = next;
    w *= 2.0;
  }
  if (dir < 0.0) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static const RuleTable table;
  if (n < 1 || n > 64) throw DomainError("gauss_legendre: order must be in [1, 64]");
  return table.rules[static_cast<std::size_t>(n)];
}

std::vector<Panel> graded_panels(double a, double b, std::span<const double> features,
                                 double min_width, const std::function<double(double)>& max_width,
                                 std::size_t max_panels) {
  if (!(b > a)) throw DomainError("graded_panels: empty interval");
  std::vector<double> pts;
  for (double f : features)
    if (f > a && f < b) pts.push_back(f);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Panel> out;
  std::vector<double> knots;
  knots.push_back(a);
  knots.insert(knots.end(), pts.begin(), pts.end());
  knots.push_back(b);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double p = knots[i], q = knots[i + 1];
    const bool fp = i > 0;
    const bool fq = i + 2 < knots.size();
    if (fp && fq) {
      const double mid = 0.5 * (p + q);
      grow(p, mid, min_width, max_width, out, max_panels);
      std::vector<Panel> tmp;
      grow(q, mid, min_width, max_width, tmp, max_panels);
      out.insert(out.end(), tmp.begin(), tmp.end());
    } else if (fp) {
      grow(p, q, min_width, max_width, out, max_panels);
    } else if (fq) {
      std::vector<Panel> tmp;
      grow(q, p, min_width, max_width, tmp, max_panels);
      out.insert(out.end(), tmp.begin(), tmp.end());
    } else {
      grow(p, q, max_width(p), max_width, out, max_panels);
    }
  }
  return out;
}

Extrapolated richardson(std::span<const Complex> samples, double ratio) {
  const std::size_t m = samples.size();
  if (m == 0) throw DomainError("richardson: no samples");
  if (m == 1) return {samples[0], std::abs(samples[0])};
  std::vector<std::vector<Complex>> t(m);
  for (std::size_t i = 0; i < m; ++i) {
    t[i].resize(i + 1);
    t[i][0] = samples[i];
    double rk = 1.0;
    for (std::size_t k = 1; k <= i; ++k) {
      rk *= ratio;
      t[i][k] = t[i][k - 1] + (t[i][k - 1] - t[i - 1][k - 1]) / (rk - 1.0);
    }
  }
  const Complex best = t[m - 1][m - 1];
  double err = std::abs(best - t[m - 1][m - 2]);
  err = std::max(err, std::abs(best - t[m - 2][m - 2]));
  return {best, err};
}

}  // namespace mirrorchan
