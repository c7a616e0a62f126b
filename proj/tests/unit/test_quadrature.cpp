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
#include <vector>

#include "mirrorchan/quadrature.hpp"

using namespace mirrorchan;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int n : {1, 4, 16, 64}) {
    const GaussRule& g = gauss_legendre(n);
    REQUIRE(g.x.size() == static_cast<std::size_t>(n));
    for (int p = 0; p < 2 * n; p += std::max(1, n / 4)) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.w[static_cast<std::size_t>(i)] * std::pow(g.x[static_cast<std::size_t>(i)], p);
      const double want = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(s == doctest::Approx(want).scale(1.0).epsilon(1e-14));
    }
  }
  CHECK_THROWS((void)gauss_legendre(0));
  CHECK_THROWS((void)gauss_legendre(65));
}

TEST_CASE("graded panels cover the interval and refine at features") {
  const std::vector<double> feats{0.0};
  const auto panels = graded_panels(-10.0, 10.0, feats, 1e-3, [](double) { return 1.0; });
  REQUIRE(!panels.empty());
  CHECK(panels.front().a == -10.0);
  CHECK(panels.back().b == 10.0);
  double smallest = 1e9;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    CHECK(panels[i].b > panels[i].a);
    CHECK(panels[i].b - panels[i].a <= 1.0 + 1e-12);
    if (i > 0) CHECK(panels[i].a == panels[i - 1].b);
    smallest = std::min(smallest, panels[i].b - panels[i].a);
  }
  CHECK(smallest <= 2e-3);
}

TEST_CASE("graded panels reject an exhausted budget") {
  const std::vector<double> feats;
  CHECK_THROWS_AS((void)graded_panels(0.0, 1e6, feats, 1e-6, [](double) { return 1e-3; }, 1000),
                  ConvergenceError);
}

TEST_CASE("richardson removes a linear error term") {
  std::vector<Complex> s;
  for (int k = 0; k < 4; ++k) {
    const double h = std::ldexp(0.1, -k);
    s.emplace_back(3.0 + 2.0 * h + 0.5 * h * h, -1.0 + h);
  }
  const Extrapolated e = richardson(s, 2.0);
  CHECK(e.value.real() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(e.value.imag() == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(e.error < 1e-12);
}
