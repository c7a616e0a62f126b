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

#include <functional>
#include <span>
#include <vector>

#include "mirrorchan/types.hpp"

namespace mirrorchan {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// n in [1, 64]; rules are built once and shared.
[[nodiscard]] const GaussRule& gauss_legendre(int n);

struct Panel {
  double a;
  double b;
};

// Panels covering [a, b]. Widths start at min_width next to each feature point and
// at most double per panel, never exceeding max_width(t) at the panel start.
[[nodiscard]] std::vector<Panel> graded_panels(double a, double b, std::span<const double> features,
                                               double min_width,
                                               const std::function<double(double)>& max_width,
                                               std::size_t max_panels = 4'000'000);

struct Extrapolated {
  Complex value;
  double error;
};

// Richardson extrapolation of samples taken at h, h/ratio, h/ratio^2, ... assuming an
// error expansion in h, h^2, ... . error is the spread of the last two table entries.
[[nodiscard]] Extrapolated richardson(std::span<const Complex> samples, double ratio = 2.0);

}  // namespace mirrorchan
