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

#include <algorithm>
#include <cmath>
#include <vector>

#include "mirrorchan/simd/phasor.hpp"

namespace mirrorchan::simd {

void phasor_sum_scalar(std::span<const double> freq, std::span<const Complex> coef, double x0,
                       double dx, std::span<Complex> out) {
  if (freq.size() != coef.size()) throw DomainError("phasor_sum: size mismatch");
  const std::size_t nk = freq.size();
  const std::size_t nm = out.size();
  std::vector<double> zr(nk), zi(nk), rr(nk), ri(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    rr[k] = std::cos(freq[k] * dx);
    ri[k] = std::sin(freq[k] * dx);
  }
  for (std::size_t m0 = 0; m0 < nm; m0 += kReseedInterval) {
    const double x = x0 + static_cast<double>(m0) * dx;
    for (std::size_t k = 0; k < nk; ++k) {
      const Complex z = coef[k] * std::polar(1.0, freq[k] * x);
      zr[k] = z.real();
      zi[k] = z.imag();
    }
    const std::size_t m1 = std::min(nm, m0 + kReseedInterval);
    for (std::size_t m = m0; m < m1; ++m) {
      double sr = 0.0, si = 0.0;
      for (std::size_t k = 0; k < nk; ++k) {
        sr += zr[k];
        si += zi[k];
        const double tr = zr[k] * rr[k] - zi[k] * ri[k];
        zi[k] = zr[k] * ri[k] + zi[k] * rr[k];
        zr[k] = tr;
      }
      out[m] += Complex(sr, si);
    }
  }
}

}  // namespace mirrorchan::simd
