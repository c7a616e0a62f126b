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

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mirrorchan/simd/phasor.hpp"

namespace mirrorchan::simd {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void phasor_sum_avx2(std::span<const double> freq, std::span<const Complex> coef, double x0,
                     double dx, std::span<Complex> out) {
  if (freq.size() != coef.size()) throw DomainError("phasor_sum: size mismatch");
  const std::size_t nk = freq.size();
  const std::size_t np = (nk + 3) & ~std::size_t{3};
  const std::size_t nm = out.size();
  std::vector<double> zr(np, 0.0), zi(np, 0.0), rr(np, 1.0), ri(np, 0.0);
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
      __m256d sr = _mm256_setzero_pd();
      __m256d si = _mm256_setzero_pd();
      for (std::size_t k = 0; k < np; k += 4) {
        const __m256d a = _mm256_loadu_pd(&zr[k]);
        const __m256d b = _mm256_loadu_pd(&zi[k]);
        const __m256d c = _mm256_loadu_pd(&rr[k]);
        const __m256d d = _mm256_loadu_pd(&ri[k]);
        sr = _mm256_add_pd(sr, a);
        si = _mm256_add_pd(si, b);
        _mm256_storeu_pd(&zr[k], _mm256_fmsub_pd(a, c, _mm256_mul_pd(b, d)));
        _mm256_storeu_pd(&zi[k], _mm256_fmadd_pd(a, d, _mm256_mul_pd(b, c)));
      }
      out[m] += Complex(hsum(sr), hsum(si));
    }
  }
}

}  // namespace mirrorchan::simd
