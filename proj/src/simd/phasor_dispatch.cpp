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

#include <cstdlib>
#include <cstring>

#include "mirrorchan/simd/phasor.hpp"

namespace mirrorchan::simd {

namespace {

Isa detect() {
  if (const char* env = std::getenv("MIRRORCHAN_SIMD"); env && std::strcmp(env, "scalar") == 0)
    return Isa::kScalar;
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(MIRRORCHAN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void phasor_sum_with(Isa isa, std::span<const double> freq, std::span<const Complex> coef,
                     double x0, double dx, std::span<Complex> out) {
#if defined(MIRRORCHAN_HAVE_AVX2)
  if (isa == Isa::kAvx2) {
    if (!isa_available(Isa::kAvx2)) throw DomainError("phasor_sum: AVX2 not supported on this CPU");
    phasor_sum_avx2(freq, coef, x0, dx, out);
    return;
  }
#endif
  if (isa != Isa::kScalar) throw DomainError("phasor_sum: variant not compiled in");
  phasor_sum_scalar(freq, coef, x0, dx, out);
}

void phasor_sum(std::span<const double> freq, std::span<const Complex> coef, double x0, double dx,
                std::span<Complex> out) {
  phasor_sum_with(active_isa(), freq, coef, x0, dx, out);
}

}  // namespace mirrorchan::simd
