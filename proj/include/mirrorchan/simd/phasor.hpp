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

#include <span>
#include <string_view>

#include "mirrorchan/types.hpp"

namespace mirrorchan::simd {

enum class Isa { kScalar, kAvx2 };

// out[m] += sum_k coef[k] * exp(i * freq[k] * (x0 + m * dx)) for m in [0, out.size()).
// Phases advance by a rotating phasor per step and are re-seeded from exact sincos
// every kReseedInterval steps.
void phasor_sum(std::span<const double> freq, std::span<const Complex> coef, double x0, double dx,
                std::span<Complex> out);

inline constexpr int kReseedInterval = 256;

void phasor_sum_scalar(std::span<const double> freq, std::span<const Complex> coef, double x0,
                       double dx, std::span<Complex> out);
#if defined(MIRRORCHAN_HAVE_AVX2)
void phasor_sum_avx2(std::span<const double> freq, std::span<const Complex> coef, double x0,
                     double dx, std::span<Complex> out);
#endif

// Variant chosen for phasor_sum. MIRRORCHAN_SIMD=scalar in the environment forces kScalar.
[[nodiscard]] Isa active_isa();
[[nodiscard]] bool isa_available(Isa isa);
void phasor_sum_with(Isa isa, std::span<const double> freq, std::span<const Complex> coef,
                     double x0, double dx, std::span<Complex> out);
[[nodiscard]] std::string_view isa_name(Isa isa);

}  // namespace mirrorchan::simd
