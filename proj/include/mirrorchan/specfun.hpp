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

#include "mirrorchan/types.hpp"

namespace mirrorchan {

// Principal branch W0 of the Lambert function for x >= -1/e.
[[nodiscard]] double lambert_w0(double x);

// W0(exp(X)) without forming exp(X); valid for any finite X.
[[nodiscard]] double lambert_w0_exp(double X);

// log Gamma(z) for Re z >= 0, z != 0, on the branch continuous from the real axis.
[[nodiscard]] Complex log_gamma(Complex z);

// log Gamma(i y), y != 0. Im part is the continuous phase of Gamma(i y).
[[nodiscard]] Complex log_gamma_imag(double y);

// Gamma(i y), y != 0. Satisfies Gamma(-i y) = conj(Gamma(i y)) exactly.
[[nodiscard]] Complex gamma_imag(double y);

// log |Gamma(i y)| from |Gamma(i y)|^2 = pi / (y sinh(pi y)); independent of log_gamma.
[[nodiscard]] double log_abs_gamma_imag_closed(double y);

// theta = (omega/kappa) ln(omega'/kappa) - arg Gamma(i omega/kappa).
[[nodiscard]] double theta_phase(double omega, double omega_prime, double kappa);

}  // namespace mirrorchan
