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

#include <string>
#include <vector>

namespace mirrorchan {

enum class Fault {
  kNone,
  kGammaBranch,  // wrong branch of ln(-x) in the Carlitz-Willey coefficients
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  [[nodiscard]] bool passed() const;
};

// Oracle suite over the special functions, coefficients, channel laws and SIMD kernels.
[[nodiscard]] SelftestReport run_selftest(Fault fault = Fault::kNone);

}  // namespace mirrorchan
