// Copyright 2026 The dtcm Authors
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
#include <string>
#include <vector>

#include "dynamics.hpp"

namespace dtcm {

enum class VerifyLevel { Quick, Full };

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  /// Amplitude source for the suites that check amplitudes directly.
  XCoefficientFn x_coefficient = x_coeff;
};

/// Runs every invariant suite in order; `on_suite` sees each result as it
/// completes.
std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SuiteResult&)>& on_suite = {});

/// x_coeff with the sign of the constant term in X_{01,00} / X_{10,00} flipped.
Complex tampered_x_coeff(const XCoefficientKey& key);

}  // namespace dtcm
