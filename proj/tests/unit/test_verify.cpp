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


#include <algorithm>

#include "doctest.h"
#include "verify.hpp"

using namespace dtcm;

TEST_CASE("quick verification passes and reports every suite") {
  std::vector<std::string> seen;
  const auto results = run_verification({}, [&](const SuiteResult& r) { seen.push_back(r.name); });
  CHECK(results.size() == seen.size());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.max_deviation <= r.tolerance);
  }
  for (const char* name : {"normalization", "map-equivalence", "oracle-amplitudes", "oracle-states", "symmetry",
                           "concurrence-paths"})
    CHECK(std::find(seen.begin(), seen.end(), name) != seen.end());
}

TEST_CASE("a tampered amplitude fails the normalization suite") {
  VerifyOptions options;
  options.x_coefficient = tampered_x_coeff;
  const auto results = run_verification(options);
  const auto norm = std::find_if(results.begin(), results.end(), [](const auto& r) { return r.name == "normalization"; });
  REQUIRE(norm != results.end());
  CHECK_FALSE(norm->passed);
  CHECK_FALSE(norm->detail.empty());
}
