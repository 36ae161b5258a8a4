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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtcm/dtcm.h"

namespace dtcm_cli {

/// Malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evenly spaced points start..stop inclusive.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 0;

  std::vector<double> points() const;
};

/// An angle given either as a grid or as an explicit list (a single value
/// is a one-element list).
struct AngleSpec {
  std::optional<GridSpec> grid;
  std::vector<double> values;

  std::vector<double> points() const;
};

struct ScenarioConfig {
  dtcm_model model = DTCM_MODEL_DTCM;
  dtcm_bell bell = DTCM_BELL_PSI;
  AngleSpec alpha;
  std::string field_a = "vacuum";
  std::string field_b = "vacuum";
  GridSpec tau;
  std::vector<dtcm_pair> pairs;  // sorted AB, AC, BD, CD
  std::string output;            // empty: stdout
  double zero_tol = 1e-9;
  std::size_t min_zero_points = 3;
};

/// Real number or pi expression: 0.3, 1e-2, pi, -pi/4, 3pi/8, 0.05*pi.
double parse_real(const std::string& text);

/// start:stop:steps, with at least two points and stop > start.
GridSpec parse_grid(const std::string& text);

/// Parses key=value lines; '#' starts a comment. Every key except output,
/// zero_tol and min_zero_points is required. Throws ConfigError naming the
/// line or key at fault.
ScenarioConfig parse_config(const std::string& text);

/// Config text that parse_config maps back to an identical ScenarioConfig.
std::string serialize_config(const ScenarioConfig& config);

const char* pair_label(dtcm_pair pair);

/// Preset names in order fig2 .. fig11.
std::vector<std::string> preset_names();

/// Text of a shipped preset; throws ConfigError for unknown names.
std::string preset_text(const std::string& name);

}  // namespace dtcm_cli
