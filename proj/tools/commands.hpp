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

#include <ostream>
#include <stdexcept>

#include "scenario_config.hpp"

namespace dtcm_cli {

/// Failure inside the simulation library; maps to exit code 3.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Concurrence values laid out [alpha][pair][tau], pairs in config order.
struct SweepData {
  std::vector<double> alphas;
  std::vector<double> taus;
  std::vector<dtcm_pair> pairs;
  std::vector<double> values;

  double at(std::size_t a, std::size_t p, std::size_t t) const {
    return values[(a * pairs.size() + p) * taus.size() + t];
  }
};

SweepData run_sweep(const ScenarioConfig& config, unsigned threads);

/// tau,alpha,pair,concurrence rows, alpha-major, then tau, then pair.
void write_simulate(const ScenarioConfig& config, unsigned threads, std::ostream& out);

/// alpha,pair,death_time,revival_time,birth_time; absent events are empty.
void write_events(const ScenarioConfig& config, unsigned threads, std::ostream& out);

/// One block per pair: a header row holding the tau count then the tau grid,
/// followed by one row per alpha (alpha then concurrences). Blocks are
/// separated by two blank lines.
void write_plotdata(const ScenarioConfig& config, unsigned threads, std::ostream& out);

/// Prints one line per suite; returns true when every suite passed.
bool run_verify(bool full, bool inject_fault, std::ostream& out);

}  // namespace dtcm_cli
