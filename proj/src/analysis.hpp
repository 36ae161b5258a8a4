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

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "fields.hpp"
#include "state_algebra.hpp"

namespace dtcm {

enum class AtomPair { AB, AC, BD, CD };

std::array<Qubit, 2> pair_qubits(AtomPair pair);
std::string pair_name(AtomPair pair);
std::optional<AtomPair> parse_pair(const std::string& name);

/// One physical preparation: model, Bell type shared by both pairs, and the
/// initial field of each cavity. The pair angle is supplied per evaluation.
struct Scenario {
  Model model = Model::Dtcm;
  BellType bell = BellType::Psi;
  FieldSpec field_a = FieldSpec::vacuum();
  FieldSpec field_b = FieldSpec::vacuum();
};

/// Reduced atomic state of the scenario with both pairs prepared at `alpha`.
DensityMatrix scenario_state(const Scenario& scenario, double alpha, double tau);

/// Concurrence of `pair` in scenario_state. DJCM only carries the AB pair.
double pair_concurrence(const Scenario& scenario, AtomPair pair, double alpha, double tau);

struct ConcurrenceCurve {
  AtomPair pair = AtomPair::AB;
  double alpha = 0.0;
  std::vector<double> tau_grid;
  std::vector<double> values;
};

struct SweepOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
  /// Called once per (alpha, tau) cell with the full reduced atomic state.
  /// May run concurrently from worker threads.
  std::function<void(std::size_t alpha_index, std::size_t tau_index, const DensityMatrix& state)> observer;
};

/// One curve per (alpha, pair), alpha-major: result[a * pairs.size() + p].
/// Output is independent of thread count and scheduling.
std::vector<ConcurrenceCurve> sweep_concurrence(const Scenario& scenario, std::span<const AtomPair> pairs,
                                                std::span<const double> alphas, std::span<const double> taus,
                                                const SweepOptions& options = {});

std::vector<ConcurrenceCurve> sweep_concurrence(const Scenario& scenario, AtomPair pair,
                                                std::span<const double> alphas, std::span<const double> taus,
                                                const SweepOptions& options = {});

enum class Verdict { Strong, Weak };

/// Probability that the number of excited atoms reaches the number of
/// cavities (p_geq) or stays below it (p_less), and the regime they imply.
struct RegimeReport {
  double p_geq = 0.0;
  double p_less = 0.0;
  int n_cavities = 2;
  Verdict verdict = Verdict::Weak;
  bool predicted_esd = false;
};

/// Non-empty cavities short-circuit to the strong regime.
RegimeReport classify_regime(BellType bell, double alpha, Model model, const FieldSpec& field_a,
                             const FieldSpec& field_b);

struct EsdEvents {
  std::optional<double> death_time;
  std::optional<double> revival_time;
  std::optional<double> birth_time;
  double zero_interval_length = 0.0;
  /// A zero run shorter than min_zero_points between positive samples.
  bool touch_zero = false;

  bool has_esd() const { return death_time.has_value(); }
};

inline constexpr double kDefaultZeroTol = 1e-9;
inline constexpr std::size_t kDefaultMinZeroPoints = 3;

/// First run of at least min_zero_points samples below zero_tol that follows
/// a positive sample. revival_time is the first positive sample after the
/// run; it stays empty when the run reaches the end of the grid. Throws
/// ArgumentError for curves shorter than min_zero_points.
EsdEvents detect_esd(const ConcurrenceCurve& curve, double zero_tol = kDefaultZeroTol,
                     std::size_t min_zero_points = kDefaultMinZeroPoints);

/// Onset of entanglement in a curve that starts separable: birth_time is the
/// last sample below zero_tol before the first sample at or above it. A
/// curve that is already entangled at its first sample has no birth.
EsdEvents detect_esb(const ConcurrenceCurve& curve, double zero_tol = kDefaultZeroTol);

std::vector<double> linspace(double start, double stop, std::size_t points);

}  // namespace dtcm
