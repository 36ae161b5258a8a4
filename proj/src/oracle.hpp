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

// Brute-force reference for the analytic pipeline: truncated interaction
// Hamiltonians, numerical exponentials and numerical partial traces. Shares
// no code with the closed-form amplitudes.

#include <span>
#include <vector>

#include "analysis.hpp"
#include "state_algebra.hpp"

namespace dtcm::oracle {

/// Resonant interaction g sum_j (a s_j^+ + a^dagger s_j^-) with g = 1 for one
/// cavity holding n_atoms atoms, photons truncated at n_max. Basis index is
/// atoms * (n_max + 1) + photons with the first atom most significant.
class TruncatedHamiltonian {
 public:
  TruncatedHamiltonian(int n_max, int n_atoms);

  int n_max() const { return n_max_; }
  int n_atoms() const { return n_atoms_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  Eigen::Index index(int atom_bits, int photons) const { return atom_bits * (n_max_ + 1) + photons; }
  int photons_of(Eigen::Index idx) const { return static_cast<int>(idx % (n_max_ + 1)); }
  int atoms_of(Eigen::Index idx) const { return static_cast<int>(idx / (n_max_ + 1)); }
  /// Atomic excitations plus photons, as a diagonal operator.
  Eigen::VectorXd excitation_number() const;

 private:
  int n_max_;
  int n_atoms_;
  Matrix matrix_;
};

/// Throws ArgumentError for n_max < 1 or n_atoms outside {1, 2}.
TruncatedHamiltonian build_tc_hamiltonian(int n_max, int n_atoms);

/// exp(-i H tau) from one cached eigen-decomposition of H.
class Propagator {
 public:
  explicit Propagator(const TruncatedHamiltonian& hamiltonian);

  Matrix unitary(double tau) const;
  const TruncatedHamiltonian& hamiltonian() const { return hamiltonian_; }

 private:
  TruncatedHamiltonian hamiltonian_;
  Matrix eigenvectors_;
  Eigen::VectorXd eigenvalues_;
};

inline constexpr double kLeakageThreshold = 1e-8;

/// Population of basis states within one photon of the cutoff.
double edge_population(const Matrix& rho, const TruncatedHamiltonian& hamiltonian);

/// U rho U^dagger for a single-cavity state. Throws CutoffLeakageError when
/// the result puts more than kLeakageThreshold near the cutoff.
Matrix oracle_evolve(const Matrix& initial, const Propagator& propagator, double tau);
Matrix oracle_evolve(const Matrix& initial, const TruncatedHamiltonian& hamiltonian, double tau);

/// Smallest cutoff accepted for a field: prepared photons plus three.
int required_cutoff(const FieldSpec& field);

/// Whole four-atom (or two-atom DJCM) system: both cavities evolve under
/// U_a (x) U_b, and the fields are traced out numerically. The diagonal field
/// mixture is carried as an ensemble of pure states.
class FullSystemOracle {
 public:
  /// Throws CutoffLeakageError when n_max is below required_cutoff for
  /// either field.
  FullSystemOracle(Scenario scenario, int n_max);

  /// Reduced atomic state in canonical label order.
  DensityMatrix atomic_state(double alpha, double tau) const;

 private:
  Scenario scenario_;
  int n_max_;
  Propagator propagator_;
  std::vector<PhotonWeight> weights_a_;
  std::vector<PhotonWeight> weights_b_;
};

struct PipelineDeviation {
  double max_state_deviation = 0.0;        // entrywise |rho_analytic - rho_oracle|
  double max_concurrence_deviation = 0.0;  // over every pair the model carries
  std::size_t samples = 0;
};

PipelineDeviation compare_pipelines(const Scenario& scenario, std::span<const double> alphas,
                                    std::span<const double> taus, int n_max);

}  // namespace dtcm::oracle
