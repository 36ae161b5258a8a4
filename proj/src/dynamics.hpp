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

// Exact resonant dynamics of two atoms sharing one cavity mode (Tavis-Cummings)
// and of one atom per cavity (Jaynes-Cummings), expressed through the
// interaction-picture amplitudes X_{ik,pq}(m, tau) and the single-cavity
// decoherence maps they induce on two-qubit operators. Time is always the
// dimensionless tau = g t.

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "fields.hpp"
#include "state_algebra.hpp"

namespace dtcm {

enum class BellType { Psi, Phi };
enum class Model { Dtcm, Djcm };

/// psi: cos(alpha)|10> + sin(alpha)|01>;  phi: cos(alpha)|11> + sin(alpha)|00>.
class BellPairSpec {
 public:
  /// Throws ArgumentError unless alpha lies in [0, pi/2].
  BellPairSpec(BellType type, double alpha);

  BellType type() const { return type_; }
  double alpha() const { return alpha_; }
  /// amplitude(0) = sin(alpha), amplitude(1) = cos(alpha).
  double amplitude(int bit) const { return bit == 0 ? sin_ : cos_; }

 private:
  BellType type_;
  double alpha_;
  double sin_;
  double cos_;
};

/// (i, k): initial atomic bits; (p, q): flips applied; m: initial photons.
struct XCoefficientKey {
  int i = 0;
  int k = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  double tau = 0.0;
};

/// U(tau)|ik, m> = sum_pq X_{ik,pq}(m, tau) |i^p, k^q>|m - (-1)^i p - (-1)^k q>.
/// Throws ArgumentError for non-bit indices, negative m or negative tau.
Complex x_coeff(const XCoefficientKey& key);

using XCoefficientFn = std::function<Complex(const XCoefficientKey&)>;

/// Photon number reached from |ik, m> after flips (p, q).
int target_photons(int i, int k, int p, int q, int m);

using TwoQubitOperator = Eigen::Matrix4cd;

/// Single-cavity map E(|ik><jl|) built from the generic double sum over the
/// retained photon weights and all flip patterns with equal final photon
/// number. Row/column index is 2*x + y for the (first, second) atom.
TwoQubitOperator pair_map(int i, int k, int j, int l, std::span<const PhotonWeight> weights, double tau);
TwoQubitOperator pair_map(int i, int k, int j, int l, const FieldSpec& field, double tau);

/// Same object from the closed-form per-index expressions (ten written out,
/// six by conjugate transposition).
TwoQubitOperator pair_map_explicit(int i, int k, int j, int l, std::span<const PhotonWeight> weights, double tau);
TwoQubitOperator pair_map_explicit(int i, int k, int j, int l, const FieldSpec& field, double tau);

/// All sixteen E(|ik><jl|) for one cavity at one time, indexed by
/// 8i + 4k + 2j + l.
class PairMapTable {
 public:
  PairMapTable(std::span<const PhotonWeight> weights, double tau);

  const TwoQubitOperator& operator()(int i, int k, int j, int l) const { return maps_[(i << 3) | (k << 2) | (j << 1) | l]; }

 private:
  std::array<TwoQubitOperator, 16> maps_;
};

struct JcTerm {
  int atom = 0;
  unsigned photons = 0;
  Complex amplitude;
};

/// Resonant Jaynes-Cummings evolution of |i, n>.
std::vector<JcTerm> jc_amplitudes(int i, unsigned n, double tau);

/// Single-atom analogue of PairMapTable: E(|i><j|) for i, j in {0, 1}.
class JcMapTable {
 public:
  JcMapTable(std::span<const PhotonWeight> weights, double tau);

  const Eigen::Matrix2cd& operator()(int i, int j) const { return maps_[(i << 1) | j]; }

 private:
  std::array<Eigen::Matrix2cd, 4> maps_;
};

/// Reduced atomic state after tracing both cavities. DTCM: 16x16 over
/// (A, B, C, D) with atoms A, C in cavity a and B, D in cavity b. DJCM: 4x4
/// over (A, B); pair_cd is ignored. Throws ArgumentError for mixed Bell types
/// (DTCM) and ConfigurationError for unresolvable thermal truncation.
DensityMatrix assemble_atomic_state(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd,
                                    const FieldSpec& field_a, const FieldSpec& field_b, double tau, Model model);

/// Assembly from precomputed per-cavity tables; shares the tables across
/// preparations at one time.
DensityMatrix assemble_dtcm(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd, const PairMapTable& cavity_a,
                            const PairMapTable& cavity_b);
DensityMatrix assemble_djcm(const BellPairSpec& pair_ab, const JcMapTable& cavity_a, const JcMapTable& cavity_b);

/// Pure initial atomic state (tau = 0), in canonical label order.
DensityMatrix initial_atomic_state(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd, Model model);

}  // namespace dtcm
