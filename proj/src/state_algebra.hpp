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

// Dense complex matrix utilities for multi-qubit atomic states.
//
// Basis convention: for an ordered label list (L0, L1, ..., Ln-1) the basis
// index is sum_k bit(Lk) * 2^(n-1-k), so the first label is the most
// significant bit. Label sets that are materialized by this module (partial
// trace results) always come out in canonical order A < B < C < D.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dtcm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class Qubit : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

using QubitOrder = std::vector<Qubit>;

char label_char(Qubit q);
std::string label_string(std::span<const Qubit> labels);

/// Square complex matrix over 2^n basis states, tagged with its qubit labels.
class DensityMatrix {
 public:
  DensityMatrix(Matrix entries, QubitOrder labels);

  const Matrix& matrix() const { return entries_; }
  const QubitOrder& labels() const { return labels_; }
  Eigen::Index dim() const { return entries_.rows(); }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

 private:
  Matrix entries_;
  QubitOrder labels_;
};

/// Relabels a state from `source` label order into `target` label order.
struct QubitPermutation {
  QubitOrder source;
  QubitOrder target;

  QubitPermutation inverse() const { return {target, source}; }
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Re-indexes rho so that its labels appear in perm.target order. Throws
/// ArgumentError when perm.source does not match rho's labels or target is not
/// a permutation of source.
DensityMatrix permute_qubits(const DensityMatrix& rho, const QubitPermutation& perm);

/// Traces out every qubit not in `keep`; the result carries `keep` in
/// canonical order. Throws ArgumentError for an empty keep set or a label not
/// present in rho.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep);

struct ValidationTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double psd_slack = 1e-9;
};

struct ValidationReport {
  double max_hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;  // |trace - 1|
  double min_eigenvalue = 0.0;   // of the Hermitized matrix
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const { return hermitian && unit_trace && positive; }
};

/// Reports, never throws. Eigenvalues come from (rho + rho^dagger) / 2.
ValidationReport validate_density(const Matrix& rho, const ValidationTolerances& tol = {});

}  // namespace dtcm
