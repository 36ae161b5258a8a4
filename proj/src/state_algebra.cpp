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

#include "state_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "errors.hpp"

namespace dtcm {
namespace {

// Position of each label inside `order`, -1 when absent.
std::array<int, 4> positions(const QubitOrder& order) {
  std::array<int, 4> pos{-1, -1, -1, -1};
  for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<int>(order[k])] = static_cast<int>(k);
  return pos;
}

void require_distinct(const QubitOrder& labels, const char* what) {
  std::array<bool, 4> seen{};
  for (Qubit q : labels) {
    auto idx = static_cast<std::size_t>(q);
    if (idx >= seen.size()) throw ArgumentError(std::string(what) + ": unknown qubit label");
    if (seen[idx]) throw ArgumentError(std::string(what) + ": duplicate qubit label " + label_char(q));
    seen[idx] = true;
  }
}

}  // namespace

char label_char(Qubit q) { return static_cast<char>('A' + static_cast<int>(q)); }

std::string label_string(std::span<const Qubit> labels) {
  std::string s;
  for (Qubit q : labels) s.push_back(label_char(q));
  return s;
}

DensityMatrix::DensityMatrix(Matrix entries, QubitOrder labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  if (entries_.rows() != entries_.cols()) throw ArgumentError("density matrix must be square");
  require_distinct(labels_, "density matrix");
  if (entries_.rows() != (Eigen::Index{1} << labels_.size()))
    throw ArgumentError("density matrix dimension " + std::to_string(entries_.rows()) +
                        " does not match " + std::to_string(labels_.size()) + " qubit labels");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const QubitPermutation& perm) {
  if (perm.source != rho.labels())
    throw ArgumentError("permutation source " + label_string(perm.source) + " does not match state labels " +
                        label_string(rho.labels()));
  require_distinct(perm.target, "permutation target");
  if (perm.target.size() != perm.source.size() ||
      !std::is_permutation(perm.target.begin(), perm.target.end(), perm.source.begin()))
    throw ArgumentError("permutation target " + label_string(perm.target) + " is not a reordering of " +
                        label_string(perm.source));

  const int n = static_cast<int>(perm.source.size());
  const auto target_pos = positions(perm.target);
  const Eigen::Index dim = rho.dim();

  // map[s] = index in target order of source basis state s
  std::vector<Eigen::Index> map(static_cast<std::size_t>(dim));
  for (Eigen::Index s = 0; s < dim; ++s) {
    Eigen::Index t = 0;
    for (int k = 0; k < n; ++k) {
      const auto bit = (s >> (n - 1 - k)) & 1;
      const int tk = target_pos[static_cast<int>(perm.source[static_cast<std::size_t>(k)])];
      t |= bit << (n - 1 - tk);
    }
    map[static_cast<std::size_t>(s)] = t;
  }

  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      out(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) = rho(r, c);
  return DensityMatrix(std::move(out), perm.target);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Qubit> keep) {
  if (keep.empty()) throw ArgumentError("partial trace: keep set is empty");
  QubitOrder kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  const auto pos = positions(rho.labels());
  for (Qubit q : kept)
    if (pos[static_cast<int>(q)] < 0)
      throw ArgumentError(std::string("partial trace: label ") + label_char(q) + " not in state " +
                          label_string(rho.labels()));

  const int n = static_cast<int>(rho.labels().size());
  // Bit shifts in the full index: traced qubits in rho order, kept qubits in canonical order.
  std::vector<int> traced_shift;
  for (int k = 0; k < n; ++k) {
    const Qubit q = rho.labels()[static_cast<std::size_t>(k)];
    if (std::find(kept.begin(), kept.end(), q) == kept.end()) traced_shift.push_back(n - 1 - k);
  }
  std::vector<int> kept_shift_canonical;
  for (Qubit q : kept) kept_shift_canonical.push_back(n - 1 - pos[static_cast<int>(q)]);

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced_shift.size());
  const Eigen::Index out_dim = Eigen::Index{1} << nk;

  auto expand = [](Eigen::Index compact, const std::vector<int>& shifts) {
    const int m = static_cast<int>(shifts.size());
    Eigen::Index full = 0;
    for (int b = 0; b < m; ++b) full |= ((compact >> (m - 1 - b)) & 1) << shifts[static_cast<std::size_t>(b)];
    return full;
  };

  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r) {
    const Eigen::Index fr = expand(r, kept_shift_canonical);
    for (Eigen::Index c = 0; c < out_dim; ++c) {
      const Eigen::Index fc = expand(c, kept_shift_canonical);
      Complex acc{0.0, 0.0};
      for (Eigen::Index t = 0; t < (Eigen::Index{1} << nt); ++t) {
        const Eigen::Index ft = expand(t, traced_shift);
        acc += rho(fr | ft, fc | ft);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept));
}

ValidationReport validate_density(const Matrix& rho, const ValidationTolerances& tol) {
  ValidationReport report;
  if (rho.rows() != rho.cols() || rho.rows() == 0) return report;
  report.max_hermiticity_deviation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  report.trace_deviation = std::abs(rho.trace() - Complex{1.0, 0.0});
  const Matrix hermitized = (rho + rho.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.info() == Eigen::Success ? solver.eigenvalues().minCoeff() : -INFINITY;
  report.hermitian = report.max_hermiticity_deviation <= tol.hermiticity;
  report.unit_trace = report.trace_deviation <= tol.trace;
  report.positive = report.min_eigenvalue >= -tol.psd_slack;
  return report;
}

}  // namespace dtcm
