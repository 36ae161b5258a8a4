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

#include "oracle.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "entanglement.hpp"
#include "errors.hpp"

namespace dtcm::oracle {
namespace {

// Photon blocks whose largest amplitude is below this are roundoff from the
// eigen-decomposition (the interaction conserves excitations exactly).
constexpr double kNegligibleAmplitude = 1e-13;

int popcount(int bits) {
  int n = 0;
  for (; bits != 0; bits >>= 1) n += bits & 1;
  return n;
}

// Amplitude of |first, second> in a Bell-like pair, written out independently
// of the analytic pipeline.
double bell_amplitude(BellType type, double alpha, int first, int second) {
  if (type == BellType::Psi) {
    if (first == 1 && second == 0) return std::cos(alpha);
    if (first == 0 && second == 1) return std::sin(alpha);
    return 0.0;
  }
  if (first == 1 && second == 1) return std::cos(alpha);
  if (first == 0 && second == 0) return std::sin(alpha);
  return 0.0;
}

}  // namespace

TruncatedHamiltonian::TruncatedHamiltonian(int n_max, int n_atoms) : n_max_(n_max), n_atoms_(n_atoms) {
  if (n_max < 1) throw ArgumentError("photon cutoff must be at least 1, got " + std::to_string(n_max));
  if (n_atoms != 1 && n_atoms != 2) throw ArgumentError("cavity holds 1 or 2 atoms, got " + std::to_string(n_atoms));
  const int atom_states = 1 << n_atoms;
  const Eigen::Index dim = atom_states * (n_max + 1);
  matrix_ = Matrix::Zero(dim, dim);
  for (int s = 0; s < atom_states; ++s)
    for (int n = 1; n <= n_max; ++n)
      for (int j = 0; j < n_atoms; ++j) {
        const int bit = 1 << (n_atoms - 1 - j);
        if ((s & bit) != 0) continue;
        // a sigma_j^+ : absorb one photon, excite atom j
        const Eigen::Index from = index(s, n);
        const Eigen::Index to = index(s | bit, n - 1);
        const double g = std::sqrt(static_cast<double>(n));
        matrix_(to, from) += g;
        matrix_(from, to) += g;
      }
}

Eigen::VectorXd TruncatedHamiltonian::excitation_number() const {
  Eigen::VectorXd n(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) n(i) = popcount(atoms_of(i)) + photons_of(i);
  return n;
}

TruncatedHamiltonian build_tc_hamiltonian(int n_max, int n_atoms) { return TruncatedHamiltonian(n_max, n_atoms); }

Propagator::Propagator(const TruncatedHamiltonian& hamiltonian) : hamiltonian_(hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian_.matrix());
  if (solver.info() != Eigen::Success) throw NumericalError("oracle: Hamiltonian diagonalization failed");
  eigenvectors_ = solver.eigenvectors();
  eigenvalues_ = solver.eigenvalues();
}

Matrix Propagator::unitary(double tau) const {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw ArgumentError("tau must be a finite nonnegative time");
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) phases(k) = std::polar(1.0, -eigenvalues_(k) * tau);
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

double edge_population(const Matrix& rho, const TruncatedHamiltonian& hamiltonian) {
  double p = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    if (hamiltonian.photons_of(i) >= hamiltonian.n_max() - 1) p += rho(i, i).real();
  return p;
}

Matrix oracle_evolve(const Matrix& initial, const Propagator& propagator, double tau) {
  const auto& h = propagator.hamiltonian();
  if (initial.rows() != h.dim() || initial.cols() != h.dim())
    throw ArgumentError("oracle: initial state dimension does not match the Hamiltonian");
  const Matrix u = propagator.unitary(tau);
  Matrix out = u * initial * u.adjoint();
  const double leak = edge_population(out, h);
  if (leak > kLeakageThreshold)
    throw CutoffLeakageError("oracle: population " + std::to_string(leak) + " within one photon of cutoff " +
                             std::to_string(h.n_max()));
  return out;
}

Matrix oracle_evolve(const Matrix& initial, const TruncatedHamiltonian& hamiltonian, double tau) {
  return oracle_evolve(initial, Propagator(hamiltonian), tau);
}

int required_cutoff(const FieldSpec& field) { return static_cast<int>(field.max_photons()) + 3; }

FullSystemOracle::FullSystemOracle(Scenario scenario, int n_max)
    : scenario_(std::move(scenario)),
      n_max_(n_max),
      propagator_(TruncatedHamiltonian(n_max, scenario_.model == Model::Dtcm ? 2 : 1)),
      weights_a_(scenario_.field_a.weights()),
      weights_b_(scenario_.field_b.weights()) {
  const int needed = std::max(required_cutoff(scenario_.field_a), required_cutoff(scenario_.field_b));
  if (n_max < needed)
    throw CutoffLeakageError("oracle: cutoff " + std::to_string(n_max) + " below required " + std::to_string(needed));
}

DensityMatrix FullSystemOracle::atomic_state(double alpha, double tau) const {
  const bool dtcm = scenario_.model == Model::Dtcm;
  const int na = dtcm ? 4 : 2;  // atomic basis states per cavity
  const int blocks = n_max_ + 1;
  const auto& h = propagator_.hamiltonian();

  // Initial atomic amplitudes: rows index cavity-a atoms, columns cavity-b atoms.
  Matrix coeff = Matrix::Zero(na, na);
  if (dtcm) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d)
            coeff(2 * a + c, 2 * b + d) =
                bell_amplitude(scenario_.bell, alpha, a, b) * bell_amplitude(scenario_.bell, alpha, c, d);
  } else {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) coeff(a, b) = bell_amplitude(scenario_.bell, alpha, a, b);
  }

  const Matrix u = propagator_.unitary(tau);
  auto columns_at = [&](unsigned photons) {
    Matrix cols(u.rows(), na);
    for (int x = 0; x < na; ++x) cols.col(x) = u.col(h.index(x, static_cast<int>(photons)));
    return cols;
  };
  // Row block of an evolved (dim x na) factor for photon number p.
  auto block = [&](const Matrix& factor, int p) {
    Matrix out(na, na);
    for (int x = 0; x < na; ++x) out.row(x) = factor.row(h.index(x, p));
    return out;
  };

  Matrix rho = Matrix::Zero(na * na, na * na);
  double leak = 0.0;
  for (const auto& wa : weights_a_) {
    const Matrix left = columns_at(wa.photons) * coeff;  // cavity-a factor of the evolved state
    std::vector<Matrix> left_blocks;
    std::vector<int> left_photons;
    for (int p = 0; p < blocks; ++p) {
      Matrix lb = block(left, p);
      if (p >= n_max_ - 1) leak += wa.weight * lb.squaredNorm();  // right factor has orthonormal columns
      if (lb.cwiseAbs().maxCoeff() < kNegligibleAmplitude) continue;
      left_blocks.push_back(std::move(lb));
      left_photons.push_back(p);
    }
    for (const auto& wb : weights_b_) {
      const double weight = wa.weight * wb.weight;
      const Matrix right = columns_at(wb.photons);
      for (int q = 0; q < blocks; ++q) {
        const Matrix rb = block(right, q);
        if (q >= n_max_ - 1) leak += weight * (left * rb.transpose()).squaredNorm();
        if (rb.cwiseAbs().maxCoeff() < kNegligibleAmplitude) continue;
        for (const Matrix& lb : left_blocks) {
          // Amplitudes of |x, p>_a |y, q>_b, flattened as x * na + y.
          const Matrix psi = lb * rb.transpose();
          Eigen::VectorXcd v(na * na);
          for (int x = 0; x < na; ++x)
            for (int y = 0; y < na; ++y) v(x * na + y) = psi(x, y);
          rho.noalias() += weight * (v * v.adjoint());
        }
      }
    }
  }
  if (leak > kLeakageThreshold)
    throw CutoffLeakageError("oracle: population " + std::to_string(leak) + " within one photon of cutoff " +
                             std::to_string(n_max_));

  using enum Qubit;
  if (!dtcm) return DensityMatrix(std::move(rho), {A, B});
  return permute_qubits(DensityMatrix(std::move(rho), {A, C, B, D}), {{A, C, B, D}, {A, B, C, D}});
}

PipelineDeviation compare_pipelines(const Scenario& scenario, std::span<const double> alphas,
                                    std::span<const double> taus, int n_max) {
  const FullSystemOracle oracle(scenario, n_max);
  std::vector<AtomPair> pairs{AtomPair::AB};
  if (scenario.model == Model::Dtcm) pairs = {AtomPair::AB, AtomPair::AC, AtomPair::BD, AtomPair::CD};

  PipelineDeviation dev;
  for (double alpha : alphas)
    for (double tau : taus) {
      const DensityMatrix analytic = scenario_state(scenario, alpha, tau);
      const DensityMatrix brute = oracle.atomic_state(alpha, tau);
      dev.max_state_deviation =
          std::max(dev.max_state_deviation, (analytic.matrix() - brute.matrix()).cwiseAbs().maxCoeff());
      for (AtomPair p : pairs) {
        const auto keep = pair_qubits(p);
        const double ca = concurrence(partial_trace(analytic, keep).matrix());
        const double cb = concurrence_general(partial_trace(brute, keep).matrix());
        dev.max_concurrence_deviation = std::max(dev.max_concurrence_deviation, std::abs(ca - cb));
      }
      ++dev.samples;
    }
  return dev;
}

}  // namespace dtcm::oracle
