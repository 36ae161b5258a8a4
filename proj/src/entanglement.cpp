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

#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace dtcm {
namespace {

constexpr double kSpectrumFailure = 1e-8;
// Eigenvalues of a unit-trace rho at or below this are rounding noise.
constexpr double kSpectrumNoise = 1e-14;

bool on_x_pattern(int r, int c) { return r == c || r + c == 3; }

}  // namespace

std::optional<XFormMatrix> is_x_form(const Matrix& rho, double tol) {
  if (rho.rows() != 4 || rho.cols() != 4) throw ArgumentError("is_x_form expects a 4x4 matrix");
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!on_x_pattern(r, c) && std::abs(rho(r, c)) > tol) return std::nullopt;
  XFormMatrix x;
  for (int k = 0; k < 4; ++k) x.diag[static_cast<std::size_t>(k)] = rho(k, k).real();
  x.rho14 = rho(0, 3);
  x.rho23 = rho(1, 2);
  return x;
}

double concurrence_x(const XFormMatrix& x) {
  std::array<double, 4> d{};
  for (std::size_t k = 0; k < 4; ++k) d[k] = x.diag[k] <= kSpectrumNoise ? 0.0 : x.diag[k];
  const double a = std::abs(x.rho23) - std::sqrt(d[0] * d[3]);
  const double b = std::abs(x.rho14) - std::sqrt(d[1] * d[2]);
  return 2.0 * std::max({0.0, a, b});
}

double concurrence_general(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw ArgumentError("concurrence expects a 4x4 matrix");
  const Eigen::Matrix4cd r = (rho + rho.adjoint()) * 0.5;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(r);
  if (solver.info() != Eigen::Success) throw NumericalError("concurrence: eigen-decomposition of rho failed");

  // rho = W W^dagger over the resolvable part of the spectrum; the lambdas are
  // the singular values of W^T (sy x sy) W, so no square root of a
  // near-zero eigenvalue of rho rho~ is taken.
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> w(4, 0);
  for (int k = 0; k < 4; ++k) {
    const double e = solver.eigenvalues()(k);
    if (e < -kSpectrumFailure) throw NumericalError("concurrence: input state has eigenvalue " + std::to_string(e));
    if (e <= kSpectrumNoise) continue;
    w.conservativeResize(Eigen::NoChange, w.cols() + 1);
    w.col(w.cols() - 1) = solver.eigenvectors().col(k) * std::sqrt(e);
  }
  if (w.cols() == 0) throw NumericalError("concurrence: state has no resolvable spectrum");

  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Eigen::MatrixXcd t = w.transpose() * flip * w;
  const Eigen::VectorXd lambda = Eigen::JacobiSVD<Eigen::MatrixXcd>(t).singularValues();  // descending
  double c = lambda(0);
  for (Eigen::Index k = 1; k < lambda.size(); ++k) c -= lambda(k);
  return std::max(0.0, c);
}

double concurrence(const Matrix& rho, double x_form_tol) {
  if (auto x = is_x_form(rho, x_form_tol)) return concurrence_x(*x);
  return concurrence_general(rho);
}

}  // namespace dtcm
