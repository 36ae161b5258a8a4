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
#include <optional>

#include "state_algebra.hpp"

namespace dtcm {

/// Two-qubit state whose only nonzero entries sit on the diagonal and the
/// anti-diagonal (basis |00>, |01>, |10>, |11>, 1-based naming as rho_kl).
struct XFormMatrix {
  std::array<double, 4> diag{};  // rho_11 .. rho_44
  Complex rho14;
  Complex rho23;
};

/// Extracts the X pattern when every other entry of the 4x4 `rho` has
/// magnitude <= tol; nullopt otherwise.
std::optional<XFormMatrix> is_x_form(const Matrix& rho, double tol);

/// 2 max{0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33)}, with
/// populations at or below 1e-14 taken as zero (same floor as
/// concurrence_general).
double concurrence_x(const XFormMatrix& x);

/// Wootters concurrence, max{0, l1 - l2 - l3 - l4} with l the singular values
/// of W^T (sy x sy) W for rho = W W^dagger. Eigenvalues of rho below 1e-14
/// are treated as zero. Throws NumericalError when rho has an eigenvalue
/// below -1e-8.
double concurrence_general(const Matrix& rho);

/// concurrence_x when rho is X-form within tol, otherwise concurrence_general.
double concurrence(const Matrix& rho, double x_form_tol = 1e-10);

}  // namespace dtcm
