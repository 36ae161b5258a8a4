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


#include <cmath>
#include <numbers>
#include <random>

#include "analysis.hpp"
#include "doctest.h"
#include "entanglement.hpp"
#include "errors.hpp"
#include "reference.hpp"

using namespace dtcm;
using std::numbers::pi;

namespace {

Matrix pure(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

Eigen::Vector4cd ket(Complex c00, Complex c01, Complex c10, Complex c11) {
  Eigen::Vector4cd v(c00, c01, c10, c11);
  return v / v.norm();
}

}  // namespace

TEST_CASE("is_x_form") {
  const Matrix mixed = Matrix::Identity(4, 4) / 4.0;
  const auto x = is_x_form(mixed, 1e-10);
  REQUIRE(x.has_value());
  CHECK(x->diag[2] == 0.25);
  CHECK(x->rho14 == Complex(0.0));

  Matrix off = mixed;
  off(0, 1) = 0.1;
  off(1, 0) = 0.1;
  CHECK_FALSE(is_x_form(off, 1e-10).has_value());

  Matrix anti = mixed;
  anti(0, 3) = Complex(0.1, 0.05);
  anti(3, 0) = std::conj(anti(0, 3));
  anti(1, 2) = 0.2;
  anti(2, 1) = 0.2;
  const auto xa = is_x_form(anti, 1e-10);
  REQUIRE(xa.has_value());
  CHECK(xa->rho14 == Complex(0.1, 0.05));
  CHECK(xa->rho23 == Complex(0.2));
}

TEST_CASE("concurrence_x") {
  XFormMatrix bell;
  bell.diag = {0.0, 0.5, 0.5, 0.0};
  bell.rho23 = 0.5;
  CHECK(concurrence_x(bell) == doctest::Approx(1.0));

  XFormMatrix mixed;
  mixed.diag = {0.25, 0.25, 0.25, 0.25};
  CHECK(concurrence_x(mixed) == 0.0);

  for (double alpha : {0.0, 0.1, 0.5, pi / 4, 1.2, pi / 2}) {
    XFormMatrix psi;
    psi.diag = {0.0, std::sin(alpha) * std::sin(alpha), std::cos(alpha) * std::cos(alpha), 0.0};
    psi.rho23 = std::sin(alpha) * std::cos(alpha);
    CHECK(concurrence_x(psi) == doctest::Approx(std::abs(std::sin(2 * alpha))).epsilon(1e-14));
  }
}

TEST_CASE("concurrence_general on known states") {
  CHECK(concurrence_general(pure(ket(1, 0, 0, 0))) == doctest::Approx(0.0));
  CHECK(concurrence_general(pure(ket(1, 0, 0, 1))) == doctest::Approx(1.0));
  CHECK(concurrence_general(pure(ket(0, 1, Complex(0, 1), 0))) == doctest::Approx(1.0));

  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = ket({g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)});
    CHECK(concurrence_general(pure(v)) == doctest::Approx(ref::pure_concurrence(v)).epsilon(1e-10));
  }
  // Werner states: C = max(0, (3p - 1) / 2)
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const Matrix w = p * pure(ket(0, 1, -1, 0)) + (1 - p) * Matrix::Identity(4, 4) / 4.0;
    CHECK(concurrence_general(w) == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-12));
  }
}

TEST_CASE("concurrence is bounded and invariant under local unitaries") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix rho = ref::random_density(4, rng);
    const double c = concurrence_general(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    const Matrix local = kron(ref::random_unitary2(rng), ref::random_unitary2(rng));
    const Matrix rotated = local * rho * local.adjoint();
    CHECK(std::abs(concurrence_general(rotated) - c) < 1e-9);
  }
}

TEST_CASE("concurrence_general rejects non-physical input") {
  Matrix bad = Matrix::Zero(4, 4);
  bad(0, 0) = 1.2;
  bad(3, 3) = -0.2;
  CHECK_THROWS_AS(concurrence_general(bad), NumericalError);
  CHECK_THROWS_AS(concurrence_general(Matrix::Identity(2, 2)), ArgumentError);
  CHECK_THROWS_AS(is_x_form(Matrix::Identity(8, 8), 1e-10), ArgumentError);
}

TEST_CASE("two routes agree on every reduced pair state of a sweep") {
  const auto taus = linspace(0.0, 25.0, 251);
  std::vector<double> alphas;
  for (int a = 0; a <= 10; ++a) alphas.push_back(a * pi / 20);
  double worst = 0.0;
  std::size_t x_states = 0;
  std::size_t non_x = 0;
  for (auto bell : {BellType::Psi, BellType::Phi})
    for (const auto& field : {FieldSpec::vacuum(), FieldSpec::fock(1), FieldSpec::thermal(1.0, 1e-13)}) {
      const Scenario scenario{Model::Dtcm, bell, field, field};
      for (double alpha : alphas)
        for (double tau : taus) {
          const auto state = scenario_state(scenario, alpha, tau);
          for (auto pair : {AtomPair::AB, AtomPair::AC, AtomPair::BD, AtomPair::CD}) {
            const auto qubits = pair_qubits(pair);
            const auto reduced = partial_trace(state, qubits);
            const auto x = is_x_form(reduced.matrix(), 1e-10);
            if (!x) {
              ++non_x;
              continue;
            }
            ++x_states;
            worst = std::max(worst, std::abs(concurrence_x(*x) - concurrence_general(reduced.matrix())));
          }
        }
    }
  CHECK(non_x == 0);
  CHECK(x_states > 0);
  CHECK(worst <= 1e-9);
}
