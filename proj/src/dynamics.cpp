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

#include "dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace dtcm {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_bit(int b, const char* name) {
  if (b != 0 && b != 1) throw ArgumentError(std::string(name) + " must be 0 or 1, got " + std::to_string(b));
}

void require_time(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw ArgumentError("tau must be a finite nonnegative time");
}

int sign(int bit) { return bit == 0 ? 1 : -1; }

// Amplitude of |first, second> in the Bell-like pair state.
double pair_amplitude(const BellPairSpec& pair, int first, int second) {
  const bool on_support = pair.type() == BellType::Psi ? first != second : first == second;
  return on_support ? pair.amplitude(first) : 0.0;
}

// All sixteen X_{ik,pq}(m, tau) at one (m, tau), indexed [2i + k][2p + q].
using XBlock = std::array<std::array<Complex, 4>, 4>;

XBlock x_block(int m, double tau) {
  XBlock x{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) x[2 * i + k][2 * p + q] = x_coeff({i, k, p, q, m, tau});
  return x;
}

void accumulate_generic(TwoQubitOperator& out, int i, int k, int j, int l, const XBlock& x, double weight) {
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      const Complex ket = x[2 * i + k][2 * r + s];
      if (ket == Complex{}) continue;
      // Both sides must land on the same photon number.
      const int ket_shift = sign(i) * r + sign(k) * s;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          if (sign(j) * u + sign(l) * v != ket_shift) continue;
          const Complex bra = x[2 * j + l][2 * u + v];
          out(2 * (i ^ r) + (k ^ s), 2 * (j ^ u) + (l ^ v)) += weight * ket * std::conj(bra);
        }
    }
}

}  // namespace

BellPairSpec::BellPairSpec(BellType type, double alpha) : type_(type), alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2))
    throw ArgumentError("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
  sin_ = std::sin(alpha);
  cos_ = std::cos(alpha);
}

int target_photons(int i, int k, int p, int q, int m) { return m - sign(i) * p - sign(k) * q; }

Complex x_coeff(const XCoefficientKey& key) {
  require_bit(key.i, "i");
  require_bit(key.k, "k");
  require_bit(key.p, "p");
  require_bit(key.q, "q");
  if (key.m < 0) throw ArgumentError("photon number m must be nonnegative, got " + std::to_string(key.m));
  require_time(key.tau);

  const double m = key.m;
  const int pq = 2 * key.p + key.q;

  if (key.i == 1 && key.k == 1) {
    const double w = std::sqrt(2.0 * (2.0 * m + 3.0));
    const double c = std::cos(w * key.tau);
    switch (pq) {
      case 0: return (m + 1.0) / (2.0 * m + 3.0) * (c - 1.0) + 1.0;
      case 1:
      case 2: return -kI * std::sqrt((m + 1.0) / (2.0 * (2.0 * m + 3.0))) * std::sin(w * key.tau);
      default: return std::sqrt((m + 1.0) * (m + 2.0)) / (2.0 * m + 3.0) * (c - 1.0);
    }
  }

  if (key.i != key.k) {
    const double w = std::sqrt(2.0 * (2.0 * m + 1.0));
    const double c = std::cos(w * key.tau);
    const double s = std::sin(w * key.tau);
    switch (pq) {
      case 0: return 0.5 * (c + 1.0);
      case 3: return 0.5 * (c - 1.0);
      default: {
        // Flipping the excited atom emits into the cavity (m + 1); flipping the
        // ground atom absorbs (m).
        const bool flips_ground_atom = (key.p == 1 && key.i == 0) || (key.q == 1 && key.k == 0);
        const double n = flips_ground_atom ? m : m + 1.0;
        return -kI * std::sqrt(n / (2.0 * (2.0 * m + 1.0))) * s;
      }
    }
  }

  // Both atoms ground: |00, 0> is stationary.
  if (key.m == 0) return pq == 0 ? Complex{1.0, 0.0} : Complex{};
  const double w = std::sqrt(2.0 * (2.0 * m - 1.0));
  const double c = std::cos(w * key.tau);
  switch (pq) {
    case 0: return m / (2.0 * m - 1.0) * (c - 1.0) + 1.0;
    case 1:
    case 2: return -kI * std::sqrt(m / (2.0 * (2.0 * m - 1.0))) * std::sin(w * key.tau);
    default: return std::sqrt(m * (m - 1.0)) / (2.0 * m - 1.0) * (c - 1.0);
  }
}

TwoQubitOperator pair_map(int i, int k, int j, int l, std::span<const PhotonWeight> weights, double tau) {
  require_bit(i, "i");
  require_bit(k, "k");
  require_bit(j, "j");
  require_bit(l, "l");
  require_time(tau);
  TwoQubitOperator out = TwoQubitOperator::Zero();
  for (const auto& w : weights) accumulate_generic(out, i, k, j, l, x_block(static_cast<int>(w.photons), tau), w.weight);
  return out;
}

TwoQubitOperator pair_map(int i, int k, int j, int l, const FieldSpec& field, double tau) {
  const auto weights = field.weights();
  return pair_map(i, k, j, l, weights, tau);
}

TwoQubitOperator pair_map_explicit(int i, int k, int j, int l, std::span<const PhotonWeight> weights, double tau) {
  require_bit(i, "i");
  require_bit(k, "k");
  require_bit(j, "j");
  require_bit(l, "l");
  require_time(tau);

  // Six combinations follow from E(|jl><ik|) = E(|ik><jl|)^dagger.
  const int code = (i << 3) | (k << 2) | (j << 1) | l;
  switch (code) {
    case 0b0001:
    case 0b0010:
    case 0b0011:
    case 0b0110:
    case 0b0111:
    case 0b1011: return pair_map_explicit(j, l, i, k, weights, tau).adjoint();
    default: break;
  }

  TwoQubitOperator e = TwoQubitOperator::Zero();
  // Basis: |00> = 0, |01> = 1, |10> = 2, |11> = 3.
  for (const auto& w : weights) {
    const XBlock xb = x_block(static_cast<int>(w.photons), tau);
    auto X = [&xb](int a, int b, int p, int q) { return xb[2 * a + b][2 * p + q]; };
    auto sq = [](Complex z) { return std::norm(z); };
    const double P = w.weight;

    switch (code) {
      case 0b0000:
        e(3, 3) += P * sq(X(0, 0, 1, 1));
        e(2, 2) += P * sq(X(0, 0, 1, 0));
        e(2, 1) += P * X(0, 0, 1, 0) * std::conj(X(0, 0, 0, 1));
        e(1, 2) += P * X(0, 0, 0, 1) * std::conj(X(0, 0, 1, 0));
        e(1, 1) += P * sq(X(0, 0, 0, 1));
        e(0, 0) += P * sq(X(0, 0, 0, 0));
        break;
      case 0b0100:
        e(3, 1) += P * X(0, 1, 1, 0) * std::conj(X(0, 0, 0, 1));
        e(3, 2) += P * X(0, 1, 1, 0) * std::conj(X(0, 0, 0, 1));
        e(2, 0) += P * X(0, 1, 1, 1) * std::conj(X(0, 0, 0, 0));
        e(1, 0) += P * X(0, 1, 0, 0) * std::conj(X(0, 0, 0, 0));
        break;
      case 0b1000:
        e(3, 2) += P * X(1, 0, 0, 1) * std::conj(X(0, 0, 1, 0));
        e(3, 1) += P * X(1, 0, 0, 1) * std::conj(X(0, 0, 0, 1));
        e(2, 0) += P * X(1, 0, 0, 0) * std::conj(X(0, 0, 0, 0));
        e(1, 0) += P * X(1, 0, 1, 1) * std::conj(X(0, 0, 0, 0));
        break;
      case 0b1100:
        e(3, 0) += P * X(1, 1, 0, 0) * std::conj(X(0, 0, 0, 0));
        break;
      case 0b0101:
        e(3, 3) += P * sq(X(0, 1, 1, 0));
        e(2, 1) += P * X(0, 1, 1, 1) * std::conj(X(0, 1, 0, 0));
        e(2, 2) += P * sq(X(0, 1, 1, 1));
        e(1, 2) += P * X(0, 1, 0, 0) * std::conj(X(0, 1, 1, 1));
        e(1, 1) += P * sq(X(0, 1, 0, 0));
        e(0, 0) += P * sq(X(0, 1, 0, 1));
        break;
      case 0b1001:
        e(3, 3) += P * sq(X(1, 0, 0, 1));
        e(2, 2) += P * X(1, 0, 0, 0) * std::conj(X(0, 1, 1, 1));
        e(2, 1) += P * sq(X(1, 0, 0, 0));
        e(1, 2) += P * sq(X(1, 0, 1, 1));
        e(1, 1) += P * X(1, 0, 1, 1) * std::conj(X(0, 1, 0, 0));
        e(0, 0) += P * sq(X(1, 0, 1, 0));
        break;
      case 0b1101:
        e(3, 2) += P * X(1, 1, 0, 0) * std::conj(X(0, 1, 1, 1));
        e(3, 1) += P * X(1, 1, 0, 0) * std::conj(X(0, 1, 0, 0));
        e(2, 0) += P * X(1, 1, 0, 1) * std::conj(X(0, 1, 0, 1));
        e(1, 0) += P * X(1, 1, 1, 0) * std::conj(X(0, 1, 0, 1));
        break;
      case 0b1010:
        e(3, 3) += P * sq(X(1, 0, 0, 1));
        e(2, 2) += P * sq(X(1, 0, 0, 0));
        e(2, 1) += P * X(1, 0, 0, 0) * std::conj(X(1, 0, 1, 1));
        e(1, 2) += P * X(1, 0, 1, 1) * std::conj(X(1, 0, 0, 0));
        e(1, 1) += P * sq(X(1, 0, 1, 1));
        e(0, 0) += P * sq(X(1, 0, 1, 0));
        break;
      case 0b1110:
        e(3, 2) += P * X(1, 1, 0, 0) * std::conj(X(1, 0, 0, 0));
        e(3, 1) += P * X(1, 1, 0, 0) * std::conj(X(1, 0, 1, 1));
        e(2, 0) += P * X(1, 1, 0, 1) * std::conj(X(1, 0, 1, 0));
        e(1, 0) += P * X(1, 1, 1, 0) * std::conj(X(1, 0, 1, 0));
        break;
      case 0b1111: {
        e(3, 3) += P * sq(X(1, 1, 0, 0));
        const double shared = P * sq(X(1, 1, 0, 1));
        e(2, 2) += shared;
        e(2, 1) += shared;
        e(1, 2) += shared;
        e(1, 1) += shared;
        e(0, 0) += P * sq(X(1, 1, 1, 1));
        break;
      }
      default: break;
    }
  }
  return e;
}

TwoQubitOperator pair_map_explicit(int i, int k, int j, int l, const FieldSpec& field, double tau) {
  const auto weights = field.weights();
  return pair_map_explicit(i, k, j, l, weights, tau);
}

PairMapTable::PairMapTable(std::span<const PhotonWeight> weights, double tau) {
  require_time(tau);
  for (auto& m : maps_) m.setZero();
  for (const auto& w : weights) {
    const XBlock xb = x_block(static_cast<int>(w.photons), tau);
    for (int code = 0; code < 16; ++code)
      accumulate_generic(maps_[code], (code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1, xb, w.weight);
  }
}

std::vector<JcTerm> jc_amplitudes(int i, unsigned n, double tau) {
  require_bit(i, "i");
  require_time(tau);
  if (i == 0 && n == 0) return {{0, 0, Complex{1.0, 0.0}}};
  if (i == 1) {
    const double w = std::sqrt(static_cast<double>(n) + 1.0);
    return {{1, n, Complex{std::cos(w * tau), 0.0}}, {0, n + 1, -kI * std::sin(w * tau)}};
  }
  const double w = std::sqrt(static_cast<double>(n));
  return {{0, n, Complex{std::cos(w * tau), 0.0}}, {1, n - 1, -kI * std::sin(w * tau)}};
}

JcMapTable::JcMapTable(std::span<const PhotonWeight> weights, double tau) {
  require_time(tau);
  for (auto& m : maps_) m.setZero();
  for (const auto& w : weights) {
    const std::array<std::vector<JcTerm>, 2> evolved{jc_amplitudes(0, w.photons, tau), jc_amplitudes(1, w.photons, tau)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (const auto& ket : evolved[i])
          for (const auto& bra : evolved[j])
            if (ket.photons == bra.photons)
              maps_[(i << 1) | j](ket.atom, bra.atom) += w.weight * ket.amplitude * std::conj(bra.amplitude);
  }
}

DensityMatrix assemble_dtcm(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd, const PairMapTable& cavity_a,
                            const PairMapTable& cavity_b) {
  if (pair_ab.type() != pair_cd.type()) throw ArgumentError("DTCM requires both atom pairs to share one Bell type");
  const int flip = pair_ab.type() == BellType::Psi ? 1 : 0;

  // Natural order (A, C, B, D): cavity a holds A, C; cavity b holds B, D.
  Matrix acbd = Matrix::Zero(16, 16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const double coef = pair_ab.amplitude(i) * pair_ab.amplitude(j) * pair_cd.amplitude(k) * pair_cd.amplitude(l);
          if (coef == 0.0) continue;
          const TwoQubitOperator& ea = cavity_a(i, k, j, l);
          const TwoQubitOperator& eb = cavity_b(i ^ flip, k ^ flip, j ^ flip, l ^ flip);
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
              const Complex a = coef * ea(r, c);
              if (a == Complex{}) continue;
              acbd.block<4, 4>(4 * r, 4 * c) += a * eb;
            }
        }

  using enum Qubit;
  return permute_qubits(DensityMatrix(std::move(acbd), {A, C, B, D}), {{A, C, B, D}, {A, B, C, D}});
}

DensityMatrix assemble_djcm(const BellPairSpec& pair_ab, const JcMapTable& cavity_a, const JcMapTable& cavity_b) {
  Matrix ab = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const double coef = pair_amplitude(pair_ab, a, b) * pair_amplitude(pair_ab, a2, b2);
          if (coef == 0.0) continue;
          const Eigen::Matrix2cd& ea = cavity_a(a, a2);
          const Eigen::Matrix2cd& eb = cavity_b(b, b2);
          for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) ab.block<2, 2>(2 * r, 2 * c) += coef * ea(r, c) * eb;
        }
  return DensityMatrix(std::move(ab), {Qubit::A, Qubit::B});
}

DensityMatrix assemble_atomic_state(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd,
                                    const FieldSpec& field_a, const FieldSpec& field_b, double tau, Model model) {
  require_time(tau);
  const auto weights_a = field_a.weights();
  const auto weights_b = field_b.weights();
  if (model == Model::Djcm) return assemble_djcm(pair_ab, JcMapTable(weights_a, tau), JcMapTable(weights_b, tau));
  if (pair_ab.type() != pair_cd.type()) throw ArgumentError("DTCM requires both atom pairs to share one Bell type");
  return assemble_dtcm(pair_ab, pair_cd, PairMapTable(weights_a, tau), PairMapTable(weights_b, tau));
}

DensityMatrix initial_atomic_state(const BellPairSpec& pair_ab, const BellPairSpec& pair_cd, Model model) {
  using enum Qubit;
  if (model == Model::Djcm) {
    Eigen::VectorXcd psi(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) psi(2 * a + b) = pair_amplitude(pair_ab, a, b);
    return DensityMatrix(psi * psi.adjoint(), {A, B});
  }
  Eigen::VectorXcd psi(16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          psi(8 * a + 4 * b + 2 * c + d) = pair_amplitude(pair_ab, a, b) * pair_amplitude(pair_cd, c, d);
  return DensityMatrix(psi * psi.adjoint(), {A, B, C, D});
}

}  // namespace dtcm
