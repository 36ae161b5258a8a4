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

#include <string>
#include <vector>

namespace dtcm {

/// One retained photon-number component of a diagonal field state.
struct PhotonWeight {
  unsigned photons = 0;
  double weight = 0.0;
};

/// Initial cavity field: vacuum, a Fock state, or a thermal mixture
/// P_n = nbar^n / (1 + nbar)^(n + 1) truncated once the geometric tail mass
/// drops to tail_mass_epsilon.
class FieldSpec {
 public:
  enum class Kind { Vacuum, Fock, Thermal };

  static constexpr double kDefaultTailMass = 1e-10;

  static FieldSpec vacuum() { return FieldSpec(Kind::Vacuum, 0, 0.0, kDefaultTailMass); }
  static FieldSpec fock(unsigned photons) { return FieldSpec(Kind::Fock, photons, 0.0, kDefaultTailMass); }
  static FieldSpec thermal(double nbar, double tail_mass_epsilon = kDefaultTailMass) {
    return FieldSpec(Kind::Thermal, 0, nbar, tail_mass_epsilon);
  }

  Kind kind() const { return kind_; }
  unsigned photons() const { return photons_; }
  double mean_photons() const;
  double tail_mass_epsilon() const { return tail_mass_epsilon_; }

  /// True for vacuum and Fock(0).
  bool is_empty_cavity() const { return kind_ == Kind::Vacuum || (kind_ == Kind::Fock && photons_ == 0); }

  /// Largest photon number carrying weight. Throws ConfigurationError for a
  /// thermal spec whose truncation cannot be resolved.
  unsigned max_photons() const;

  /// Nonzero weights in ascending photon order. Thermal weights are the exact
  /// P_n for n <= max_photons(), not renormalized.
  std::vector<PhotonWeight> weights() const;

  /// vacuum | fock:<n> | thermal:<nbar>[,<eps>]
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, unsigned photons, double nbar, double eps)
      : kind_(kind), photons_(photons), nbar_(nbar), tail_mass_epsilon_(eps) {}

  Kind kind_;
  unsigned photons_;
  double nbar_;
  double tail_mass_epsilon_;
};

/// Smallest N with (nbar / (1 + nbar))^(N + 1) <= eps.
unsigned thermal_cutoff(double nbar, double eps);

/// Parses the textual form produced by FieldSpec::to_string. Throws
/// ConfigurationError on malformed input.
FieldSpec parse_field(const std::string& text);

}  // namespace dtcm
