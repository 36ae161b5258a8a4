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

#include "fields.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "errors.hpp"

namespace dtcm {
namespace {

constexpr unsigned kMaxThermalCutoff = 100000;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_real(const std::string& s, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno != 0 || !std::isfinite(v))
    throw ConfigurationError("field: cannot parse " + what + " '" + s + "'");
  return v;
}

}  // namespace

unsigned thermal_cutoff(double nbar, double eps) {
  if (!(nbar > 0.0) || !std::isfinite(nbar))
    throw ConfigurationError("thermal field: mean photon number must be positive, got " + format_real(nbar));
  if (!(eps > 0.0) || !(eps < 1.0))
    throw ConfigurationError("thermal field: tail mass epsilon must lie in (0, 1), got " + format_real(eps));
  const double ratio = nbar / (1.0 + nbar);
  const double estimate = std::ceil(std::log(eps) / std::log(ratio)) - 1.0;
  if (!(estimate < kMaxThermalCutoff))
    throw ConfigurationError("thermal field: truncation for nbar=" + format_real(nbar) + ", eps=" +
                             format_real(eps) + " exceeds " + std::to_string(kMaxThermalCutoff) + " photons");
  // Correct for rounding in the logarithms.
  auto n = static_cast<unsigned>(std::max(0.0, estimate));
  while (n > 0 && std::pow(ratio, static_cast<double>(n)) <= eps) --n;
  while (std::pow(ratio, static_cast<double>(n) + 1.0) > eps) ++n;
  return n;
}

double FieldSpec::mean_photons() const {
  switch (kind_) {
    case Kind::Vacuum: return 0.0;
    case Kind::Fock: return static_cast<double>(photons_);
    case Kind::Thermal: return nbar_;
  }
  return 0.0;
}

unsigned FieldSpec::max_photons() const {
  switch (kind_) {
    case Kind::Vacuum: return 0;
    case Kind::Fock: return photons_;
    case Kind::Thermal: return thermal_cutoff(nbar_, tail_mass_epsilon_);
  }
  return 0;
}

std::vector<PhotonWeight> FieldSpec::weights() const {
  switch (kind_) {
    case Kind::Vacuum: return {{0, 1.0}};
    case Kind::Fock: return {{photons_, 1.0}};
    case Kind::Thermal: {
      const unsigned cutoff = max_photons();
      const double ratio = nbar_ / (1.0 + nbar_);
      std::vector<PhotonWeight> out;
      out.reserve(cutoff + 1);
      double p = 1.0 / (1.0 + nbar_);
      for (unsigned n = 0; n <= cutoff; ++n) {
        out.push_back({n, p});
        p *= ratio;
      }
      return out;
    }
  }
  return {};
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Vacuum: return "vacuum";
    case Kind::Fock: return "fock:" + std::to_string(photons_);
    case Kind::Thermal: {
      std::string s = "thermal:" + format_real(nbar_);
      if (tail_mass_epsilon_ != kDefaultTailMass) s += "," + format_real(tail_mass_epsilon_);
      return s;
    }
  }
  return {};
}

FieldSpec parse_field(const std::string& text) {
  if (text == "vacuum") return FieldSpec::vacuum();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigurationError("field: expected vacuum, fock:<n> or thermal:<nbar>[,eps], got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "fock") {
    const double n = parse_real(arg, "photon number");
    if (n < 0.0 || n != std::floor(n) || n > 1e6)
      throw ConfigurationError("field: Fock photon number must be a nonnegative integer, got '" + arg + "'");
    return FieldSpec::fock(static_cast<unsigned>(n));
  }
  if (kind == "thermal") {
    const auto comma = arg.find(',');
    const double nbar = parse_real(arg.substr(0, comma), "mean photon number");
    const double eps = comma == std::string::npos ? FieldSpec::kDefaultTailMass : parse_real(arg.substr(comma + 1), "tail mass");
    FieldSpec spec = FieldSpec::thermal(nbar, eps);
    spec.max_photons();  // validates
    return spec;
  }
  throw ConfigurationError("field: unknown kind '" + kind + "'");
}

}  // namespace dtcm
