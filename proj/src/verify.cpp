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

#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "analysis.hpp"
#include "entanglement.hpp"
#include "oracle.hpp"

namespace dtcm {
namespace {

using std::numbers::pi;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

template <class Body>
SuiteResult run_suite(const std::string& name, double tolerance, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.name = name;
  result.tolerance = tolerance;
  try {
    result.max_deviation = body(result);
    result.passed = result.max_deviation <= tolerance;
  } catch (const std::exception& e) {
    result.passed = false;
    result.max_deviation = INFINITY;
    result.detail = e.what();
  }
  if (!result.passed && result.detail.empty()) result.detail = "max deviation " + format_double(result.max_deviation);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double normalization_suite(const XCoefficientFn& x) {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> time(0.0, 20.0);
  std::vector<double> taus(200);
  for (double& t : taus) t = time(rng);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int m = 0; m <= 50; ++m)
        for (double tau : taus) {
          double sum = 0.0;
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) sum += std::norm(x({i, k, p, q, m, tau}));
          worst = std::max(worst, std::abs(sum - 1.0));
        }
  return worst;
}

double map_equivalence_suite() {
  const FieldSpec fields[] = {FieldSpec::vacuum(), FieldSpec::fock(1), FieldSpec::fock(3), FieldSpec::thermal(1.0)};
  const auto taus = linspace(0.0, 12.0, 50);
  double worst = 0.0;
  for (const auto& field : fields) {
    const auto weights = field.weights();
    for (double tau : taus)
      for (int code = 0; code < 16; ++code) {
        const int i = (code >> 3) & 1, k = (code >> 2) & 1, j = (code >> 1) & 1, l = code & 1;
        const auto generic = pair_map(i, k, j, l, weights, tau);
        const auto explicit_form = pair_map_explicit(i, k, j, l, weights, tau);
        worst = std::max(worst, (generic - explicit_form).cwiseAbs().maxCoeff());
      }
  }
  return worst;
}

double oracle_amplitude_suite(const XCoefficientFn& x, VerifyLevel level) {
  const int max_m = level == VerifyLevel::Quick ? 4 : 10;
  const oracle::TruncatedHamiltonian h(max_m + 3, 2);
  const oracle::Propagator propagator(h);
  const auto taus = linspace(0.0, 9.0, level == VerifyLevel::Quick ? 7 : 25);
  double worst = 0.0;
  for (double tau : taus) {
    const Matrix u = propagator.unitary(tau);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m <= max_m; ++m)
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
              const int target = target_photons(i, k, p, q, m);
              const Complex expected = x({i, k, p, q, m, tau});
              const Complex actual =
                  target < 0 ? Complex{} : u(h.index(2 * (i ^ p) + (k ^ q), target), h.index(2 * i + k, m));
              worst = std::max(worst, std::abs(expected - actual));
            }
  }
  return worst;
}

double oracle_state_suite(const std::vector<Scenario>& scenarios, std::span<const double> alphas,
                          std::span<const double> taus) {
  double worst = 0.0;
  for (const auto& s : scenarios) {
    const int n_max = std::max({6, oracle::required_cutoff(s.field_a), oracle::required_cutoff(s.field_b)});
    const auto dev = oracle::compare_pipelines(s, alphas, taus, n_max);
    worst = std::max({worst, dev.max_state_deviation, dev.max_concurrence_deviation});
  }
  return worst;
}

std::vector<Scenario> homogeneous_scenarios(std::initializer_list<FieldSpec> fields, bool with_djcm) {
  std::vector<Scenario> out;
  for (const auto& f : fields)
    for (BellType b : {BellType::Psi, BellType::Phi}) {
      out.push_back({Model::Dtcm, b, f, f});
      if (with_djcm) out.push_back({Model::Djcm, b, f, f});
    }
  return out;
}

double symmetry_suite(VerifyLevel level) {
  const std::size_t n = level == VerifyLevel::Quick ? 10 : 20;
  const auto alphas = linspace(0.0, pi / 2, n);
  const auto taus = linspace(0.0, 10.0, n);
  std::vector<double> mirrored(alphas.rbegin(), alphas.rend());
  mirrored.front() = pi / 2;
  mirrored.back() = 0.0;
  double worst = 0.0;
  for (const auto& s : homogeneous_scenarios({FieldSpec::vacuum(), FieldSpec::fock(1)}, false)) {
    const AtomPair pairs[] = {AtomPair::AB, AtomPair::CD, AtomPair::AC, AtomPair::BD};
    const auto direct = sweep_concurrence(s, pairs, alphas, taus);
    const auto flipped = sweep_concurrence(s, pairs, mirrored, taus);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t t = 0; t < n; ++t) {
        worst = std::max(worst, std::abs(direct[4 * a + 0].values[t] - direct[4 * a + 1].values[t]));
        // alpha -> alpha + pi/2 equals alpha -> pi/2 - alpha up to local phases.
        if (s.bell == BellType::Psi)
          worst = std::max(worst, std::abs(direct[4 * a + 2].values[t] - flipped[4 * a + 3].values[t]));
      }
  }
  return worst;
}

double concurrence_path_suite(VerifyLevel level, SuiteResult& result) {
  const auto alphas = linspace(0.0, pi / 2, level == VerifyLevel::Quick ? 6 : 12);
  const auto taus = linspace(0.0, 12.0, level == VerifyLevel::Quick ? 40 : 120);
  double worst = 0.0;
  std::size_t states = 0;
  for (const auto& s : homogeneous_scenarios({FieldSpec::vacuum(), FieldSpec::fock(1), FieldSpec::thermal(1.0)}, true)) {
    std::vector<AtomPair> pairs{AtomPair::AB};
    if (s.model == Model::Dtcm) pairs = {AtomPair::AB, AtomPair::AC, AtomPair::BD, AtomPair::CD};
    for (double a : alphas)
      for (double t : taus) {
        const DensityMatrix state = scenario_state(s, a, t);
        for (AtomPair p : pairs) {
          const auto keep = pair_qubits(p);
          const Matrix reduced = partial_trace(state, keep).matrix();
          const auto x = is_x_form(reduced, 1e-10);
          if (!x) return INFINITY;
          worst = std::max(worst, std::abs(concurrence_x(*x) - concurrence_general(reduced)));
          ++states;
        }
      }
  }
  result.detail = std::to_string(states) + " reduced states";
  return worst;
}

}  // namespace

Complex tampered_x_coeff(const XCoefficientKey& key) {
  if (key.i != key.k && key.p == 0 && key.q == 0) {
    const double m = key.m;
    return 0.5 * (std::cos(std::sqrt(2.0 * (2.0 * m + 1.0)) * key.tau) - 1.0);
  }
  return x_coeff(key);
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SuiteResult&)>& on_suite) {
  std::vector<SuiteResult> results;
  auto add = [&](SuiteResult r) {
    if (on_suite) on_suite(r);
    results.push_back(std::move(r));
  };
  const VerifyLevel level = options.level;

  add(run_suite("normalization", 1e-12, [&](SuiteResult&) { return normalization_suite(options.x_coefficient); }));
  add(run_suite("map-equivalence", 1e-12, [&](SuiteResult&) { return map_equivalence_suite(); }));
  add(run_suite("oracle-amplitudes", 1e-10,
                [&](SuiteResult&) { return oracle_amplitude_suite(options.x_coefficient, level); }));

  const std::vector<double> alphas{0.0, pi / 8, pi / 4, 3 * pi / 8};
  const auto taus = linspace(0.0, 10.0, level == VerifyLevel::Quick ? 5 : 20);
  add(run_suite("oracle-states", 1e-8, [&](SuiteResult& r) {
    const auto scenarios = homogeneous_scenarios({FieldSpec::vacuum(), FieldSpec::fock(1)}, true);
    r.detail = std::to_string(scenarios.size()) + " scenarios";
    return oracle_state_suite(scenarios, alphas, taus);
  }));
  if (level == VerifyLevel::Full) {
    add(run_suite("oracle-thermal", 1e-6, [&](SuiteResult& r) {
      const auto scenarios = homogeneous_scenarios({FieldSpec::thermal(0.1), FieldSpec::thermal(1.0)}, true);
      r.detail = std::to_string(scenarios.size()) + " scenarios";
      return oracle_state_suite(scenarios, alphas, linspace(0.0, 10.0, 5));
    }));
  }
  add(run_suite("symmetry", 1e-10, [&](SuiteResult&) { return symmetry_suite(level); }));
  add(run_suite("concurrence-paths", 1e-9, [&](SuiteResult& r) { return concurrence_path_suite(level, r); }));
  return results;
}

}  // namespace dtcm
