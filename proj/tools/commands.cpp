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


#include "commands.hpp"

#include <cstdio>
#include <memory>
#include <string>

namespace dtcm_cli {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check(dtcm_status status, const std::string& what) {
  if (status == DTCM_OK) return;
  const std::string message = what + ": " + dtcm_last_error();
  if (status == DTCM_ERR_ARGUMENT || status == DTCM_ERR_CONFIG) throw ConfigError(message);
  throw NumericalFailure(message);
}

dtcm_field field_of(const std::string& key, const std::string& text) {
  dtcm_field field{};
  check(dtcm_field_parse(text.c_str(), &field), key);
  return field;
}

struct ScenarioDeleter {
  void operator()(dtcm_scenario* s) const { dtcm_scenario_destroy(s); }
};

}  // namespace

SweepData run_sweep(const ScenarioConfig& config, unsigned threads) {
  if (config.pairs.empty()) throw ConfigError("pairs: list is empty");
  SweepData data;
  data.alphas = config.alpha.points();
  data.taus = config.tau.points();
  data.pairs = config.pairs;
  if (data.alphas.empty()) throw ConfigError("alpha: no values");

  const dtcm_field fa = field_of("field_a", config.field_a);
  const dtcm_field fb = field_of("field_b", config.field_b);
  dtcm_scenario* raw = nullptr;
  check(dtcm_scenario_create(config.model, config.bell, &fa, &fb, &raw), "scenario");
  std::unique_ptr<dtcm_scenario, ScenarioDeleter> scenario(raw);

  data.values.resize(data.alphas.size() * data.pairs.size() * data.taus.size());
  check(dtcm_sweep(scenario.get(), data.pairs.data(), data.pairs.size(), data.alphas.data(), data.alphas.size(),
                   data.taus.data(), data.taus.size(), threads, data.values.data()),
        "sweep");
  return data;
}

void write_simulate(const ScenarioConfig& config, unsigned threads, std::ostream& out) {
  const auto data = run_sweep(config, threads);
  out << "tau,alpha,pair,concurrence\n";
  for (std::size_t a = 0; a < data.alphas.size(); ++a)
    for (std::size_t t = 0; t < data.taus.size(); ++t)
      for (std::size_t p = 0; p < data.pairs.size(); ++p)
        out << num(data.taus[t]) << ',' << num(data.alphas[a]) << ',' << pair_label(data.pairs[p]) << ','
            << num(data.at(a, p, t)) << '\n';
}

void write_events(const ScenarioConfig& config, unsigned threads, std::ostream& out) {
  const auto data = run_sweep(config, threads);
  out << "alpha,pair,death_time,revival_time,birth_time\n";
  const std::size_t n = data.taus.size();
  for (std::size_t a = 0; a < data.alphas.size(); ++a) {
    for (std::size_t p = 0; p < data.pairs.size(); ++p) {
      const double* curve = data.values.data() + (a * data.pairs.size() + p) * n;
      dtcm_events esd{};
      dtcm_events esb{};
      check(dtcm_detect_esd(data.taus.data(), curve, n, config.zero_tol, config.min_zero_points, &esd), "events");
      check(dtcm_detect_esb(data.taus.data(), curve, n, config.zero_tol, &esb), "events");
      out << num(data.alphas[a]) << ',' << pair_label(data.pairs[p]) << ',' << (esd.has_death ? num(esd.death_time) : "")
          << ',' << (esd.has_revival ? num(esd.revival_time) : "") << ','
          << (esb.has_birth ? num(esb.birth_time) : "") << '\n';
    }
  }
}

void write_plotdata(const ScenarioConfig& config, unsigned threads, std::ostream& out) {
  const auto data = run_sweep(config, threads);
  for (std::size_t p = 0; p < data.pairs.size(); ++p) {
    if (p) out << "\n\n";
    out << "# pair " << pair_label(data.pairs[p]) << '\n';
    out << data.taus.size();
    for (double t : data.taus) out << ' ' << num(t);
    out << '\n';
    for (std::size_t a = 0; a < data.alphas.size(); ++a) {
      out << num(data.alphas[a]);
      for (std::size_t t = 0; t < data.taus.size(); ++t) out << ' ' << num(data.at(a, p, t));
      out << '\n';
    }
  }
}

bool run_verify(bool full, bool inject_fault, std::ostream& out) {
  struct Sink {
    std::ostream* out;
  } sink{&out};
  auto report = [](const char* suite, double max_deviation, double tolerance, int passed, double seconds,
                   const char* detail, void* user) {
    auto& os = *static_cast<Sink*>(user)->out;
    char line[256];
    std::snprintf(line, sizeof line, "%-18s max_dev=%-10.3e tol=%-8.1e %s  (%.2f s)", suite, max_deviation, tolerance,
                  passed ? "PASS" : "FAIL", seconds);
    os << line;
    if (!passed && detail != nullptr && *detail != '\0') os << "  " << detail;
    os << std::endl;
  };
  int all_passed = 0;
  check(dtcm_verify(full ? DTCM_VERIFY_FULL : DTCM_VERIFY_QUICK, inject_fault ? DTCM_VERIFY_INJECT_X_FAULT : 0u, report,
                    &sink, &all_passed),
        "verify");
  out << (all_passed ? "verify: all suites passed" : "verify: FAILED") << '\n';
  return all_passed != 0;
}

}  // namespace dtcm_cli
