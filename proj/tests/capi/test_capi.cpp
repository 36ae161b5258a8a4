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


// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "dtcm/dtcm.h"

namespace {

const double kPi = std::acos(-1.0);

dtcm_field vacuum() {
  dtcm_field f{};
  f.kind = DTCM_FIELD_VACUUM;
  return f;
}

dtcm_field fock(unsigned n) {
  dtcm_field f{};
  f.kind = DTCM_FIELD_FOCK;
  f.photons = n;
  return f;
}

struct Scenario {
  dtcm_scenario* handle = nullptr;
  Scenario(dtcm_model model, dtcm_bell bell, dtcm_field fa, dtcm_field fb) {
    REQUIRE(dtcm_scenario_create(model, bell, &fa, &fb, &handle) == DTCM_OK);
  }
  ~Scenario() { dtcm_scenario_destroy(handle); }
};

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::strlen(dtcm_version()) > 0);
  double re = 0.0, im = 0.0;
  CHECK(dtcm_x_coeff(3, 0, 0, 0, 1, 0.1, &re, &im) == DTCM_ERR_ARGUMENT);
  CHECK(std::string(dtcm_last_error()).size() > 0);
  CHECK(dtcm_x_coeff(1, 1, 1, 1, 0, kPi / std::sqrt(6.0), &re, &im) == DTCM_OK);
  CHECK(std::string(dtcm_last_error()).empty());
  CHECK(re == doctest::Approx(-2.0 * std::sqrt(2.0) / 3.0));
  CHECK(dtcm_x_coeff(0, 0, 0, 0, 0, 1.0, nullptr, &im) == DTCM_ERR_ARGUMENT);
}

TEST_CASE("field parsing") {
  dtcm_field f{};
  REQUIRE(dtcm_field_parse("thermal:1,1e-13", &f) == DTCM_OK);
  CHECK(f.kind == DTCM_FIELD_THERMAL);
  CHECK(f.nbar == 1.0);
  CHECK(f.tail_epsilon == 1e-13);
  REQUIRE(dtcm_field_parse("fock:4", &f) == DTCM_OK);
  CHECK(f.photons == 4u);
  CHECK(dtcm_field_parse("coherent:2", &f) == DTCM_ERR_CONFIG);
  CHECK(dtcm_field_parse(nullptr, &f) == DTCM_ERR_ARGUMENT);
}

TEST_CASE("scenario creation errors") {
  dtcm_scenario* s = nullptr;
  dtcm_field bad{};
  bad.kind = DTCM_FIELD_THERMAL;
  bad.nbar = -1.0;
  const dtcm_field vac = vacuum();
  CHECK(dtcm_scenario_create(DTCM_MODEL_DTCM, DTCM_BELL_PSI, &bad, &vac, &s) == DTCM_ERR_CONFIG);
  CHECK(s == nullptr);
  CHECK(dtcm_scenario_create(static_cast<dtcm_model>(7), DTCM_BELL_PSI, &vac, &vac, &s) == DTCM_ERR_ARGUMENT);
  CHECK(dtcm_scenario_create(DTCM_MODEL_DTCM, DTCM_BELL_PSI, nullptr, &vac, &s) == DTCM_ERR_ARGUMENT);
  dtcm_scenario_destroy(nullptr);
}

TEST_CASE("atomic state and concurrence") {
  Scenario s(DTCM_MODEL_DTCM, DTCM_BELL_PSI, vacuum(), vacuum());
  std::vector<double> entries(2 * 256);
  std::size_t dim = 0;
  REQUIRE(dtcm_atomic_state(s.handle, kPi / 4, 0.0, entries.data(), entries.size(), &dim) == DTCM_OK);
  CHECK(dim == 16);
  double trace = 0.0;
  for (std::size_t k = 0; k < dim; ++k) trace += entries[2 * (k * dim + k)];
  CHECK(trace == doctest::Approx(1.0));
  // |0101><0101| (A=0, B=1, C=0, D=1) carries sin^4 = 1/4
  CHECK(entries[2 * (5 * dim + 5)] == doctest::Approx(0.25));
  CHECK(dtcm_atomic_state(s.handle, kPi / 4, 0.0, entries.data(), 100, &dim) == DTCM_ERR_ARGUMENT);
  CHECK(dtcm_atomic_state(s.handle, 2.0, 0.0, entries.data(), entries.size(), &dim) == DTCM_ERR_ARGUMENT);

  double c = -1.0;
  REQUIRE(dtcm_concurrence(s.handle, DTCM_PAIR_AB, kPi / 4, 0.0, &c) == DTCM_OK);
  CHECK(c == doctest::Approx(1.0));
  REQUIRE(dtcm_concurrence(s.handle, DTCM_PAIR_AC, kPi / 4, 0.0, &c) == DTCM_OK);
  CHECK(c == 0.0);

  Scenario djcm(DTCM_MODEL_DJCM, DTCM_BELL_PSI, vacuum(), vacuum());
  REQUIRE(dtcm_atomic_state(djcm.handle, 0.3, 1.0, entries.data(), entries.size(), &dim) == DTCM_OK);
  CHECK(dim == 4);
  CHECK(dtcm_concurrence(djcm.handle, DTCM_PAIR_BD, 0.3, 1.0, &c) == DTCM_ERR_ARGUMENT);
}

TEST_CASE("sweep layout and thread independence") {
  Scenario s(DTCM_MODEL_DTCM, DTCM_BELL_PSI, fock(1), fock(1));
  const dtcm_pair pairs[] = {DTCM_PAIR_AB, DTCM_PAIR_BD};
  const double alphas[] = {0.0, 0.3, kPi / 4};
  std::vector<double> taus;
  for (int k = 0; k < 40; ++k) taus.push_back(0.1 * k);
  std::vector<double> one(3 * 2 * taus.size()), many(one.size());
  REQUIRE(dtcm_sweep(s.handle, pairs, 2, alphas, 3, taus.data(), taus.size(), 1, one.data()) == DTCM_OK);
  REQUIRE(dtcm_sweep(s.handle, pairs, 2, alphas, 3, taus.data(), taus.size(), 0, many.data()) == DTCM_OK);
  CHECK(one == many);
  double c = 0.0;
  REQUIRE(dtcm_concurrence(s.handle, DTCM_PAIR_BD, alphas[1], taus[7], &c) == DTCM_OK);
  CHECK(one[(1 * 2 + 1) * taus.size() + 7] == c);
  CHECK(dtcm_sweep(s.handle, pairs, 0, alphas, 3, taus.data(), taus.size(), 1, one.data()) == DTCM_ERR_ARGUMENT);
}

TEST_CASE("event detection") {
  const double taus[] = {0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06};
  const double values[] = {0.5, 0.2, 0.0, 0.0, 0.0, 0.1, 0.3};
  dtcm_events e{};
  REQUIRE(dtcm_detect_esd(taus, values, 7, 1e-9, 3, &e) == DTCM_OK);
  CHECK(e.has_death == 1);
  CHECK(e.death_time == doctest::Approx(0.02));
  CHECK(e.has_revival == 1);
  CHECK(e.revival_time == doctest::Approx(0.05));
  CHECK(dtcm_detect_esd(taus, values, 2, 1e-9, 3, &e) == DTCM_ERR_ARGUMENT);

  const double birth[] = {0.0, 0.0, 0.0, 0.2, 0.3, 0.3, 0.3};
  REQUIRE(dtcm_detect_esb(taus, birth, 7, 1e-9, &e) == DTCM_OK);
  CHECK(e.has_birth == 1);
  CHECK(e.birth_time == doctest::Approx(0.02));
}

TEST_CASE("regime classification") {
  dtcm_regime r{};
  const dtcm_field vac = vacuum();
  REQUIRE(dtcm_classify_regime(DTCM_MODEL_DTCM, DTCM_BELL_PHI, kPi / 2, &vac, &vac, &r) == DTCM_OK);
  CHECK(r.strong == 0);
  CHECK(r.p_less == doctest::Approx(1.0));
  REQUIRE(dtcm_classify_regime(DTCM_MODEL_DJCM, DTCM_BELL_PHI, 0.3, &vac, &vac, &r) == DTCM_OK);
  CHECK(r.predicted_esd == 1);
  CHECK(r.n_cavities == 1);
}

TEST_CASE("verification through the callback") {
  struct Log {
    std::vector<std::string> names;
    int failures = 0;
  } log;
  auto report = [](const char* suite, double, double, int passed, double, const char*, void* user) {
    auto* l = static_cast<Log*>(user);
    l->names.emplace_back(suite);
    if (!passed) ++l->failures;
  };
  int all = -1;
  REQUIRE(dtcm_verify(DTCM_VERIFY_QUICK, 0, report, &log, &all) == DTCM_OK);
  CHECK(all == 1);
  CHECK(log.failures == 0);
  CHECK(log.names.front() == "normalization");

  Log tampered;
  REQUIRE(dtcm_verify(DTCM_VERIFY_QUICK, DTCM_VERIFY_INJECT_X_FAULT, report, &tampered, &all) == DTCM_OK);
  CHECK(all == 0);
  CHECK(tampered.failures > 0);
}
