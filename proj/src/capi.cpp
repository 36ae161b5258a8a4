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


#include "dtcm/dtcm.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "dynamics.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "fields.hpp"
#include "verify.hpp"

struct dtcm_scenario {
  dtcm::Scenario scenario;
};

namespace {

thread_local std::string g_last_error;

dtcm_status fail(dtcm_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
dtcm_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DTCM_OK;
  } catch (const dtcm::ArgumentError& e) {
    return fail(DTCM_ERR_ARGUMENT, e.what());
  } catch (const dtcm::ConfigurationError& e) {
    return fail(DTCM_ERR_CONFIG, e.what());
  } catch (const dtcm::NumericalError& e) {
    return fail(DTCM_ERR_NUMERICAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DTCM_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DTCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DTCM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DTCM_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw dtcm::ArgumentError(message);
}

dtcm::FieldSpec to_field(const dtcm_field* field) {
  require(field != nullptr, "field must not be null");
  switch (field->kind) {
    case DTCM_FIELD_VACUUM:
      return dtcm::FieldSpec::vacuum();
    case DTCM_FIELD_FOCK:
      return dtcm::FieldSpec::fock(field->photons);
    case DTCM_FIELD_THERMAL: {
      const double eps = field->tail_epsilon == 0.0 ? dtcm::FieldSpec::kDefaultTailMass : field->tail_epsilon;
      auto spec = dtcm::FieldSpec::thermal(field->nbar, eps);
      spec.max_photons();  // surfaces unresolvable truncations here
      return spec;
    }
  }
  throw dtcm::ArgumentError("unknown field kind " + std::to_string(static_cast<int>(field->kind)));
}

dtcm_field from_field(const dtcm::FieldSpec& spec) {
  dtcm_field out{};
  switch (spec.kind()) {
    case dtcm::FieldSpec::Kind::Vacuum:
      out.kind = DTCM_FIELD_VACUUM;
      break;
    case dtcm::FieldSpec::Kind::Fock:
      out.kind = DTCM_FIELD_FOCK;
      out.photons = spec.photons();
      break;
    case dtcm::FieldSpec::Kind::Thermal:
      out.kind = DTCM_FIELD_THERMAL;
      out.nbar = spec.mean_photons();
      out.tail_epsilon = spec.tail_mass_epsilon();
      break;
  }
  return out;
}

dtcm::Model to_model(dtcm_model model) {
  if (model == DTCM_MODEL_DTCM) return dtcm::Model::Dtcm;
  if (model == DTCM_MODEL_DJCM) return dtcm::Model::Djcm;
  throw dtcm::ArgumentError("unknown model " + std::to_string(static_cast<int>(model)));
}

dtcm::BellType to_bell(dtcm_bell bell) {
  if (bell == DTCM_BELL_PSI) return dtcm::BellType::Psi;
  if (bell == DTCM_BELL_PHI) return dtcm::BellType::Phi;
  throw dtcm::ArgumentError("unknown Bell type " + std::to_string(static_cast<int>(bell)));
}

dtcm::AtomPair to_pair(dtcm_pair pair) {
  switch (pair) {
    case DTCM_PAIR_AB:
      return dtcm::AtomPair::AB;
    case DTCM_PAIR_AC:
      return dtcm::AtomPair::AC;
    case DTCM_PAIR_BD:
      return dtcm::AtomPair::BD;
    case DTCM_PAIR_CD:
      return dtcm::AtomPair::CD;
  }
  throw dtcm::ArgumentError("unknown pair " + std::to_string(static_cast<int>(pair)));
}

void fill_events(const dtcm::EsdEvents& events, dtcm_events* out) {
  *out = dtcm_events{};
  out->has_death = events.death_time.has_value();
  out->death_time = events.death_time.value_or(0.0);
  out->has_revival = events.revival_time.has_value();
  out->revival_time = events.revival_time.value_or(0.0);
  out->has_birth = events.birth_time.has_value();
  out->birth_time = events.birth_time.value_or(0.0);
  out->zero_interval_length = events.zero_interval_length;
  out->touch_zero = events.touch_zero;
}

dtcm::ConcurrenceCurve to_curve(const double* taus, const double* values, size_t n) {
  require(taus != nullptr && values != nullptr, "curve buffers must not be null");
  dtcm::ConcurrenceCurve curve;
  curve.tau_grid.assign(taus, taus + n);
  curve.values.assign(values, values + n);
  return curve;
}

}  // namespace

extern "C" {

const char* dtcm_version(void) { return DTCM_VERSION_STRING; }

const char* dtcm_last_error(void) { return g_last_error.c_str(); }

dtcm_status dtcm_field_parse(const char* text, dtcm_field* out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text and out must not be null");
    *out = from_field(dtcm::parse_field(text));
  });
}

dtcm_status dtcm_scenario_create(dtcm_model model, dtcm_bell bell, const dtcm_field* field_a,
                                 const dtcm_field* field_b, dtcm_scenario** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = nullptr;
    dtcm::Scenario scenario{to_model(model), to_bell(bell), to_field(field_a), to_field(field_b)};
    *out = new dtcm_scenario{scenario};
  });
}

void dtcm_scenario_destroy(dtcm_scenario* scenario) { delete scenario; }

dtcm_status dtcm_atomic_state(const dtcm_scenario* scenario, double alpha, double tau, double* entries,
                              size_t capacity, size_t* dim) {
  return guarded([&] {
    require(scenario != nullptr && entries != nullptr && dim != nullptr, "arguments must not be null");
    const auto state = dtcm::scenario_state(scenario->scenario, alpha, tau);
    const auto& m = state.matrix();
    const auto n = static_cast<size_t>(m.rows());
    require(capacity >= 2 * n * n, "entries buffer too small");
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        const auto v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        entries[2 * (r * n + c)] = v.real();
        entries[2 * (r * n + c) + 1] = v.imag();
      }
    }
    *dim = n;
  });
}

dtcm_status dtcm_concurrence(const dtcm_scenario* scenario, dtcm_pair pair, double alpha, double tau, double* out) {
  return guarded([&] {
    require(scenario != nullptr && out != nullptr, "arguments must not be null");
    *out = dtcm::pair_concurrence(scenario->scenario, to_pair(pair), alpha, tau);
  });
}

dtcm_status dtcm_sweep(const dtcm_scenario* scenario, const dtcm_pair* pairs, size_t n_pairs, const double* alphas,
                       size_t n_alpha, const double* taus, size_t n_tau, unsigned threads, double* out) {
  return guarded([&] {
    require(scenario != nullptr && out != nullptr, "arguments must not be null");
    require(n_pairs > 0 && pairs != nullptr, "at least one pair is required");
    require(n_alpha > 0 && alphas != nullptr, "at least one alpha is required");
    require(n_tau > 0 && taus != nullptr, "at least one tau is required");
    std::vector<dtcm::AtomPair> pair_list;
    for (size_t p = 0; p < n_pairs; ++p) pair_list.push_back(to_pair(pairs[p]));
    dtcm::SweepOptions options;
    options.threads = threads;
    const auto curves = dtcm::sweep_concurrence(scenario->scenario, pair_list, {alphas, n_alpha}, {taus, n_tau}, options);
    for (size_t c = 0; c < curves.size(); ++c) {
      std::memcpy(out + c * n_tau, curves[c].values.data(), n_tau * sizeof(double));
    }
  });
}

dtcm_status dtcm_detect_esd(const double* taus, const double* values, size_t n, double zero_tol,
                            size_t min_zero_points, dtcm_events* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    fill_events(dtcm::detect_esd(to_curve(taus, values, n), zero_tol, min_zero_points), out);
  });
}

dtcm_status dtcm_detect_esb(const double* taus, const double* values, size_t n, double zero_tol, dtcm_events* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    fill_events(dtcm::detect_esb(to_curve(taus, values, n), zero_tol), out);
  });
}

dtcm_status dtcm_classify_regime(dtcm_model model, dtcm_bell bell, double alpha, const dtcm_field* field_a,
                                 const dtcm_field* field_b, dtcm_regime* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    const auto report =
        dtcm::classify_regime(to_bell(bell), alpha, to_model(model), to_field(field_a), to_field(field_b));
    out->p_geq = report.p_geq;
    out->p_less = report.p_less;
    out->n_cavities = report.n_cavities;
    out->strong = report.verdict == dtcm::Verdict::Strong;
    out->predicted_esd = report.predicted_esd;
  });
}

dtcm_status dtcm_x_coeff(int i, int k, int p, int q, int m, double tau, double* re, double* im) {
  return guarded([&] {
    require(re != nullptr && im != nullptr, "outputs must not be null");
    const auto x = dtcm::x_coeff({i, k, p, q, m, tau});
    *re = x.real();
    *im = x.imag();
  });
}

dtcm_status dtcm_verify(dtcm_verify_level level, unsigned flags, dtcm_report_fn report, void* user,
                        int* all_passed) {
  return guarded([&] {
    require(all_passed != nullptr, "all_passed must not be null");
    require(level == DTCM_VERIFY_QUICK || level == DTCM_VERIFY_FULL, "unknown verify level");
    dtcm::VerifyOptions options;
    options.level = level == DTCM_VERIFY_FULL ? dtcm::VerifyLevel::Full : dtcm::VerifyLevel::Quick;
    if (flags & DTCM_VERIFY_INJECT_X_FAULT) options.x_coefficient = dtcm::tampered_x_coeff;
    const auto results = dtcm::run_verification(options, [&](const dtcm::SuiteResult& r) {
      if (report != nullptr) {
        report(r.name.c_str(), r.max_deviation, r.tolerance, r.passed ? 1 : 0, r.seconds, r.detail.c_str(), user);
      }
    });
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
