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

/* C interface to the dtcm library: exact entanglement dynamics of two
 * Bell-like atom pairs distributed over two lossless resonant cavities
 * (double Tavis-Cummings model), with the one-atom-per-cavity double
 * Jaynes-Cummings model as a reference.
 *
 * Every entry point returns a dtcm_status. On failure a message describing
 * the failing field or state is available from dtcm_last_error() on the
 * calling thread. Times are dimensionless (tau = g t); angles in radians.
 */
#ifndef DTCM_DTCM_H
#define DTCM_DTCM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DTCM_BUILDING_LIBRARY)
#    define DTCM_API __declspec(dllexport)
#  else
#    define DTCM_API __declspec(dllimport)
#  endif
#else
#  define DTCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dtcm_status {
  DTCM_OK = 0,
  DTCM_ERR_ARGUMENT = 1,  /* invalid argument (bit, angle, time, buffer) */
  DTCM_ERR_CONFIG = 2,    /* field / scenario cannot be resolved */
  DTCM_ERR_NUMERICAL = 3, /* non-physical state or solver failure */
  DTCM_ERR_INTERNAL = 4
} dtcm_status;

typedef enum dtcm_model { DTCM_MODEL_DTCM = 0, DTCM_MODEL_DJCM = 1 } dtcm_model;

/* PSI: cos(alpha)|10> + sin(alpha)|01>;  PHI: cos(alpha)|11> + sin(alpha)|00> */
typedef enum dtcm_bell { DTCM_BELL_PSI = 0, DTCM_BELL_PHI = 1 } dtcm_bell;

typedef enum dtcm_field_kind {
  DTCM_FIELD_VACUUM = 0,
  DTCM_FIELD_FOCK = 1,
  DTCM_FIELD_THERMAL = 2
} dtcm_field_kind;

typedef struct dtcm_field {
  dtcm_field_kind kind;
  unsigned photons;    /* Fock only */
  double nbar;         /* thermal only: mean photon number */
  double tail_epsilon; /* thermal only: retained weights sum to >= 1 - tail_epsilon; 0 selects 1e-10 */
} dtcm_field;

typedef enum dtcm_pair { DTCM_PAIR_AB = 0, DTCM_PAIR_AC = 1, DTCM_PAIR_BD = 2, DTCM_PAIR_CD = 3 } dtcm_pair;

/* Opaque preparation: model, Bell type and the two cavity fields. */
typedef struct dtcm_scenario dtcm_scenario;

DTCM_API const char* dtcm_version(void);

/* Message for the most recent failure on this thread ("" if none). */
DTCM_API const char* dtcm_last_error(void);

/* Parses "vacuum", "fock:<n>" or "thermal:<nbar>[,<eps>]". */
DTCM_API dtcm_status dtcm_field_parse(const char* text, dtcm_field* out);

DTCM_API dtcm_status dtcm_scenario_create(dtcm_model model, dtcm_bell bell, const dtcm_field* field_a,
                                          const dtcm_field* field_b, dtcm_scenario** out);
DTCM_API void dtcm_scenario_destroy(dtcm_scenario* scenario);

/* Reduced atomic density matrix at (alpha, tau), both pairs prepared at
 * alpha. Writes dim*dim complex entries row-major as interleaved (re, im)
 * into `entries` (capacity in doubles: 2*256 suffices), labels A,B,C,D
 * (DTCM, dim 16) or A,B (DJCM, dim 4). */
DTCM_API dtcm_status dtcm_atomic_state(const dtcm_scenario* scenario, double alpha, double tau, double* entries,
                                       size_t capacity, size_t* dim);

DTCM_API dtcm_status dtcm_concurrence(const dtcm_scenario* scenario, dtcm_pair pair, double alpha, double tau,
                                      double* out);

/* Concurrence over an (alpha, tau) grid for several pairs. `out` holds
 * n_alpha * n_pairs * n_tau values laid out [alpha][pair][tau]. threads = 0
 * uses all hardware threads; the result does not depend on it. */
DTCM_API dtcm_status dtcm_sweep(const dtcm_scenario* scenario, const dtcm_pair* pairs, size_t n_pairs,
                                const double* alphas, size_t n_alpha, const double* taus, size_t n_tau,
                                unsigned threads, double* out);

typedef struct dtcm_events {
  int has_death;
  double death_time;
  int has_revival;
  double revival_time;
  int has_birth;
  double birth_time;
  double zero_interval_length;
  int touch_zero; /* isolated zero shorter than min_zero_points */
} dtcm_events;

/* Sudden death: first run of >= min_zero_points samples below zero_tol after
 * a positive sample. */
DTCM_API dtcm_status dtcm_detect_esd(const double* taus, const double* values, size_t n, double zero_tol,
                                     size_t min_zero_points, dtcm_events* out);

/* Sudden birth in a curve that starts below zero_tol. */
DTCM_API dtcm_status dtcm_detect_esb(const double* taus, const double* values, size_t n, double zero_tol,
                                     dtcm_events* out);

typedef struct dtcm_regime {
  double p_geq;
  double p_less;
  int n_cavities;
  int strong;
  int predicted_esd;
} dtcm_regime;

DTCM_API dtcm_status dtcm_classify_regime(dtcm_model model, dtcm_bell bell, double alpha,
                                          const dtcm_field* field_a, const dtcm_field* field_b, dtcm_regime* out);

/* Interaction-picture amplitude X_{ik,pq}(m, tau). */
DTCM_API dtcm_status dtcm_x_coeff(int i, int k, int p, int q, int m, double tau, double* re, double* im);

typedef enum dtcm_verify_level { DTCM_VERIFY_QUICK = 0, DTCM_VERIFY_FULL = 1 } dtcm_verify_level;

/* Fault injection for checking the verifier itself. */
#define DTCM_VERIFY_INJECT_X_FAULT 1u

typedef void (*dtcm_report_fn)(const char* suite, double max_deviation, double tolerance, int passed,
                               double seconds, const char* detail, void* user);

/* Runs the invariant suites; *all_passed is set to 1 when every suite met
 * its tolerance. */
DTCM_API dtcm_status dtcm_verify(dtcm_verify_level level, unsigned flags, dtcm_report_fn report, void* user,
                                 int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* DTCM_DTCM_H */
