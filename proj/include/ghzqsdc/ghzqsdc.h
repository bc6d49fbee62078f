// Copyright 2026 The ghzqsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZQSDC_GHZQSDC_H
#define GHZQSDC_GHZQSDC_H

/*
 * C interface to the ghzqsdc simulator: multi-party simultaneous secure direct
 * communication over GHZ states, with intercept-resend and disturbance
 * adversaries and a seeded Monte Carlo harness.
 *
 * All handles are opaque and owned by the caller; release them with the
 * matching *_free function. Strings returned through `const char **` stay
 * valid until the owning handle is freed. Every function that can fail
 * returns a qsdc_status; the message for the most recent failure on the
 * calling thread is available from qsdc_last_error().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GHZQSDC_BUILDING)
#    define GHZQSDC_API __declspec(dllexport)
#  else
#    define GHZQSDC_API __declspec(dllimport)
#  endif
#else
#  define GHZQSDC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsdc_status {
    QSDC_OK = 0,
    QSDC_E_INVALID_ARGUMENT = 1, /* null handle, bad parameter */
    QSDC_E_CONFIG = 2,           /* config document rejected */
    QSDC_E_IO = 3,               /* file could not be read or written */
    QSDC_E_PROTOCOL = 4,         /* simulator invariant or decoding failure */
    QSDC_E_INTERNAL = 5
} qsdc_status;

typedef enum qsdc_session_status {
    QSDC_SESSION_COMPLETED = 0,
    QSDC_SESSION_ABORTED_CHECK = 1,
    QSDC_SESSION_ABORTED_REVEAL = 2,
    QSDC_SESSION_ABORTED_CHANNEL = 3
} qsdc_session_status;

typedef struct qsdc_experiment qsdc_experiment;
typedef struct qsdc_session qsdc_session;
typedef struct qsdc_table qsdc_table;

typedef struct qsdc_stats_record {
    const char *metric;
    double estimate;
    double std_error;
    uint64_t trials;
    const char *config_digest;
    uint64_t seed;
    const char *sweep_parameter; /* NULL when not part of a sweep */
    double sweep_value;
} qsdc_stats_record;

GHZQSDC_API const char *qsdc_version(void);
GHZQSDC_API const char *qsdc_last_error(void);
/* Description of the config file format. */
GHZQSDC_API const char *qsdc_config_schema(void);

/* ---- experiments ------------------------------------------------------ */

GHZQSDC_API qsdc_status qsdc_experiment_from_json(const char *json_text, qsdc_experiment **out);
GHZQSDC_API qsdc_status qsdc_experiment_from_file(const char *path, qsdc_experiment **out);
GHZQSDC_API void qsdc_experiment_free(qsdc_experiment *exp);

GHZQSDC_API qsdc_status qsdc_experiment_set_seed(qsdc_experiment *exp, uint64_t seed);
GHZQSDC_API qsdc_status qsdc_experiment_set_trials(qsdc_experiment *exp, uint64_t trials);
GHZQSDC_API qsdc_status qsdc_experiment_get_seed(const qsdc_experiment *exp, uint64_t *out);
GHZQSDC_API qsdc_status qsdc_experiment_digest(const qsdc_experiment *exp, const char **out);
/* Output paths from the config's "output" block; "" when unset. which is
 * one of "stats", "trials", "transcript". */
GHZQSDC_API qsdc_status qsdc_experiment_output_path(const qsdc_experiment *exp, const char *which, const char **out);
/* Sweep from the config's "sweep" block. *values is owned by exp. */
GHZQSDC_API qsdc_status qsdc_experiment_sweep(const qsdc_experiment *exp, const char **parameter,
                                              const double **values, size_t *count);

/* ---- single session ---------------------------------------------------- */

GHZQSDC_API qsdc_status qsdc_session_run(const qsdc_experiment *exp, qsdc_session **out);
GHZQSDC_API void qsdc_session_free(qsdc_session *session);

GHZQSDC_API qsdc_status qsdc_session_get_status(const qsdc_session *session, qsdc_session_status *out);
GHZQSDC_API qsdc_status qsdc_session_check_error_rate(const qsdc_session *session, double *out);
/* Human-readable summary: announcements and every party's decoded view. */
GHZQSDC_API qsdc_status qsdc_session_summary(const qsdc_session *session, const char **out);
/* Full result record (JSON), including Eve's report when an adversary ran. */
GHZQSDC_API qsdc_status qsdc_session_result_json(const qsdc_session *session, const char **out);
/* Line-delimited transcript, one JSON event per line. */
GHZQSDC_API qsdc_status qsdc_session_transcript(const qsdc_session *session, const char **out);
/* Bits party `party` of the session decoded for party `sender`, as a 0/1
 * string; "" for party == sender or when readout never happened. Undecodable
 * positions are reported as '?'. */
GHZQSDC_API qsdc_status qsdc_session_decoded(const qsdc_session *session, uint32_t viewer, uint32_t sender,
                                             const char **out);

/* ---- Monte Carlo ------------------------------------------------------- */

GHZQSDC_API qsdc_status qsdc_stats_run(const qsdc_experiment *exp, qsdc_table **out);
/* parameter is one of M, p, rho, trials. */
GHZQSDC_API qsdc_status qsdc_sweep_run(const qsdc_experiment *exp, const char *parameter, const double *values,
                                       size_t count, qsdc_table **out);
GHZQSDC_API void qsdc_table_free(qsdc_table *table);

GHZQSDC_API qsdc_status qsdc_table_size(const qsdc_table *table, size_t *out);
GHZQSDC_API qsdc_status qsdc_table_record(const qsdc_table *table, size_t index, qsdc_stats_record *out);
GHZQSDC_API qsdc_status qsdc_table_csv(const qsdc_table *table, const char **out);
GHZQSDC_API qsdc_status qsdc_table_trials_jsonl(const qsdc_table *table, const char **out);
/* Writes the aggregate CSV and, when trials_path is non-NULL, the per-trial records. */
GHZQSDC_API qsdc_status qsdc_table_write(const qsdc_table *table, const char *csv_path, const char *trials_path);
/* Number of trials that ended in any abort. */
GHZQSDC_API qsdc_status qsdc_table_aborted_trials(const qsdc_table *table, uint64_t *out);

/* ---- misc -------------------------------------------------------------- */

GHZQSDC_API qsdc_status qsdc_write_text(const char *path, const char *text);
/* Runs the built-in invariant suite. *report is one "PASS|FAIL name detail"
 * line per check and must be released with qsdc_string_free. */
GHZQSDC_API qsdc_status qsdc_selftest(char **report, int *all_passed);
GHZQSDC_API void qsdc_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
