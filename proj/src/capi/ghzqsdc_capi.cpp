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

#include "ghzqsdc/ghzqsdc.h"

#include <cstdlib>
#include <cstring>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "harness/experiment.hpp"
#include "harness/report.hpp"
#include "harness/selftest.hpp"

struct qsdc_experiment {
    ghzqsdc::ExperimentSpec spec;
    mutable std::string digest;
};

struct qsdc_session {
    ghzqsdc::SessionResult result;
    std::string summary;
    std::string json;
    std::string transcript;
    mutable std::deque<std::string> decoded;  // keeps returned pointers stable
};

struct qsdc_table {
    ghzqsdc::ExperimentResult result;
    std::string csv;
    std::string trials;
};

namespace {

thread_local std::string g_last_error;

qsdc_status fail(qsdc_status code, const std::string &msg) {
    g_last_error = msg;
    return code;
}

qsdc_status from_error(const ghzqsdc::Error &e) {
    using ghzqsdc::ErrorCode;
    switch (e.code()) {
        case ErrorCode::kConfig: return fail(QSDC_E_CONFIG, e.what());
        case ErrorCode::kIo: return fail(QSDC_E_IO, e.what());
        case ErrorCode::kInvalidArgument: return fail(QSDC_E_INVALID_ARGUMENT, e.what());
        case ErrorCode::kInternal: return fail(QSDC_E_INTERNAL, e.what());
        default: return fail(QSDC_E_PROTOCOL, e.what());
    }
}

/// Runs fn, translating exceptions into status codes.
template <typename Fn>
qsdc_status guarded(Fn &&fn) {
    try {
        fn();
        g_last_error.clear();
        return QSDC_OK;
    } catch (const ghzqsdc::Error &e) {
        return from_error(e);
    } catch (const nlohmann::json::exception &e) {
        return fail(QSDC_E_CONFIG, e.what());
    } catch (const std::exception &e) {
        return fail(QSDC_E_INTERNAL, e.what());
    } catch (...) {
        return fail(QSDC_E_INTERNAL, "unknown error");
    }
}

#define QSDC_REQUIRE(cond) \
    if (!(cond)) return fail(QSDC_E_INVALID_ARGUMENT, "null argument: " #cond)

}  // namespace

extern "C" {

const char *qsdc_version(void) { return "1.0.0"; }

const char *qsdc_last_error(void) { return g_last_error.c_str(); }

const char *qsdc_config_schema(void) {
    static const std::string kSchema = ghzqsdc::config_schema_help();
    return kSchema.c_str();
}

qsdc_status qsdc_experiment_from_json(const char *json_text, qsdc_experiment **out) {
    QSDC_REQUIRE(json_text && out);
    return guarded([&] {
        auto spec = ghzqsdc::ExperimentSpec::from_json(nlohmann::json::parse(json_text));
        *out = new qsdc_experiment{std::move(spec), {}};
    });
}

qsdc_status qsdc_experiment_from_file(const char *path, qsdc_experiment **out) {
    QSDC_REQUIRE(path && out);
    return guarded([&] { *out = new qsdc_experiment{ghzqsdc::ExperimentSpec::from_file(path), {}}; });
}

void qsdc_experiment_free(qsdc_experiment *exp) { delete exp; }

qsdc_status qsdc_experiment_set_seed(qsdc_experiment *exp, uint64_t seed) {
    QSDC_REQUIRE(exp);
    exp->spec.session.seed = seed;
    return QSDC_OK;
}

qsdc_status qsdc_experiment_set_trials(qsdc_experiment *exp, uint64_t trials) {
    QSDC_REQUIRE(exp);
    if (trials == 0) return fail(QSDC_E_CONFIG, "trials must be at least 1");
    exp->spec.trials = trials;
    return QSDC_OK;
}

qsdc_status qsdc_experiment_get_seed(const qsdc_experiment *exp, uint64_t *out) {
    QSDC_REQUIRE(exp && out);
    *out = exp->spec.session.seed;
    return QSDC_OK;
}

qsdc_status qsdc_experiment_digest(const qsdc_experiment *exp, const char **out) {
    QSDC_REQUIRE(exp && out);
    return guarded([&] {
        exp->digest = exp->spec.digest();
        *out = exp->digest.c_str();
    });
}

qsdc_status qsdc_experiment_output_path(const qsdc_experiment *exp, const char *which, const char **out) {
    QSDC_REQUIRE(exp && which && out);
    const std::string w = which;
    if (w == "stats") {
        *out = exp->spec.stats_out.c_str();
    } else if (w == "trials") {
        *out = exp->spec.trials_out.c_str();
    } else if (w == "transcript") {
        *out = exp->spec.transcript_out.c_str();
    } else {
        return fail(QSDC_E_INVALID_ARGUMENT, "unknown output kind '" + w + "'");
    }
    return QSDC_OK;
}

qsdc_status qsdc_experiment_sweep(const qsdc_experiment *exp, const char **parameter, const double **values,
                                  size_t *count) {
    QSDC_REQUIRE(exp && parameter && values && count);
    if (!exp->spec.sweep) {
        *parameter = nullptr;
        *values = nullptr;
        *count = 0;
        return QSDC_OK;
    }
    *parameter = exp->spec.sweep->parameter.c_str();
    *values = exp->spec.sweep->values.data();
    *count = exp->spec.sweep->values.size();
    return QSDC_OK;
}

qsdc_status qsdc_session_run(const qsdc_experiment *exp, qsdc_session **out) {
    QSDC_REQUIRE(exp && out);
    return guarded([&] {
        auto s = std::make_unique<qsdc_session>();
        s->result = ghzqsdc::run_single(exp->spec);
        s->summary = ghzqsdc::session_summary(s->result);
        s->json = ghzqsdc::session_result_json(s->result).dump(2);
        s->transcript = s->result.transcript.to_jsonl();
        *out = s.release();
    });
}

void qsdc_session_free(qsdc_session *session) { delete session; }

qsdc_status qsdc_session_get_status(const qsdc_session *session, qsdc_session_status *out) {
    QSDC_REQUIRE(session && out);
    *out = static_cast<qsdc_session_status>(session->result.status);
    return QSDC_OK;
}

qsdc_status qsdc_session_check_error_rate(const qsdc_session *session, double *out) {
    QSDC_REQUIRE(session && out);
    *out = session->result.check.error_rate;
    return QSDC_OK;
}

qsdc_status qsdc_session_summary(const qsdc_session *session, const char **out) {
    QSDC_REQUIRE(session && out);
    *out = session->summary.c_str();
    return QSDC_OK;
}

qsdc_status qsdc_session_result_json(const qsdc_session *session, const char **out) {
    QSDC_REQUIRE(session && out);
    *out = session->json.c_str();
    return QSDC_OK;
}

qsdc_status qsdc_session_transcript(const qsdc_session *session, const char **out) {
    QSDC_REQUIRE(session && out);
    *out = session->transcript.c_str();
    return QSDC_OK;
}

qsdc_status qsdc_session_decoded(const qsdc_session *session, uint32_t viewer, uint32_t sender, const char **out) {
    QSDC_REQUIRE(session && out);
    const auto n = session->result.views.size();
    if (n != 0 && (viewer >= n || sender >= n)) return fail(QSDC_E_INVALID_ARGUMENT, "party index out of range");
    session->decoded.push_back(ghzqsdc::decoded_string(session->result, viewer, sender));
    *out = session->decoded.back().c_str();
    return QSDC_OK;
}

qsdc_status qsdc_stats_run(const qsdc_experiment *exp, qsdc_table **out) {
    QSDC_REQUIRE(exp && out);
    return guarded([&] {
        auto t = std::make_unique<qsdc_table>();
        t->result = ghzqsdc::run_experiment(exp->spec);
        t->csv = t->result.stats_csv();
        t->trials = t->result.trials_jsonl();
        *out = t.release();
    });
}

qsdc_status qsdc_sweep_run(const qsdc_experiment *exp, const char *parameter, const double *values, size_t count,
                           qsdc_table **out) {
    QSDC_REQUIRE(exp && parameter && out && (values || count == 0));
    return guarded([&] {
        auto t = std::make_unique<qsdc_table>();
        t->result = ghzqsdc::detection_curve(exp->spec, parameter, std::vector<double>(values, values + count));
        t->csv = t->result.stats_csv();
        t->trials = t->result.trials_jsonl();
        *out = t.release();
    });
}

void qsdc_table_free(qsdc_table *table) { delete table; }

qsdc_status qsdc_table_size(const qsdc_table *table, size_t *out) {
    QSDC_REQUIRE(table && out);
    *out = table->result.records.size();
    return QSDC_OK;
}

qsdc_status qsdc_table_record(const qsdc_table *table, size_t index, qsdc_stats_record *out) {
    QSDC_REQUIRE(table && out);
    if (index >= table->result.records.size()) return fail(QSDC_E_INVALID_ARGUMENT, "record index out of range");
    const auto &r = table->result.records[index];
    out->metric = r.metric.c_str();
    out->estimate = r.estimate;
    out->std_error = r.std_error;
    out->trials = r.trials;
    out->config_digest = r.config_digest.c_str();
    out->seed = r.seed;
    out->sweep_parameter = r.sweep_parameter ? r.sweep_parameter->c_str() : nullptr;
    out->sweep_value = r.sweep_value;
    return QSDC_OK;
}

qsdc_status qsdc_table_csv(const qsdc_table *table, const char **out) {
    QSDC_REQUIRE(table && out);
    *out = table->csv.c_str();
    return QSDC_OK;
}

qsdc_status qsdc_table_trials_jsonl(const qsdc_table *table, const char **out) {
    QSDC_REQUIRE(table && out);
    *out = table->trials.c_str();
    return QSDC_OK;
}

qsdc_status qsdc_table_write(const qsdc_table *table, const char *csv_path, const char *trials_path) {
    QSDC_REQUIRE(table && csv_path);
    return guarded([&] {
        ghzqsdc::write_text_file(csv_path, table->csv);
        if (trials_path) ghzqsdc::write_text_file(trials_path, table->trials);
    });
}

qsdc_status qsdc_table_aborted_trials(const qsdc_table *table, uint64_t *out) {
    QSDC_REQUIRE(table && out);
    uint64_t n = 0;
    for (const auto &t : table->result.trials) n += t.status != ghzqsdc::SessionStatus::Completed;
    *out = n;
    return QSDC_OK;
}

qsdc_status qsdc_write_text(const char *path, const char *text) {
    QSDC_REQUIRE(path && text);
    return guarded([&] { ghzqsdc::write_text_file(path, text); });
}

qsdc_status qsdc_selftest(char **report, int *all_passed) {
    QSDC_REQUIRE(report && all_passed);
    return guarded([&] {
        std::string text;
        bool ok = true;
        for (const auto &c : ghzqsdc::run_selftest()) {
            ok = ok && c.passed;
            text += (c.passed ? "PASS " : "FAIL ") + c.name;
            if (!c.detail.empty()) text += " (" + c.detail + ")";
            text += "\n";
        }
        char *buf = static_cast<char *>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *report = buf;
        *all_passed = ok ? 1 : 0;
    });
}

void qsdc_string_free(char *s) { std::free(s); }

}  // extern "C"
