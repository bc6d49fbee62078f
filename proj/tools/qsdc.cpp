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

// Command-line front end. Links only the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghzqsdc/ghzqsdc.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out;
    bool fail_on_abort = false;
    std::string param;
    std::vector<double> values;
};

int report(qsdc_status st, const char *what) {
    std::cerr << "qsdc: " << what << ": " << qsdc_last_error() << "\n";
    if (st == QSDC_E_CONFIG) std::cerr << "\n" << qsdc_config_schema();
    return st == QSDC_E_CONFIG ? kExitUsage : kExitError;
}

std::string resolve_config(const std::string &given) {
    namespace fs = std::filesystem;
    const char *dir = std::getenv("QSDC_CONFIG_DIR");
    if (given.empty()) {
        if (dir && fs::exists(fs::path(dir) / "default.json")) return (fs::path(dir) / "default.json").string();
        return "";
    }
    if (fs::exists(given) || fs::path(given).is_absolute() || !dir) return given;
    const fs::path candidate = fs::path(dir) / given;
    return fs::exists(candidate) ? candidate.string() : given;
}

struct ExperimentHandle {
    qsdc_experiment *ptr = nullptr;
    ~ExperimentHandle() { qsdc_experiment_free(ptr); }
};

int load(const Options &opt, ExperimentHandle &exp) {
    const std::string path = resolve_config(opt.config);
    const qsdc_status st =
        path.empty() ? qsdc_experiment_from_json("{}", &exp.ptr) : qsdc_experiment_from_file(path.c_str(), &exp.ptr);
    if (st != QSDC_OK) return report(st, "loading config");
    if (opt.seed) qsdc_experiment_set_seed(exp.ptr, *opt.seed);
    if (opt.trials) {
        if (qsdc_status s = qsdc_experiment_set_trials(exp.ptr, *opt.trials); s != QSDC_OK) return report(s, "--trials");
    }
    return 0;
}

std::string output_path(const Options &opt, qsdc_experiment *exp, const char *which, const std::string &fallback) {
    if (!opt.out.empty()) return opt.out;
    const char *configured = "";
    qsdc_experiment_output_path(exp, which, &configured);
    return *configured ? configured : fallback;
}

int cmd_run(const Options &opt) {
    ExperimentHandle exp;
    if (int rc = load(opt, exp)) return rc;
    qsdc_session *session = nullptr;
    if (qsdc_status st = qsdc_session_run(exp.ptr, &session); st != QSDC_OK) return report(st, "run");
    const char *summary = nullptr;
    const char *transcript = nullptr;
    qsdc_session_summary(session, &summary);
    qsdc_session_transcript(session, &transcript);
    const std::string path = output_path(opt, exp.ptr, "transcript", "transcript.jsonl");
    std::cout << summary;
    if (qsdc_status st = qsdc_write_text(path.c_str(), transcript); st != QSDC_OK) {
        qsdc_session_free(session);
        return report(st, "writing transcript");
    }
    std::cout << "transcript: " << path << "\n";
    qsdc_session_status status;
    qsdc_session_get_status(session, &status);
    qsdc_session_free(session);
    if (opt.fail_on_abort && status != QSDC_SESSION_COMPLETED) {
        std::cerr << "qsdc: session aborted (eavesdropping detected)\n";
        return kExitAborted;
    }
    return 0;
}

int finish_table(const Options &opt, qsdc_experiment *exp, qsdc_table *table) {
    const char *csv = nullptr;
    qsdc_table_csv(table, &csv);
    std::cout << csv;
    const std::string stats = output_path(opt, exp, "stats", "");
    int rc = 0;
    if (!stats.empty()) {
        const char *configured_trials = "";
        qsdc_experiment_output_path(exp, "trials", &configured_trials);
        const std::string trials = (opt.out.empty() && *configured_trials) ? configured_trials : stats + ".trials.jsonl";
        if (qsdc_status st = qsdc_table_write(table, stats.c_str(), trials.c_str()); st != QSDC_OK) {
            rc = report(st, "writing results");
        }
    }
    std::uint64_t aborted = 0;
    qsdc_table_aborted_trials(table, &aborted);
    qsdc_table_free(table);
    if (rc == 0 && opt.fail_on_abort && aborted > 0) {
        std::cerr << "qsdc: " << aborted << " trial(s) aborted (eavesdropping detected)\n";
        return kExitAborted;
    }
    return rc;
}

int cmd_stats(const Options &opt) {
    ExperimentHandle exp;
    if (int rc = load(opt, exp)) return rc;
    qsdc_table *table = nullptr;
    if (qsdc_status st = qsdc_stats_run(exp.ptr, &table); st != QSDC_OK) return report(st, "stats");
    return finish_table(opt, exp.ptr, table);
}

int cmd_sweep(const Options &opt) {
    ExperimentHandle exp;
    if (int rc = load(opt, exp)) return rc;
    std::string param = opt.param;
    std::vector<double> values = opt.values;
    if (param.empty() || values.empty()) {
        const char *p = nullptr;
        const double *v = nullptr;
        size_t n = 0;
        qsdc_experiment_sweep(exp.ptr, &p, &v, &n);
        if (param.empty() && p) param = p;
        if (values.empty() && v) values.assign(v, v + n);
    }
    if (param.empty() || values.empty()) {
        std::cerr << "qsdc: sweep needs --param and --values, or a \"sweep\" block in the config\n\n"
                  << qsdc_config_schema();
        return kExitUsage;
    }
    qsdc_table *table = nullptr;
    if (qsdc_status st = qsdc_sweep_run(exp.ptr, param.c_str(), values.data(), values.size(), &table); st != QSDC_OK) {
        return report(st, "sweep");
    }
    return finish_table(opt, exp.ptr, table);
}

int cmd_selftest() {
    char *text = nullptr;
    int ok = 0;
    if (qsdc_status st = qsdc_selftest(&text, &ok); st != QSDC_OK) return report(st, "selftest");
    std::cout << text;
    qsdc_string_free(text);
    return ok ? 0 : kExitError;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multi-party GHZ secure direct communication simulator"};
    app.require_subcommand(1);
    app.footer("Config directory fallback: $QSDC_CONFIG_DIR\n\n" + std::string(qsdc_config_schema()));

    Options opt;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", opt.config, "experiment config (JSON)");
        sub->add_option("--seed", opt.seed, "master seed (overrides config)");
        sub->add_option("--trials", opt.trials, "trial count (overrides config)");
        sub->add_option("--out", opt.out, "output path (transcript for run, CSV for stats/sweep)");
        sub->add_flag("--fail-on-abort", opt.fail_on_abort, "exit 3 if a session aborts");
    };
    auto *run = app.add_subcommand("run", "run one session and print every party's decoded messages");
    auto *stats = app.add_subcommand("stats", "Monte Carlo estimates of the configured metrics");
    auto *sweep = app.add_subcommand("sweep", "estimates across values of one parameter");
    auto *selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    add_common(run);
    add_common(stats);
    add_common(sweep);
    sweep->add_option("--param", opt.param, "M, p, rho or trials");
    sweep->add_option("--values", opt.values, "comma-separated values")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    if (*run) return cmd_run(opt);
    if (*stats) return cmd_stats(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*selftest) return cmd_selftest();
    return kExitUsage;
}
