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

#ifndef GHZQSDC_HARNESS_EXPERIMENT_HPP
#define GHZQSDC_HARNESS_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adversary/attacks.hpp"
#include "protocol/config.hpp"
#include "protocol/session.hpp"

namespace ghzqsdc {

inline constexpr int kConfigSchemaVersion = 1;

enum class Metric : std::uint8_t {
    CheckErrorRate,
    CheckErrorRateZ,
    CheckErrorRateX,
    DetectionProbability,
    MessageFidelity,
    EveInformation,
};

std::string metric_name(Metric m);
Metric parse_metric(const std::string &s);

struct Sweep {
    std::string parameter;  // M, p, rho or trials
    std::vector<double> values;
};

/// A batch of independent seeded sessions plus what to measure over them.
struct ExperimentSpec {
    SessionConfig session;
    std::optional<std::vector<std::string>> messages;  // fixed plan, else random per trial
    AdversarySpec adversary;
    std::uint64_t trials = 100;
    std::vector<Metric> metrics = {Metric::CheckErrorRate, Metric::DetectionProbability, Metric::MessageFidelity};
    std::optional<Sweep> sweep;
    unsigned threads = 1;

    // Output paths; empty means "not requested".
    std::string stats_out;
    std::string trials_out;
    std::string transcript_out;

    static ExperimentSpec from_json(const nlohmann::json &doc);
    static ExperimentSpec from_file(const std::string &path);
    /// Canonical form: every field that influences results, none that don't.
    nlohmann::json canonical_json() const;
    /// 16 hex digits of FNV-1a over canonical_json() without the seed.
    std::string digest() const;
    void validate() const;
};

struct StatsRecord {
    std::string metric;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;  // number of samples behind the estimate
    std::string config_digest;
    std::uint64_t seed = 0;
    std::optional<std::string> sweep_parameter;
    double sweep_value = 0.0;
};

struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    SessionStatus status = SessionStatus::Completed;
    std::size_t checked = 0;
    std::size_t check_errors = 0;
    std::size_t checked_z = 0;
    std::size_t errors_z = 0;
    std::size_t checked_x = 0;
    std::size_t errors_x = 0;
    std::optional<double> fidelity;
    std::size_t fidelity_bits = 0;
    std::size_t eve_bits = 0;
    std::size_t eve_correct = 0;
    std::size_t reveal_mismatches = 0;
};

struct ExperimentResult {
    std::vector<StatsRecord> records;
    std::vector<TrialRecord> trials;
    std::string config_digest;
    std::uint64_t seed = 0;

    std::string stats_csv() const;
    std::string trials_jsonl() const;
    const StatsRecord *find(const std::string &metric, std::optional<double> sweep_value = std::nullopt) const;
};

/// Seed of trial i: a stable hash of (master seed, i).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// The plan used by a session seeded with `seed`.
MessagePlan plan_for(const ExperimentSpec &spec, std::uint64_t seed);

/// One session seeded with the master seed itself.
SessionResult run_single(const ExperimentSpec &spec);

ExperimentResult run_experiment(const ExperimentSpec &spec);

/// One block of records per sweep value. parameter must be M, p, rho or trials.
ExperimentResult detection_curve(const ExperimentSpec &spec, const std::string &parameter,
                                 const std::vector<double> &values);

/// Writes text to path, throwing Error(kIo) if it cannot.
void write_text_file(const std::string &path, const std::string &text);

/// Human-readable description of the config file format.
std::string config_schema_help();

}  // namespace ghzqsdc

#endif
