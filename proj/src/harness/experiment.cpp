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

#include "harness/experiment.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "error.hpp"

namespace ghzqsdc {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) throw Error(ErrorCode::kConfig, where + " must be an object");
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.contains(key)) throw Error(ErrorCode::kConfig, "unknown key '" + key + "' in " + where);
    }
}

template <typename T>
T get_or(const json &obj, const char *key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kConfig, std::string("bad value for '") + key + "': " + e.what());
    }
}

std::vector<PartyId> parse_targets(const json &adv, unsigned parties, bool default_all) {
    std::vector<PartyId> out;
    if (!adv.contains("targets")) {
        if (default_all) return out;
        for (std::uint32_t p = 1; p < parties; ++p) out.push_back(PartyId{p});
        return out;
    }
    for (const auto &t : adv.at("targets")) {
        if (!t.is_number_unsigned()) throw Error(ErrorCode::kConfig, "adversary targets must be party indices");
        out.push_back(PartyId{t.get<std::uint32_t>()});
    }
    return out;
}

std::string format_double(double v, const char *fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

/// Running sums for a sample mean and its standard error.
struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    void add(double x, std::uint64_t weight = 1) {
        sum += x * static_cast<double>(weight);
        sum_sq += x * x * static_cast<double>(weight);
        count += weight;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
    /// sample std (n-1 denominator) / sqrt(n)
    double std_error() const {
        if (count < 2) return 0.0;
        const double n = static_cast<double>(count);
        const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
        return std::sqrt(var / n);
    }
};

TrialRecord summarize(std::uint64_t index, std::uint64_t seed, const SessionResult &r, const MessagePlan &plan) {
    TrialRecord t;
    t.trial = index;
    t.seed = seed;
    t.status = r.status;
    for (const auto &c : r.check.records) {
        ++t.checked;
        t.check_errors += c.consistent ? 0 : 1;
        if (c.basis == MeasBasis::Z) {
            ++t.checked_z;
            t.errors_z += c.consistent ? 0 : 1;
        } else {
            ++t.checked_x;
            t.errors_x += c.consistent ? 0 : 1;
        }
    }
    if (!r.views.empty()) {
        std::size_t total = 0;
        std::size_t correct = 0;
        for (const auto &view : r.views) {
            for (std::size_t p = 0; p < view.messages.size(); ++p) {
                if (p == view.viewer.index) continue;
                const auto &got = view.messages[p];
                for (std::size_t i = 0; i < got.size(); ++i) {
                    const std::size_t k = p == 0 ? i / 2 : i;
                    ++total;
                    if (!view.undecodable[k] && got[i] == plan.bits[p][i]) ++correct;
                }
            }
        }
        t.fidelity_bits = total;
        t.fidelity = total ? static_cast<double>(correct) / static_cast<double>(total) : 1.0;
    }
    if (r.eve) {
        for (const auto &[party, info] : eve_information(*r.eve, plan, r.message_groups)) {
            t.eve_bits += info.recovered;
            t.eve_correct += info.correct;
        }
    }
    if (r.reveal) t.reveal_mismatches = r.reveal->mismatches;
    return t;
}

std::vector<StatsRecord> aggregate(const ExperimentSpec &spec, const std::vector<TrialRecord> &trials,
                                   const std::string &digest) {
    std::vector<StatsRecord> out;
    for (Metric m : spec.metrics) {
        Accumulator acc;
        for (const auto &t : trials) {
            switch (m) {
                case Metric::CheckErrorRate:
                    if (t.checked) acc.add(static_cast<double>(t.check_errors) / static_cast<double>(t.checked));
                    break;
                case Metric::CheckErrorRateZ:
                    acc.add(1.0, t.errors_z);
                    acc.add(0.0, t.checked_z - t.errors_z);
                    break;
                case Metric::CheckErrorRateX:
                    acc.add(1.0, t.errors_x);
                    acc.add(0.0, t.checked_x - t.errors_x);
                    break;
                case Metric::DetectionProbability:
                    acc.add(t.status == SessionStatus::Completed ? 0.0 : 1.0);
                    break;
                case Metric::MessageFidelity:
                    if (t.fidelity) acc.add(*t.fidelity);
                    break;
                case Metric::EveInformation:
                    acc.add(1.0, t.eve_correct);
                    acc.add(0.0, t.eve_bits - t.eve_correct);
                    break;
            }
        }
        StatsRecord rec;
        rec.metric = metric_name(m);
        rec.estimate = acc.mean();
        rec.std_error = acc.std_error();
        rec.trials = acc.count;
        rec.config_digest = digest;
        rec.seed = spec.session.seed;
        out.push_back(std::move(rec));
    }
    return out;
}

void apply_sweep_value(ExperimentSpec &spec, const std::string &parameter, double value) {
    auto as_count = [&](double v) {
        if (v < 0 || std::floor(v) != v) throw Error(ErrorCode::kConfig, parameter + " sweep values must be integers");
        return static_cast<std::uint64_t>(v);
    };
    if (parameter == "M") {
        spec.session.check_count = as_count(value);
    } else if (parameter == "p") {
        if (spec.adversary.kind != AdversarySpec::Kind::Disturbance) {
            throw Error(ErrorCode::kConfig, "sweeping p requires a disturbance adversary");
        }
        spec.adversary.disturbance.probability = value;
    } else if (parameter == "rho") {
        spec.session.reveal_fraction = value;
    } else if (parameter == "trials") {
        spec.trials = as_count(value);
    } else {
        throw Error(ErrorCode::kConfig, "unknown sweep parameter '" + parameter + "' (expected M, p, rho or trials)");
    }
}

std::string normalize_parameter(const std::string &p) {
    if (p == "ρ" || p == "reveal_fraction") return "rho";
    if (p == "check_count") return "M";
    return p;
}

}  // namespace

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::CheckErrorRate: return "check-error-rate";
        case Metric::CheckErrorRateZ: return "check-error-rate-z";
        case Metric::CheckErrorRateX: return "check-error-rate-x";
        case Metric::DetectionProbability: return "detection-probability";
        case Metric::MessageFidelity: return "message-fidelity";
        case Metric::EveInformation: return "eve-information";
    }
    return "?";
}

Metric parse_metric(const std::string &s) {
    for (Metric m : {Metric::CheckErrorRate, Metric::CheckErrorRateZ, Metric::CheckErrorRateX,
                     Metric::DetectionProbability, Metric::MessageFidelity, Metric::EveInformation}) {
        if (metric_name(m) == s) return m;
    }
    throw Error(ErrorCode::kConfig, "unknown metric '" + s + "'");
}

ExperimentSpec ExperimentSpec::from_json(const json &doc) {
    reject_unknown_keys(doc, {"schema_version", "seed", "trials", "threads", "metrics", "session", "adversary",
                              "sweep", "output"},
                        "config");
    const int version = get_or<int>(doc, "schema_version", kConfigSchemaVersion);
    if (version != kConfigSchemaVersion) {
        throw Error(ErrorCode::kConfig, "unsupported schema_version " + std::to_string(version));
    }
    ExperimentSpec spec;
    spec.session.seed = get_or<std::uint64_t>(doc, "seed", 0);
    spec.trials = get_or<std::uint64_t>(doc, "trials", spec.trials);
    spec.threads = get_or<unsigned>(doc, "threads", spec.threads);
    if (doc.contains("metrics")) {
        spec.metrics.clear();
        for (const auto &m : doc.at("metrics")) spec.metrics.push_back(parse_metric(m.get<std::string>()));
    }

    const json session = doc.value("session", json::object());
    reject_unknown_keys(session, {"parties", "groups", "check_count", "abort_threshold", "reveal_fraction",
                                  "checks_disabled", "proceed_on_check_failure", "forced_initial_label", "messages"},
                        "session");
    SessionConfig &cfg = spec.session;
    cfg.parties = get_or<unsigned>(session, "parties", cfg.parties);
    cfg.groups = get_or<std::size_t>(session, "groups", cfg.groups);
    cfg.checks_disabled = get_or<bool>(session, "checks_disabled", false);
    cfg.proceed_on_check_failure = get_or<bool>(session, "proceed_on_check_failure", false);
    cfg.check_count = get_or<std::size_t>(session, "check_count", cfg.checks_disabled ? 0 : cfg.groups / 2);
    cfg.abort_threshold = get_or<double>(session, "abort_threshold", cfg.abort_threshold);
    cfg.reveal_fraction = get_or<double>(session, "reveal_fraction", cfg.reveal_fraction);
    if (session.contains("forced_initial_label")) {
        try {
            cfg.forced_initial = index_from_display_label(session.at("forced_initial_label").get<std::string>());
        } catch (const Error &e) {
            throw Error(ErrorCode::kConfig, std::string("forced_initial_label: ") + e.what());
        }
    }
    if (session.contains("messages")) {
        spec.messages = session.at("messages").get<std::vector<std::string>>();
    }

    const json adv = doc.value("adversary", json::object({{"type", "none"}}));
    const std::string type = get_or<std::string>(adv, "type", "none");
    if (type == "none") {
        reject_unknown_keys(adv, {"type"}, "adversary");
        spec.adversary.kind = AdversarySpec::Kind::None;
    } else if (type == "intercept-resend") {
        reject_unknown_keys(adv, {"type", "targets", "fakes"}, "adversary");
        spec.adversary.kind = AdversarySpec::Kind::InterceptResend;
        spec.adversary.intercept.targets = parse_targets(adv, cfg.parties, false);
        for (const auto &f : adv.value("fakes", json::array({"random"}))) {
            spec.adversary.intercept.fakes.push_back(parse_fake_state(f.get<std::string>()));
        }
    } else if (type == "disturbance") {
        reject_unknown_keys(adv, {"type", "targets", "mode", "probability"}, "adversary");
        spec.adversary.kind = AdversarySpec::Kind::Disturbance;
        spec.adversary.disturbance.targets = parse_targets(adv, cfg.parties, true);
        spec.adversary.disturbance.mode = parse_disturbance_mode(get_or<std::string>(adv, "mode", "random-op"));
        spec.adversary.disturbance.probability = get_or<double>(adv, "probability", 1.0);
    } else {
        throw Error(ErrorCode::kConfig, "unknown adversary type '" + type + "'");
    }

    if (doc.contains("sweep")) {
        const json &sw = doc.at("sweep");
        reject_unknown_keys(sw, {"parameter", "values"}, "sweep");
        Sweep s;
        s.parameter = normalize_parameter(get_or<std::string>(sw, "parameter", ""));
        s.values = get_or<std::vector<double>>(sw, "values", {});
        spec.sweep = std::move(s);
    }
    if (doc.contains("output")) {
        const json &out = doc.at("output");
        reject_unknown_keys(out, {"stats", "trials", "transcript"}, "output");
        spec.stats_out = get_or<std::string>(out, "stats", "");
        spec.trials_out = get_or<std::string>(out, "trials", "");
        spec.transcript_out = get_or<std::string>(out, "transcript", "");
    }
    spec.validate();
    return spec;
}

ExperimentSpec ExperimentSpec::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::kConfig, "config file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(doc);
}

json ExperimentSpec::canonical_json() const {
    json doc;
    doc["schema_version"] = kConfigSchemaVersion;
    doc["seed"] = session.seed;
    doc["trials"] = trials;
    json ms = json::array();
    for (Metric m : metrics) ms.push_back(metric_name(m));
    doc["metrics"] = ms;
    json s;
    s["parties"] = session.parties;
    s["groups"] = session.groups;
    s["check_count"] = session.check_count;
    s["abort_threshold"] = session.abort_threshold;
    s["reveal_fraction"] = session.reveal_fraction;
    s["checks_disabled"] = session.checks_disabled;
    s["proceed_on_check_failure"] = session.proceed_on_check_failure;
    if (session.forced_initial) s["forced_initial_label"] = display_label(*session.forced_initial);
    if (messages) s["messages"] = *messages;
    doc["session"] = s;
    json a;
    switch (adversary.kind) {
        case AdversarySpec::Kind::None: a["type"] = "none"; break;
        case AdversarySpec::Kind::InterceptResend: {
            a["type"] = "intercept-resend";
            json t = json::array();
            for (PartyId p : adversary.intercept.targets) t.push_back(p.index);
            a["targets"] = t;
            json f = json::array();
            for (FakeState fs : adversary.intercept.fakes) f.push_back(fake_state_name(fs));
            a["fakes"] = f;
            break;
        }
        case AdversarySpec::Kind::Disturbance: {
            a["type"] = "disturbance";
            json t = json::array();
            for (PartyId p : adversary.disturbance.targets) t.push_back(p.index);
            a["targets"] = t;
            a["mode"] = disturbance_mode_name(adversary.disturbance.mode);
            a["probability"] = adversary.disturbance.probability;
            break;
        }
    }
    doc["adversary"] = a;
    if (sweep) doc["sweep"] = json{{"parameter", sweep->parameter}, {"values", sweep->values}};
    return doc;
}

std::string ExperimentSpec::digest() const {
    json doc = canonical_json();
    doc.erase("seed");
    const std::string text = doc.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

void ExperimentSpec::validate() const {
    session.validate();
    adversary.validate(session.parties);
    if (trials == 0) throw Error(ErrorCode::kConfig, "trials must be at least 1");
    if (threads == 0) throw Error(ErrorCode::kConfig, "threads must be at least 1");
    if (messages) MessagePlan::from_strings(*messages).validate(session.parties, session.message_groups());
    if (sweep) {
        const std::string &p = sweep->parameter;
        if (p != "M" && p != "p" && p != "rho" && p != "trials") {
            throw Error(ErrorCode::kConfig, "unknown sweep parameter '" + p + "' (expected M, p, rho or trials)");
        }
    }
}

std::string ExperimentResult::stats_csv() const {
    const bool swept = !records.empty() && records.front().sweep_parameter.has_value();
    std::ostringstream out;
    if (swept) out << "parameter,value,";
    out << "metric,estimate,std_error,trials,config_digest,seed\n";
    for (const auto &r : records) {
        if (swept) out << *r.sweep_parameter << ',' << format_double(r.sweep_value, "%g") << ',';
        out << r.metric << ',' << format_double(r.estimate, "%.6f") << ',' << format_double(r.std_error, "%.6f")
            << ',' << r.trials << ',' << r.config_digest << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string ExperimentResult::trials_jsonl() const {
    std::string out;
    for (const auto &t : trials) {
        nlohmann::ordered_json line;
        line["trial"] = t.trial;
        line["seed"] = t.seed;
        line["config_digest"] = config_digest;
        line["master_seed"] = seed;
        line["status"] = status_name(t.status);
        line["checked"] = t.checked;
        line["check_errors"] = t.check_errors;
        line["checked_z"] = t.checked_z;
        line["errors_z"] = t.errors_z;
        line["checked_x"] = t.checked_x;
        line["errors_x"] = t.errors_x;
        if (t.fidelity) line["message_fidelity"] = *t.fidelity;
        line["eve_bits"] = t.eve_bits;
        line["eve_correct"] = t.eve_correct;
        line["reveal_mismatches"] = t.reveal_mismatches;
        out += line.dump();
        out.push_back('\n');
    }
    return out;
}

const StatsRecord *ExperimentResult::find(const std::string &metric, std::optional<double> sweep_value) const {
    for (const auto &r : records) {
        if (r.metric != metric) continue;
        if (sweep_value && r.sweep_value != *sweep_value) continue;
        return &r;
    }
    return nullptr;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    return Rng::derive(master, trial, StreamTag::kTrial).key();
}

MessagePlan plan_for(const ExperimentSpec &spec, std::uint64_t seed) {
    if (spec.messages) return MessagePlan::from_strings(*spec.messages);
    Rng rng = Rng::derive(seed, 0, StreamTag::kMessages);
    return MessagePlan::random(spec.session.parties, spec.session.message_groups(), rng);
}

namespace {

SessionResult run_seeded(const ExperimentSpec &spec, std::uint64_t seed, const MessagePlan &plan) {
    SessionConfig cfg = spec.session;
    cfg.seed = seed;
    auto channel = make_channel(spec.adversary, hash_combine(seed, static_cast<std::uint64_t>(StreamTag::kAdversary)));
    return run_session(cfg, plan, channel.get());
}

}  // namespace

SessionResult run_single(const ExperimentSpec &spec) {
    spec.validate();
    return run_seeded(spec, spec.session.seed, plan_for(spec, spec.session.seed));
}

ExperimentResult run_experiment(const ExperimentSpec &spec) {
    spec.validate();
    ExperimentResult result;
    result.config_digest = spec.digest();
    result.seed = spec.session.seed;
    result.trials.resize(spec.trials);

    auto work = [&](std::uint64_t begin, std::uint64_t stride) {
        for (std::uint64_t i = begin; i < spec.trials; i += stride) {
            const std::uint64_t seed = trial_seed(spec.session.seed, i);
            const MessagePlan plan = plan_for(spec, seed);
            result.trials[i] = summarize(i, seed, run_seeded(spec, seed, plan), plan);
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(spec.threads, spec.trials));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        work(t, threads);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto &e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    result.records = aggregate(spec, result.trials, result.config_digest);
    return result;
}

ExperimentResult detection_curve(const ExperimentSpec &spec, const std::string &parameter,
                                 const std::vector<double> &values) {
    const std::string param = normalize_parameter(parameter);
    if (param != "M" && param != "p" && param != "rho" && param != "trials") {
        throw Error(ErrorCode::kConfig, "unknown sweep parameter '" + parameter + "' (expected M, p, rho or trials)");
    }
    if (values.empty()) throw Error(ErrorCode::kConfig, "sweep needs at least one value");
    ExperimentResult out;
    out.config_digest = spec.digest();
    out.seed = spec.session.seed;
    for (double v : values) {
        ExperimentSpec point = spec;
        point.sweep.reset();
        apply_sweep_value(point, param, v);
        ExperimentResult r = run_experiment(point);
        for (auto &rec : r.records) {
            rec.sweep_parameter = param;
            rec.sweep_value = v;
            rec.config_digest = out.config_digest;
            out.records.push_back(std::move(rec));
        }
        for (auto &t : r.trials) out.trials.push_back(t);
    }
    return out;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string config_schema_help() {
    return R"(Config file (JSON, schema_version 1). Every key is optional.

{
  "schema_version": 1,
  "seed": 12345,                  master seed (u64); trial i uses hash(seed, i)
  "trials": 100,                  sessions per estimate (>= 1)
  "threads": 1,                   worker threads; results do not depend on it
  "metrics": ["check-error-rate", "check-error-rate-z", "check-error-rate-x",
              "detection-probability", "message-fidelity", "eve-information"],
  "session": {
    "parties": 3,                 n, 3..10 (party 0 is Alice)
    "groups": 40,                 G, GHZ groups prepared
    "check_count": 20,            M, 0 < M < G (default G/2)
    "abort_threshold": 0.0,       abort if check error rate exceeds this
    "reveal_fraction": 0.1,       fraction of message positions each party discloses
    "checks_disabled": false,     diagnostic: requires check_count 0
    "proceed_on_check_failure": false,  diagnostic: keep going after a failed check
    "forced_initial_label": "000",      diagnostic: fix every group's initial state
    "messages": ["01", "0", "1"]  fixed plan (Alice 2 bits/group, others 1), else random
  },
  "adversary": {"type": "none"}
             | {"type": "intercept-resend", "targets": [1, 2], "fakes": ["0", "1"]}
                 fakes: one of 0, 1, +, -, random; one entry for all targets or one per target
             | {"type": "disturbance", "mode": "random-op" | "flip" | "measure-z",
                "probability": 1.0, "targets": [1, 2]},
  "sweep": {"parameter": "M" | "p" | "rho" | "trials", "values": [1, 2, 4, 8]},
  "output": {"stats": "stats.csv", "trials": "trials.jsonl", "transcript": "transcript.jsonl"}
}
)";
}

}  // namespace ghzqsdc
