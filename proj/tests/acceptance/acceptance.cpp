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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: ghzqsdc_acceptance [path-to-qsdc-cli] [scratch-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adversary/attacks.hpp"
#include "harness/experiment.hpp"
#include "oracles.hpp"
#include "protocol/decode.hpp"
#include "protocol/encoding.hpp"
#include "protocol/session.hpp"
#include "quantum/ghz.hpp"
#include "quantum/registry.hpp"
#include "reference_states.hpp"

using namespace ghzqsdc;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string cli_path;
std::filesystem::path scratch;

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<QubitId> labels(unsigned n) {
    std::vector<QubitId> out;
    for (unsigned k = 0; k < n; ++k) out.push_back(QubitId{k});
    return out;
}

std::vector<std::vector<oracle::C>> matrix_of(PauliOp op) {
    switch (op) {
        case PauliOp::X: return oracle::matrix('X');
        case PauliOp::IY: return oracle::matrix('Y');
        case PauliOp::Z: return oracle::matrix('Z');
        default: return oracle::matrix('I');
    }
}

std::string x_string(std::uint64_t index, unsigned n) {
    std::string s;
    for (unsigned k = 0; k < n; ++k) s += (index >> (n - 1 - k)) & 1 ? '-' : '+';
    return s;
}

Outcome ac1() {
    Outcome o;
    double worst = 0.0;
    for (const auto &ref : reference::kStates) {
        const StateVector s = ghz_state(index_from_display_label(ref.label), labels(3));
        const oracle::Vec psi(s.amplitudes().begin(), s.amplitudes().end());
        oracle::Vec z(8);
        for (const auto &t : ref.z) z[std::stoul(t.ket, nullptr, 2)] = t.sign * oracle::kS;
        std::map<std::string, int> x;
        for (const auto &t : ref.x) x[t.ket] = t.sign;
        for (std::uint64_t i = 0; i < 8; ++i) {
            worst = std::max(worst, std::abs(psi[i] - z[i]));
            const std::string out = x_string(i, 3);
            const double want = x.contains(out) ? 0.5 * x[out] : 0.0;
            worst = std::max(worst, std::abs(oracle::dot(oracle::product(out), psi) - want));
        }
    }
    o.pass = worst <= 1e-12;
    o.detail = "8 states, Z and X expansions, max deviation " + fmt("%.2e", worst);
    return o;
}

Outcome ac2() {
    Outcome o;
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    QuantumRegistry reg;
    const auto qs = reg.add_ghz(index_from_display_label("000"), h);
    reg.apply_pauli(qs[0], PauliOp::X);
    reg.apply_pauli(qs[1], PauliOp::I);
    reg.apply_pauli(qs[2], PauliOp::IY);
    const auto dist = reg.ghz_distribution(qs);
    const GhzIndex target = index_from_display_label("101");
    bool only_101 = true;
    for (std::uint64_t k = 0; k < dist.size(); ++k) {
        if (k != target.ordinal() && dist[k] != 0.0) only_101 = false;
    }
    Rng rng(2024);
    const bool measured_101 = reg.ghz_measure(qs, rng) == target;

    SessionConfig c;
    c.groups = 1;
    c.check_count = 0;
    c.checks_disabled = true;
    c.reveal_fraction = 0.0;
    c.forced_initial = index_from_display_label("000");
    c.seed = 2024;
    const MessagePlan plan = MessagePlan::from_strings({"01", "0", "1"});
    const SessionResult r = run_session(c, plan, nullptr);
    bool views_ok = r.status == SessionStatus::Completed && r.views.size() == 3 &&
                    display_label(r.announcements.at(0).measured) == "101";
    for (std::uint32_t v = 0; views_ok && v < 3; ++v) {
        for (std::uint32_t p = 0; p < 3; ++p) {
            if (p != v && (r.views[v].messages[p] != plan.bits[p] || r.views[v].undecodable[0])) views_ok = false;
        }
    }
    o.pass = only_101 && measured_101 && views_ok;
    o.detail = std::string("P(101)=") + fmt("%.17g", dist[target.ordinal()]) + ", views {Alice:01, Bob:0, Charlie:1} " +
               (views_ok ? "exact" : "WRONG");
    return o;
}

struct BasisCounts {
    std::size_t z = 0, z_err = 0, x = 0, x_err = 0;
};

BasisCounts sample_checks(FakeState b, FakeState c, std::size_t per_basis) {
    BasisCounts out;
    for (std::uint64_t seed = 1; out.z < per_basis || out.x < per_basis; ++seed) {
        SessionConfig cfg;
        cfg.groups = 2001;
        cfg.check_count = 2000;
        cfg.forced_initial = index_from_display_label("000");
        cfg.seed = seed;
        InterceptResendConfig ic;
        ic.targets = {PartyId{1}, PartyId{2}};
        ic.fakes = {b, c};
        InterceptResend eve(ic, hash_combine(seed, 99));
        auto groups = prepare_groups(cfg);
        const Holdings h = distribute(groups, 3, &eve);
        for (const auto &rec : run_check_phase(cfg, groups, h).records) {
            if (rec.basis == MeasBasis::Z && out.z < per_basis) {
                ++out.z;
                out.z_err += !rec.consistent;
            } else if (rec.basis == MeasBasis::X && out.x < per_basis) {
                ++out.x;
                out.x_err += !rec.consistent;
            }
        }
    }
    return out;
}

Outcome ac3() {
    Outcome o;
    const std::size_t n = 10000;
    const BasisCounts a = sample_checks(FakeState::Zero, FakeState::One, n);
    const BasisCounts b = sample_checks(FakeState::Zero, FakeState::Zero, n);
    const double az = double(a.z_err) / n, ax = double(a.x_err) / n;
    const double bz = double(b.z_err) / n, bx = double(b.x_err) / n;
    o.pass = a.z_err == n && std::abs(ax - 0.5) <= 0.02 && std::abs(bz - 0.5) <= 0.02 && std::abs(bx - 0.5) <= 0.02;
    o.detail = "fakes(0,1): Z " + fmt("%.3f", az) + " X " + fmt("%.3f", ax) + "; fakes(0,0): Z " + fmt("%.3f", bz) +
               " X " + fmt("%.3f", bx) + " (10^4 groups per basis)";
    return o;
}

Outcome ac4() {
    Outcome o;
    std::size_t failures = 0;
    Rng meta(4);
    for (unsigned n = 3; n <= 5; ++n) {
        for (int t = 0; t < 1000; ++t) {
            SessionConfig c;
            c.parties = n;
            c.groups = 4 + meta.below(40);
            c.check_count = 1 + meta.below(c.groups - 2);
            c.reveal_fraction = meta.uniform();
            c.seed = meta.next_u64();
            Rng prng(c.seed);
            const MessagePlan plan = MessagePlan::random(n, c.message_groups(), prng);
            const SessionResult r = run_session(c, plan, nullptr);
            bool ok = r.status == SessionStatus::Completed && r.views.size() == n;
            for (std::uint32_t v = 0; ok && v < n; ++v) {
                for (std::uint32_t p = 0; p < n; ++p) {
                    if (p != v && r.views[v].messages[p] != plan.bits[p]) ok = false;
                }
            }
            failures += !ok;
        }
    }
    o.pass = failures == 0;
    o.detail = "3000 sessions (n=3,4,5), " + std::to_string(failures) + " with a decoding error";
    return o;
}

Outcome ac5() {
    Outcome o;
    std::size_t bad_decode = 0, checked = 0;
    for (unsigned n = 3; n <= 6; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint32_t r = 0; r < n; ++r) {
            std::vector<PauliOp> own_choices = {PauliOp::I, PauliOp::IY};
            if (r == 0) own_choices.assign(kAllPaulis.begin(), kAllPaulis.end());
            for (std::uint64_t init = 0; init < dim; ++init) {
                const GhzIndex initial = GhzIndex::from_ordinal(n, init);
                for (PauliOp own : own_choices) {
                    std::set<std::uint64_t> images;
                    std::size_t tuples = 0;
                    const unsigned alice_choices = r == 0 ? 1 : 4;
                    for (unsigned a = 0; a < alice_choices; ++a) {
                        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
                            std::vector<PauliOp> ops(n, PauliOp::I);
                            ops[r] = own;
                            if (r != 0) ops[0] = kAllPaulis[a];
                            bool skip = false;
                            for (unsigned j = 1; j < n; ++j) {
                                const bool bit = (m >> (j - 1)) & 1;
                                if (j == r) {
                                    skip = skip || bit;
                                    continue;
                                }
                                ops[j] = bit ? PauliOp::IY : PauliOp::I;
                            }
                            if (skip) continue;
                            ++tuples;
                            GhzIndex measured = initial;
                            for (unsigned q = 0; q < n; ++q) measured = measured ^ pauli_delta(ops[q], q, n);
                            images.insert(measured.ordinal());
                            if (decode_others(PartyId{r}, n, own, initial, measured) != ops) ++bad_decode;
                        }
                    }
                    ++checked;
                    if (images.size() != tuples || (r >= 1 && images.size() != dim)) ++bad_decode;
                }
            }
        }
    }

    std::size_t bad_toggle = 0, toggles = 0;
    for (unsigned n = 2; n <= 5; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<oracle::Vec> basis;
        for (std::uint64_t t = 0; t < dim; ++t) {
            const GhzIndex c = GhzIndex::from_ordinal(n, t);
            basis.push_back(oracle::ghz(c.pattern_string(), c.phase));
        }
        for (PauliOp op : kAllPaulis) {
            for (unsigned q = 0; q < n; ++q) {
                const auto m = oracle::embed(matrix_of(op), q, n);
                const IndexDelta d = pauli_delta(op, q, n);
                for (std::uint64_t init = 0; init < dim; ++init) {
                    const oracle::Vec moved = oracle::apply(m, basis[init]);
                    std::uint64_t found = dim;
                    for (std::uint64_t t = 0; t < dim; ++t) {
                        if (std::abs(std::abs(oracle::dot(basis[t], moved)) - 1.0) < 1e-10) found = t;
                    }
                    ++toggles;
                    if (found == dim || (GhzIndex::from_ordinal(n, init) ^ d).ordinal() != found) ++bad_toggle;
                }
            }
        }
    }
    o.pass = bad_decode == 0 && bad_toggle == 0;
    o.detail = std::to_string(checked) + " (party, initial, own-op) cases, " + std::to_string(bad_decode) +
               " failures; " + std::to_string(toggles) + " toggle cases, " + std::to_string(bad_toggle) + " mismatches";
    return o;
}

ExperimentSpec spec(const std::string &text) { return ExperimentSpec::from_json(json::parse(text)); }

Outcome ac6() {
    Outcome o;
    ExperimentSpec leak = spec(R"({"seed": 6, "trials": 200,
        "session": {"groups": 20, "checks_disabled": true, "check_count": 0, "reveal_fraction": 0},
        "adversary": {"type": "intercept-resend", "targets": [1, 2], "fakes": ["random"]},
        "metrics": ["eve-information"]})");
    const ExperimentResult lr = run_experiment(leak);
    const StatsRecord *info = lr.find("eve-information");

    ExperimentSpec detect = spec(R"({"seed": 66, "trials": 1000,
        "session": {"groups": 40, "check_count": 20, "abort_threshold": 0},
        "adversary": {"type": "intercept-resend", "targets": [1, 2], "fakes": ["random"]},
        "metrics": ["detection-probability"]})");
    const ExperimentResult dr = run_experiment(detect);
    std::size_t check_aborts = 0;
    for (const auto &t : dr.trials) check_aborts += t.status == SessionStatus::AbortedCheck;
    const double rate = double(check_aborts) / double(dr.trials.size());
    o.pass = info->estimate == 1.0 && info->trials > 0 && rate >= 0.999;
    o.detail = "checks off: Eve recovered " + fmt("%.3f", info->estimate) + " of " + std::to_string(info->trials) +
               " bits; M=20: aborted " + std::to_string(check_aborts) + "/1000";
    return o;
}

Outcome ac7() {
    Outcome o;
    ExperimentSpec guess = spec(R"({"seed": 7, "trials": 250,
        "session": {"groups": 40, "check_count": 20},
        "adversary": {"type": "disturbance", "mode": "random-op", "probability": 1.0},
        "metrics": ["eve-information"]})");
    const ExperimentResult gr = run_experiment(guess);
    const StatsRecord *info = gr.find("eve-information");

    ExperimentSpec reveal = spec(R"({"seed": 77, "trials": 1000,
        "session": {"groups": 40, "check_count": 20, "reveal_fraction": 1.0},
        "adversary": {"type": "disturbance", "mode": "random-op", "probability": 1.0},
        "metrics": ["detection-probability"]})");
    const ExperimentResult rr = run_experiment(reveal);
    std::size_t reveal_aborts = 0;
    for (const auto &t : rr.trials) reveal_aborts += t.status == SessionStatus::AbortedReveal;
    o.pass = info->trials >= 10000 && std::abs(info->estimate - 0.5) <= 0.02 && reveal_aborts == rr.trials.size();
    o.detail = "Eve fraction " + fmt("%.4f", info->estimate) + " over " + std::to_string(info->trials) +
               " bits; p=1 rho=1: reveal aborted " + std::to_string(reveal_aborts) + "/" +
               std::to_string(rr.trials.size());
    return o;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac8() {
    Outcome o;
    const char *text = R"({"seed": 8, "trials": 50,
        "session": {"groups": 16, "check_count": 6, "reveal_fraction": 0.5},
        "adversary": {"type": "disturbance", "mode": "random-op", "probability": 0.2},
        "metrics": ["check-error-rate", "detection-probability", "message-fidelity", "eve-information"]})";
    const ExperimentSpec s = spec(text);
    const ExperimentResult a = run_experiment(s);
    const ExperimentResult b = run_experiment(s);
    bool same = a.stats_csv() == b.stats_csv() && a.trials_jsonl() == b.trials_jsonl() &&
                run_single(s).transcript.to_jsonl() == run_single(s).transcript.to_jsonl();
    std::string how = "in-process stats, trials and transcript";

    if (!cli_path.empty()) {
        std::filesystem::create_directories(scratch);
        const auto cfg = scratch / "ac8.json";
        std::ofstream(cfg) << text;
        std::vector<std::string> outputs;
        for (int run = 0; run < 2; ++run) {
            const auto out = scratch / ("ac8_stats_" + std::to_string(run) + ".csv");
            const auto tr = scratch / ("ac8_transcript_" + std::to_string(run) + ".jsonl");
            const std::string q = "\"";
            const std::string stats_cmd = q + cli_path + q + " stats --config " + q + cfg.string() + q + " --out " + q +
                                          out.string() + q + " > /dev/null";
            const std::string run_cmd = q + cli_path + q + " run --config " + q + cfg.string() + q + " --out " + q +
                                        tr.string() + q + " > /dev/null";
            if (std::system(stats_cmd.c_str()) != 0 || std::system(run_cmd.c_str()) != 0) same = false;
            outputs.push_back(slurp(out) + "\x1f" + slurp(out.string() + ".trials.jsonl") + "\x1f" + slurp(tr));
        }
        same = same && outputs[0] == outputs[1] && outputs[0].size() > 3;
        how += " plus two CLI invocations (stats CSV, per-trial JSONL, transcript)";
    }
    o.pass = same;
    o.detail = how + (same ? " byte-identical" : " DIFFER");
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    if (argc > 1) cli_path = argv[1];
    scratch = argc > 2 ? std::filesystem::path(argv[2]) : std::filesystem::temp_directory_path() / "ghzqsdc_acceptance";

    struct Criterion {
        const char *id;
        const char *name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "GHZ basis fidelity", 1, ac1},
        {"AC2", "worked example", 1, ac2},
        {"AC3", "intercept-resend check error rates", 30, ac3},
        {"AC4", "attack-free round trip", 120, ac4},
        {"AC5", "decode bijectivity and toggle oracle", 60, ac5},
        {"AC6", "intercept-resend leakage and detection", 60, ac6},
        {"AC7", "disturbance information bound", 60, ac7},
        {"AC8", "determinism", 60, ac8},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("%s %s  %s: %s [%.2fs / %.0fs budget%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs, c.budget_s, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
