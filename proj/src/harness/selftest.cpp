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

#include "harness/selftest.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "adversary/attacks.hpp"
#include "error.hpp"
#include "protocol/decode.hpp"
#include "protocol/encoding.hpp"
#include "protocol/session.hpp"
#include "quantum/ghz.hpp"

namespace ghzqsdc {

namespace {

std::vector<QubitId> labels(unsigned n) {
    std::vector<QubitId> out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = QubitId{i};
    return out;
}

std::string basis_completeness() {
    for (unsigned n = 2; n <= 6; ++n) {
        std::vector<StateVector> states;
        for (std::uint64_t o = 0; o < (1ULL << n); ++o) states.push_back(ghz_state(GhzIndex::from_ordinal(n, o), labels(n)));
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = 0; j < states.size(); ++j) {
                const double want = i == j ? 1.0 : 0.0;
                if (std::abs(inner_product(states[i], states[j]) - want) > kNormTolerance) {
                    return "n=" + std::to_string(n) + " states " + std::to_string(i) + "," + std::to_string(j);
                }
            }
        }
    }
    return "";
}

std::string toggle_soundness() {
    for (unsigned n = 2; n <= 5; ++n) {
        for (std::uint64_t o = 0; o < (1ULL << n); ++o) {
            const GhzIndex idx = GhzIndex::from_ordinal(n, o);
            for (unsigned q = 0; q < n; ++q) {
                for (PauliOp op : kAllPaulis) {
                    StateVector s = ghz_state(idx, labels(n));
                    s.apply(QubitId{q}, op);
                    const StateVector want = ghz_state(idx ^ pauli_delta(op, q, n), labels(n));
                    if (std::abs(std::abs(inner_product(want, s)) - 1.0) > kNormTolerance) {
                        return "n=" + std::to_string(n) + " q=" + std::to_string(q) + " op=" +
                               std::string(pauli_name(op));
                    }
                }
            }
        }
    }
    return "";
}

std::string parity_law() {
    for (unsigned n = 2; n <= 6; ++n) {
        for (std::uint64_t o = 0; o < (1ULL << n); ++o) {
            const GhzIndex idx = GhzIndex::from_ordinal(n, o);
            const StateVector s = ghz_state(idx, labels(n));
            // Amplitude on an all-X product ket: sum over z of (-1)^{x.z} a_z / 2^{n/2}.
            for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
                double amp = 0.0;
                for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
                    const double sign = (std::popcount(x & z) & 1) ? -1.0 : 1.0;
                    amp += sign * s.amplitude(z).real();
                }
                if (std::abs(amp) < 1e-9) continue;
                if (static_cast<unsigned>(std::popcount(x) & 1) != idx.phase) {
                    return "n=" + std::to_string(n) + " index " + display_label(idx);
                }
            }
        }
    }
    return "";
}

std::string decode_bijectivity() {
    for (unsigned n = 3; n <= 6; ++n) {
        for (std::uint32_t r = 0; r < n; ++r) {
            const std::vector<PauliOp> own_choices =
                r == 0 ? std::vector<PauliOp>(kAllPaulis.begin(), kAllPaulis.end())
                       : std::vector<PauliOp>{PauliOp::I, PauliOp::IY};
            for (PauliOp own : own_choices) {
                const GhzIndex initial = GhzIndex::from_ordinal(n, 0);
                std::set<std::uint64_t> seen;
                const std::uint64_t others = (r == 0) ? (1ULL << (n - 1)) : (4ULL << (n - 2));
                for (std::uint64_t combo = 0; combo < others; ++combo) {
                    IndexDelta d = pauli_delta(own, r, n);
                    std::uint64_t bits = combo;
                    for (std::uint32_t p = 0; p < n; ++p) {
                        if (p == r) continue;
                        PauliOp op;
                        if (p == 0) {
                            op = kAllPaulis[bits & 3];
                            bits >>= 2;
                        } else {
                            op = (bits & 1) ? PauliOp::IY : PauliOp::I;
                            bits >>= 1;
                        }
                        d = d ^ pauli_delta(op, p, n);
                    }
                    if (!seen.insert((initial ^ d).ordinal()).second) {
                        return "n=" + std::to_string(n) + " viewer " + std::to_string(r) + " collides";
                    }
                }
            }
        }
    }
    return "";
}

std::string worked_example() {
    QuantumRegistry reg;
    const std::vector<Holder> holders = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    const GhzIndex start = index_from_display_label("000");
    const auto qs = reg.add_ghz(start, holders);
    reg.apply_pauli(qs[0], PauliOp::X);
    reg.apply_pauli(qs[2], PauliOp::IY);
    Rng rng(1);
    const GhzIndex measured = reg.ghz_measure(qs, rng);
    if (display_label(measured) != "101") return "measured " + display_label(measured);
    const auto alice = decode_others(PartyId{0}, 3, PauliOp::X, start, measured);
    const auto bob = decode_others(PartyId{1}, 3, PauliOp::I, start, measured);
    const auto charlie = decode_others(PartyId{2}, 3, PauliOp::IY, start, measured);
    const std::vector<PauliOp> want = {PauliOp::X, PauliOp::I, PauliOp::IY};
    if (alice != want || bob != want || charlie != want) return "decoded ops differ";
    return "";
}

std::string attack_free_roundtrip() {
    for (unsigned n = 3; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            SessionConfig cfg;
            cfg.parties = n;
            cfg.groups = 16;
            cfg.check_count = 6;
            cfg.seed = seed;
            Rng rng = Rng::derive(seed, 0, StreamTag::kMessages);
            const MessagePlan plan = MessagePlan::random(n, cfg.message_groups(), rng);
            NullChannel channel;
            const SessionResult r = run_session(cfg, plan, &channel);
            if (r.status != SessionStatus::Completed || r.check.errors != 0) {
                return "n=" + std::to_string(n) + " seed " + std::to_string(seed) + " " + status_name(r.status);
            }
            for (const auto &view : r.views) {
                for (std::uint32_t p = 0; p < n; ++p) {
                    if (p != view.viewer.index && view.messages[p] != plan.bits[p]) {
                        return "viewer " + std::to_string(view.viewer.index) + " misread party " + std::to_string(p);
                    }
                }
            }
        }
    }
    return "";
}

}  // namespace

std::vector<SelfTestCase> run_selftest() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"ghz-basis-orthonormal (n<=6)", basis_completeness},
        {"pauli-toggle-soundness (n<=5)", toggle_soundness},
        {"x-basis-parity-law (n<=6)", parity_law},
        {"decode-bijectivity (n<=6)", decode_bijectivity},
        {"worked-example 000 -> 101", worked_example},
        {"attack-free-roundtrip (n=3..5)", attack_free_roundtrip},
    };
    std::vector<SelfTestCase> out;
    for (const auto &[name, fn] : checks) {
        SelfTestCase c{name, false, ""};
        try {
            c.detail = fn();
            c.passed = c.detail.empty();
        } catch (const std::exception &e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ghzqsdc
