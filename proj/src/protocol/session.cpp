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

#include "protocol/session.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "protocol/decode.hpp"
#include "protocol/encoding.hpp"

namespace ghzqsdc {

namespace {

/// Accepts what a channel handler hands over: either the particle that was
/// put in transit or something the adversary holds.
QubitId accept_delivery(QuantumRegistry &reg, QubitId sent, QubitId delivered, Holder to) {
    if (delivered != sent && reg.holder(delivered).kind != Holder::Kind::Adversary) {
        throw Error(ErrorCode::kAccessViolation, "channel delivered a qubit it does not hold");
    }
    reg.set_holder(delivered, to);
    return delivered;
}

std::size_t reveal_count(double fraction, std::size_t k) {
    const double want = fraction * static_cast<double>(k);
    // Guard against 0.1 * 30 = 3.0000000000000004 rounding up to 4.
    const auto count = static_cast<std::size_t>(std::ceil(want - 1e-9));
    return std::min(count, k);
}

}  // namespace

std::string status_name(SessionStatus s) {
    switch (s) {
        case SessionStatus::Completed: return "completed";
        case SessionStatus::AbortedCheck: return "aborted-check";
        case SessionStatus::AbortedReveal: return "aborted-reveal";
        case SessionStatus::AbortedChannel: return "aborted-channel";
    }
    return "?";
}

std::vector<PreparedGroup> prepare_groups(const SessionConfig &config) {
    config.validate();
    const unsigned n = config.parties;
    std::vector<Holder> holders;
    for (unsigned p = 0; p < n; ++p) holders.push_back(Holder::of_party(p));
    std::vector<PreparedGroup> groups;
    groups.reserve(config.groups);
    for (std::uint32_t g = 0; g < config.groups; ++g) {
        Rng rng = Rng::derive(config.seed, g, StreamTag::kPrepare);
        const GhzIndex idx = config.forced_initial ? *config.forced_initial
                                                   : GhzIndex::from_ordinal(n, rng.below(1ULL << n));
        PreparedGroup group{GroupId{g}, idx, QuantumRegistry{}, {}};
        group.qubits = group.registry.add_ghz(idx, holders);
        groups.push_back(std::move(group));
    }
    return groups;
}

Holdings distribute(std::vector<PreparedGroup> &groups, unsigned parties, ChannelTap *channel) {
    Holdings h;
    h.by_party.assign(parties, std::vector<QubitId>(groups.size()));
    for (std::size_t g = 0; g < groups.size(); ++g) {
        PreparedGroup &group = groups[g];
        h.by_party[0][g] = group.qubits[0];
        for (std::uint32_t p = 1; p < parties; ++p) {
            const QubitId sent = group.qubits[p];
            group.registry.set_holder(sent, Holder::in_transit(p));
            std::optional<QubitId> got = sent;
            if (channel) {
                TransitAccess t(group.registry, sent, PartyId{p}, group.id, Leg::Forward);
                got = channel->forward(t);
            }
            if (!got) {
                h.dropped = {group.id, PartyId{p}};
                return h;
            }
            h.by_party[p][g] = accept_delivery(group.registry, sent, *got, Holder::of_party(p));
        }
    }
    return h;
}

CheckReport run_check_phase(const SessionConfig &config, std::vector<PreparedGroup> &groups,
                            const Holdings &holdings) {
    CheckReport report;
    if (config.check_count == 0) return report;
    // Party 1 chooses the positions and a basis for each.
    Rng select = Rng::derive(config.seed, 0, StreamTag::kCheckSelect);
    std::vector<std::size_t> positions = select.sample(groups.size(), config.check_count);
    std::sort(positions.begin(), positions.end());
    for (std::size_t pos : positions) {
        const MeasBasis basis = select.bit() ? MeasBasis::X : MeasBasis::Z;
        PreparedGroup &group = groups[pos];
        std::vector<QubitId> labels;
        for (const auto &held : holdings.by_party) labels.push_back(held[pos]);
        Rng rng = Rng::derive(config.seed, group.id.index, StreamTag::kCheckMeasure);
        std::string outcome = group.registry.measure_joint(labels, basis, rng);
        const bool ok = outcome_is_consistent(group.initial, basis, outcome);
        report.errors += ok ? 0 : 1;
        report.records.push_back({group.id, basis, std::move(outcome), ok});
    }
    report.error_rate = static_cast<double>(report.errors) / static_cast<double>(report.records.size());
    report.aborted = report.error_rate > config.abort_threshold;
    return report;
}

ReturnedParticles encode_phase(const SessionConfig &config, const MessagePlan &plan,
                               std::vector<PreparedGroup> &groups, const Holdings &holdings,
                               const std::vector<GroupId> &message_groups, ChannelTap *channel) {
    const unsigned n = config.parties;
    ReturnedParticles out;
    out.labels.assign(message_groups.size(), std::vector<QubitId>(n));
    for (std::size_t k = 0; k < message_groups.size(); ++k) {
        const std::uint32_t g = message_groups[k].index;
        PreparedGroup &group = groups[g];
        QuantumRegistry &reg = group.registry;
        for (std::uint32_t p = 1; p < n; ++p) {
            const QubitId q = holdings.by_party[p][g];
            reg.apply_pauli(q, encode_bit(plan.bits[p][k]));
            reg.set_holder(q, Holder::in_transit(0));
            std::optional<QubitId> got = q;
            if (channel) {
                TransitAccess t(reg, q, PartyId{p}, group.id, Leg::Backward);
                got = channel->backward(t);
            }
            if (!got) {
                out.dropped = {group.id, PartyId{p}};
                return out;
            }
            out.labels[k][p] = accept_delivery(reg, q, *got, Holder::of_party(0));
        }
        const QubitId a = holdings.by_party[0][g];
        reg.apply_pauli(a, encode_dibit(plan.bits[0][2 * k], plan.bits[0][2 * k + 1]));
        out.labels[k][0] = a;
    }
    return out;
}

std::vector<Announcement> readout_and_announce(const SessionConfig &config, std::vector<PreparedGroup> &groups,
                                               const std::vector<GroupId> &message_groups,
                                               const std::vector<std::vector<QubitId>> &returned) {
    std::vector<Announcement> out;
    out.reserve(message_groups.size());
    for (std::size_t k = 0; k < message_groups.size(); ++k) {
        PreparedGroup &group = groups[message_groups[k].index];
        Rng rng = Rng::derive(config.seed, group.id.index, StreamTag::kReadout);
        const GhzIndex measured = group.registry.ghz_measure(returned[k], rng);
        out.push_back({group.id, group.initial, measured});
    }
    return out;
}

std::vector<PauliOp> own_ops(PartyId viewer, const MessagePlan &plan, std::size_t message_groups) {
    std::vector<PauliOp> ops(message_groups);
    const auto &bits = plan.bits.at(viewer.index);
    for (std::size_t k = 0; k < message_groups; ++k) {
        ops[k] = viewer.index == 0 ? encode_dibit(bits.at(2 * k), bits.at(2 * k + 1)) : encode_bit(bits.at(k));
    }
    return ops;
}

DecodedView decode_view(PartyId viewer, unsigned parties, const std::vector<PauliOp> &own,
                        const std::vector<Announcement> &announcements) {
    if (own.size() != announcements.size()) {
        throw Error(ErrorCode::kLengthMismatch, "one own op per announcement required");
    }
    const std::size_t k_total = announcements.size();
    DecodedView view;
    view.viewer = viewer;
    view.messages.resize(parties);
    for (std::uint32_t p = 0; p < parties; ++p) {
        if (p == viewer.index) continue;
        view.messages[p].assign(p == 0 ? 2 * k_total : k_total, 0);
    }
    view.undecodable.assign(k_total, false);
    for (std::size_t k = 0; k < k_total; ++k) {
        std::vector<PauliOp> ops;
        try {
            ops = decode_others(viewer, parties, own[k], announcements[k].initial, announcements[k].measured);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::kNoSolution) throw;
            view.undecodable[k] = true;
            continue;
        }
        for (std::uint32_t p = 0; p < parties; ++p) {
            if (p == viewer.index) continue;
            if (p == 0) {
                const auto d = decode_dibit(ops[0]);
                view.messages[0][2 * k] = d[0];
                view.messages[0][2 * k + 1] = d[1];
            } else {
                view.messages[p][k] = decode_bit(ops[p]).value();
            }
        }
    }
    return view;
}

RevealReport reveal_check(const SessionConfig &config, const MessagePlan &plan, const DecodedView &alice_view) {
    RevealReport report;
    const std::size_t k_total = alice_view.undecodable.size();
    const std::size_t count = reveal_count(config.reveal_fraction, k_total);
    for (std::uint32_t p = 1; p < config.parties; ++p) {
        Rng rng = Rng::derive(config.seed, p, StreamTag::kReveal);
        RevealReport::Disclosure d;
        d.party = PartyId{p};
        d.positions = rng.sample(k_total, count);
        std::sort(d.positions.begin(), d.positions.end());
        for (std::size_t pos : d.positions) {
            const std::uint8_t truth = plan.bits.at(p).at(pos);
            d.bits.push_back(truth);
            if (alice_view.undecodable[pos] || alice_view.messages.at(p).at(pos) != truth) ++report.mismatches;
        }
        report.revealed += d.positions.size();
        report.disclosures.push_back(std::move(d));
    }
    report.aborted = report.mismatches > 0;
    return report;
}

SessionResult run_session(const SessionConfig &config, const MessagePlan &plan, ChannelTap *channel) {
    config.validate();
    const unsigned n = config.parties;
    const std::size_t k_total = config.message_groups();
    plan.validate(n, k_total);

    SessionResult result;
    Transcript &log = result.transcript;
    auto finish = [&]() -> SessionResult {
        if (channel && channel->report()) result.eve = *channel->report();
        return std::move(result);
    };

    std::vector<PreparedGroup> groups = prepare_groups(config);
    for (const auto &g : groups) log.record_prepare(g.id, g.initial);

    Holdings holdings = distribute(groups, n, channel);
    if (holdings.dropped) {
        result.status = SessionStatus::AbortedChannel;
        log.record_abort("distribute", "particle for party " + std::to_string(holdings.dropped->second.index) +
                                           " of group " + std::to_string(holdings.dropped->first.index) +
                                           " never arrived");
        return finish();
    }
    for (const auto &g : groups) log.record_distribute(g.id, n);

    result.check = run_check_phase(config, groups, holdings);
    if (!result.check.records.empty()) {
        std::vector<GroupId> ids;
        std::vector<MeasBasis> bases;
        for (const auto &r : result.check.records) {
            ids.push_back(r.group);
            bases.push_back(r.basis);
        }
        log.record_check_selection(ids, bases);
        for (const auto &r : result.check.records) log.record_check_outcome(r.group, r.basis, r.outcome, r.consistent);
        log.record_check_summary(result.check.errors, result.check.records.size(), result.check.error_rate,
                                 result.check.aborted);
    }
    if (result.check.aborted) {
        result.status = SessionStatus::AbortedCheck;
        log.record_abort("check", "error rate above threshold");
        if (!config.proceed_on_check_failure) return finish();
    }

    {
        std::vector<bool> checked(groups.size(), false);
        for (const auto &r : result.check.records) checked[r.group.index] = true;
        for (std::uint32_t g = 0; g < groups.size(); ++g) {
            if (!checked[g]) result.message_groups.push_back(GroupId{g});
        }
    }

    ReturnedParticles returned = encode_phase(config, plan, groups, holdings, result.message_groups, channel);
    if (returned.dropped) {
        result.status = SessionStatus::AbortedChannel;
        log.record_abort("encode", "returned particle of party " + std::to_string(returned.dropped->second.index) +
                                       " in group " + std::to_string(returned.dropped->first.index) +
                                       " never arrived");
        return finish();
    }

    result.announcements = readout_and_announce(config, groups, result.message_groups, returned.labels);
    for (const auto &a : result.announcements) {
        log.record_announcement(a.group, a.initial, a.measured);
        if (channel) channel->observe(a);
    }

    for (std::uint32_t p = 0; p < n; ++p) {
        const PartyId viewer{p};
        result.views.push_back(decode_view(viewer, n, own_ops(viewer, plan, k_total), result.announcements));
    }

    result.reveal = reveal_check(config, plan, result.views[0]);
    for (const auto &d : result.reveal->disclosures) {
        std::string bits;
        for (auto b : d.bits) bits.push_back(b ? '1' : '0');
        log.record_reveal(d.party, d.positions, bits);
    }
    log.record_reveal_summary(result.reveal->revealed, result.reveal->mismatches, result.reveal->aborted);
    result.payload_bits = (2 + (n - 1)) * k_total - result.reveal->revealed;
    if (result.reveal->aborted && result.status == SessionStatus::Completed) {
        result.status = SessionStatus::AbortedReveal;
        log.record_abort("reveal", "disclosed bits disagree with Alice's decoding");
    }
    if (result.status == SessionStatus::Completed) log.record_complete(result.payload_bits);
    return finish();
}

}  // namespace ghzqsdc
