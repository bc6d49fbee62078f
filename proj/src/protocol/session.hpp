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

#ifndef GHZQSDC_PROTOCOL_SESSION_HPP
#define GHZQSDC_PROTOCOL_SESSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "adversary/channel.hpp"
#include "adversary/eve_report.hpp"
#include "protocol/config.hpp"
#include "protocol/transcript.hpp"
#include "quantum/registry.hpp"

namespace ghzqsdc {

enum class SessionStatus : std::uint8_t { Completed, AbortedCheck, AbortedReveal, AbortedChannel };

std::string status_name(SessionStatus s);

/// One GHZ group. `initial` is Alice's private record.
struct PreparedGroup {
    GroupId id;
    GhzIndex initial;
    QuantumRegistry registry;
    std::vector<QubitId> qubits;  // qubit k was created for party k
};

/// holdings[p][g]: the label party p holds for group g (party 0 keeps its own qubit).
struct Holdings {
    std::vector<std::vector<QubitId>> by_party;
    std::optional<std::pair<GroupId, PartyId>> dropped;
};

struct CheckReport {
    struct Record {
        GroupId group;
        MeasBasis basis;
        std::string outcome;  // one character per party, in party order
        bool consistent = true;
    };
    std::vector<Record> records;
    std::size_t errors = 0;
    double error_rate = 0.0;
    bool aborted = false;
};

/// One party's reading of everyone else's messages.
struct DecodedView {
    PartyId viewer;
    std::vector<std::vector<std::uint8_t>> messages;  // viewer's own entry stays empty
    std::vector<bool> undecodable;                    // per message position
};

struct RevealReport {
    struct Disclosure {
        PartyId party;
        std::vector<std::size_t> positions;
        std::vector<std::uint8_t> bits;
    };
    std::vector<Disclosure> disclosures;
    std::size_t revealed = 0;
    std::size_t mismatches = 0;
    bool aborted = false;
};

struct SessionResult {
    SessionStatus status = SessionStatus::Completed;
    CheckReport check;
    std::vector<GroupId> message_groups;
    std::vector<Announcement> announcements;
    std::vector<DecodedView> views;  // indexed by viewer; empty if readout never happened
    std::optional<RevealReport> reveal;
    std::size_t payload_bits = 0;    // message bits not disclosed by the reveal check
    std::optional<EveReport> eve;
    Transcript transcript;
};

std::vector<PreparedGroup> prepare_groups(const SessionConfig &config);

/// Sends qubit k of every group to party k through `channel` (nullptr: direct).
Holdings distribute(std::vector<PreparedGroup> &groups, unsigned parties, ChannelTap *channel);

CheckReport run_check_phase(const SessionConfig &config, std::vector<PreparedGroup> &groups,
                            const Holdings &holdings);

/// labels[k]: the qubits in Alice's hands for message position k, in party order.
struct ReturnedParticles {
    std::vector<std::vector<QubitId>> labels;
    std::optional<std::pair<GroupId, PartyId>> dropped;
};

/// Parties j >= 1 encode their k-th bit on their particle of the k-th message
/// group and send it back through the channel; Alice then encodes her k-th dibit.
ReturnedParticles encode_phase(const SessionConfig &config, const MessagePlan &plan,
                                               std::vector<PreparedGroup> &groups, const Holdings &holdings,
                                               const std::vector<GroupId> &message_groups, ChannelTap *channel);

std::vector<Announcement> readout_and_announce(const SessionConfig &config, std::vector<PreparedGroup> &groups,
                                               const std::vector<GroupId> &message_groups,
                                               const std::vector<std::vector<QubitId>> &returned);

/// The viewer's ops per message position, as dictated by its own message.
std::vector<PauliOp> own_ops(PartyId viewer, const MessagePlan &plan, std::size_t message_groups);

/// Groups with no consistent solution are marked undecodable and their bits left 0.
DecodedView decode_view(PartyId viewer, unsigned parties, const std::vector<PauliOp> &own,
                        const std::vector<Announcement> &announcements);

RevealReport reveal_check(const SessionConfig &config, const MessagePlan &plan, const DecodedView &alice_view);

SessionResult run_session(const SessionConfig &config, const MessagePlan &plan, ChannelTap *channel);

}  // namespace ghzqsdc

#endif
