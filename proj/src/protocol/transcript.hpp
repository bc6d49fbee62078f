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

#ifndef GHZQSDC_PROTOCOL_TRANSCRIPT_HPP
#define GHZQSDC_PROTOCOL_TRANSCRIPT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ids.hpp"
#include "quantum/ghz.hpp"
#include "quantum/pauli.hpp"

namespace ghzqsdc {

/// Append-only event log of a session. Serializes to one JSON object per line
/// with a fixed field order: seq, event, then event-specific fields.
class Transcript {
public:
    struct Event {
        std::string kind;
        nlohmann::ordered_json fields;
    };

    /// Alice's private record of a group's initial index.
    void record_prepare(GroupId group, const GhzIndex &initial);
    void record_distribute(GroupId group, unsigned parties);
    void record_check_selection(const std::vector<GroupId> &groups, const std::vector<MeasBasis> &bases);
    void record_check_outcome(GroupId group, MeasBasis basis, const std::string &outcome, bool consistent);
    void record_check_summary(std::size_t errors, std::size_t checked, double error_rate, bool aborted);
    void record_announcement(GroupId group, const GhzIndex &initial, const GhzIndex &measured);
    void record_reveal(PartyId party, const std::vector<std::size_t> &positions, const std::string &bits);
    void record_reveal_summary(std::size_t revealed, std::size_t mismatches, bool aborted);
    void record_abort(const std::string &phase, const std::string &reason);
    void record_complete(std::size_t payload_bits);

    const std::vector<Event> &events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    std::string to_jsonl() const;
    /// Group ids that appear in check-selection events and in announcements.
    std::vector<GroupId> checked_groups() const;
    std::vector<GroupId> announced_groups() const;

private:
    void append(std::string kind, nlohmann::ordered_json fields);

    std::vector<Event> events_;
};

}  // namespace ghzqsdc

#endif
