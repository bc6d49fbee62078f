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

#ifndef GHZQSDC_ADVERSARY_EVE_REPORT_HPP
#define GHZQSDC_ADVERSARY_EVE_REPORT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ids.hpp"

namespace ghzqsdc {

struct MessagePlan;

/// What the adversary claims to know after a session.
struct EveReport {
    struct BitRecord {
        GroupId group;
        PartyId party;
        std::uint8_t bit = 0;
    };
    struct DibitRecord {
        GroupId group;
        std::array<std::uint8_t, 2> bits{};
    };

    /// True when the bits are guesses with no physical basis (disturbance attacks).
    bool guesses_only = false;
    std::vector<BitRecord> party_bits;
    std::vector<DibitRecord> alice_dibits;
    std::vector<std::string> actions;
};

struct PartyInformation {
    std::size_t recovered = 0;
    std::size_t correct = 0;
    double fraction() const { return recovered ? static_cast<double>(correct) / recovered : 0.0; }
};

/// Per-party exact-match statistics of Eve's bits against the true plan.
/// `message_groups[k]` is the group that carried message position k. Parties
/// with no recorded bits are absent from the map.
std::map<std::uint32_t, PartyInformation> eve_information(const EveReport &report, const MessagePlan &truth,
                                                          std::span<const GroupId> message_groups);

}  // namespace ghzqsdc

#endif
