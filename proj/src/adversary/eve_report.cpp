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

#include "adversary/eve_report.hpp"

#include <algorithm>

#include "error.hpp"
#include "protocol/config.hpp"

namespace ghzqsdc {

std::map<std::uint32_t, PartyInformation> eve_information(const EveReport &report, const MessagePlan &truth,
                                                          std::span<const GroupId> message_groups) {
    auto position_of = [&](GroupId g) -> std::size_t {
        auto it = std::find(message_groups.begin(), message_groups.end(), g);
        if (it == message_groups.end()) {
            throw Error(ErrorCode::kInvalidArgument, "Eve reported a group that carried no message");
        }
        return static_cast<std::size_t>(it - message_groups.begin());
    };
    std::map<std::uint32_t, PartyInformation> out;
    for (const auto &rec : report.party_bits) {
        const std::size_t k = position_of(rec.group);
        auto &info = out[rec.party.index];
        ++info.recovered;
        if (truth.bits.at(rec.party.index).at(k) == rec.bit) ++info.correct;
    }
    for (const auto &rec : report.alice_dibits) {
        const std::size_t k = position_of(rec.group);
        auto &info = out[0];
        for (std::size_t b = 0; b < 2; ++b) {
            ++info.recovered;
            if (truth.bits.at(0).at(2 * k + b) == rec.bits[b]) ++info.correct;
        }
    }
    return out;
}

}  // namespace ghzqsdc
