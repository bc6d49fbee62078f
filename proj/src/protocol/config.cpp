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

#include "protocol/config.hpp"

#include "error.hpp"

namespace ghzqsdc {

void SessionConfig::validate() const {
    auto fail = [](const std::string &msg) { throw Error(ErrorCode::kConfig, msg); };
    if (parties < kMinParties || parties > kMaxParties) {
        fail("parties must be in [" + std::to_string(kMinParties) + ", " + std::to_string(kMaxParties) + "]");
    }
    if (groups == 0) fail("groups must be positive");
    if (checks_disabled) {
        if (check_count != 0) fail("check_count must be 0 when checks are disabled");
    } else if (check_count == 0 || check_count >= groups) {
        fail("check_count must satisfy 0 < check_count < groups");
    }
    if (!(abort_threshold >= 0.0 && abort_threshold <= 1.0)) fail("abort_threshold must be in [0, 1]");
    if (!(reveal_fraction >= 0.0 && reveal_fraction <= 1.0)) fail("reveal_fraction must be in [0, 1]");
    if (forced_initial && forced_initial->n != parties) fail("forced initial index width must equal parties");
}

MessagePlan MessagePlan::random(unsigned parties, std::size_t message_groups, Rng &rng) {
    MessagePlan plan;
    plan.bits.resize(parties);
    for (unsigned p = 0; p < parties; ++p) {
        const std::size_t len = p == 0 ? 2 * message_groups : message_groups;
        plan.bits[p].resize(len);
        for (auto &b : plan.bits[p]) b = rng.bit();
    }
    return plan;
}

MessagePlan MessagePlan::from_strings(const std::vector<std::string> &per_party) {
    MessagePlan plan;
    for (const std::string &s : per_party) {
        std::vector<std::uint8_t> bits;
        for (char c : s) {
            if (c != '0' && c != '1') throw Error(ErrorCode::kConfig, "message must be a 0/1 string: " + s);
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        plan.bits.push_back(std::move(bits));
    }
    return plan;
}

void MessagePlan::validate(unsigned parties, std::size_t message_groups) const {
    if (bits.size() != parties) throw Error(ErrorCode::kConfig, "message plan needs one entry per party");
    for (unsigned p = 0; p < parties; ++p) {
        const std::size_t want = p == 0 ? 2 * message_groups : message_groups;
        if (bits[p].size() != want) {
            throw Error(ErrorCode::kConfig, "party " + std::to_string(p) + " message must have " +
                                                std::to_string(want) + " bits, got " +
                                                std::to_string(bits[p].size()));
        }
        for (auto b : bits[p]) {
            if (b > 1) throw Error(ErrorCode::kConfig, "message bits must be 0 or 1");
        }
    }
}

std::string MessagePlan::to_string(PartyId p) const {
    std::string out;
    for (auto b : bits.at(p.index)) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace ghzqsdc
