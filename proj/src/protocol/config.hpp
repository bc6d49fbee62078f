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

#ifndef GHZQSDC_PROTOCOL_CONFIG_HPP
#define GHZQSDC_PROTOCOL_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ids.hpp"
#include "quantum/ghz.hpp"
#include "rng.hpp"

namespace ghzqsdc {

inline constexpr unsigned kMinParties = 3;
inline constexpr unsigned kMaxParties = 10;

/// One protocol run. `groups` is the total number of GHZ groups prepared and
/// `check_count` of them are sacrificed to the eavesdropping check.
struct SessionConfig {
    unsigned parties = 3;
    std::size_t groups = 40;
    std::size_t check_count = 20;
    double abort_threshold = 0.0;
    double reveal_fraction = 0.1;
    std::uint64_t seed = 0;

    // Diagnostics. Not part of the protocol proper.
    bool checks_disabled = false;           // allows check_count == 0
    bool proceed_on_check_failure = false;  // keep running after a failed check
    std::optional<GhzIndex> forced_initial; // every group starts in this state

    std::size_t message_groups() const { return groups - check_count; }
    /// Throws Error(kConfig) describing the first violated constraint.
    void validate() const;
};

/// Secret bits per party. Alice sends two bits per message group (bits 2k and
/// 2k+1 for group k); every other party sends one.
struct MessagePlan {
    std::vector<std::vector<std::uint8_t>> bits;

    static MessagePlan random(unsigned parties, std::size_t message_groups, Rng &rng);
    /// Parses one 0/1 string per party.
    static MessagePlan from_strings(const std::vector<std::string> &per_party);

    void validate(unsigned parties, std::size_t message_groups) const;
    std::string to_string(PartyId p) const;
};

}  // namespace ghzqsdc

#endif
