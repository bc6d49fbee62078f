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

#ifndef GHZQSDC_IDS_HPP
#define GHZQSDC_IDS_HPP

#include <compare>
#include <cstdint>

namespace ghzqsdc {

/// 0 is Alice (preparer and GHZ-basis measurer); k >= 1 are the other parties.
/// A party's index equals its qubit position inside every group.
struct PartyId {
    std::uint32_t index = 0;
    friend auto operator<=>(const PartyId &, const PartyId &) = default;
};

inline constexpr PartyId kAlice{0};

struct GroupId {
    std::uint32_t index = 0;
    friend auto operator<=>(const GroupId &, const GroupId &) = default;
};

}  // namespace ghzqsdc

#endif
