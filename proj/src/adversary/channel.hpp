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

#ifndef GHZQSDC_ADVERSARY_CHANNEL_HPP
#define GHZQSDC_ADVERSARY_CHANNEL_HPP

#include <optional>

#include "adversary/eve_report.hpp"
#include "ids.hpp"
#include "quantum/ghz.hpp"
#include "quantum/registry.hpp"
#include "rng.hpp"

namespace ghzqsdc {

enum class Leg : std::uint8_t { Forward, Backward };

/// Alice's public announcement for one message group.
struct Announcement {
    GroupId group;
    GhzIndex initial;
    GhzIndex measured;
};

/// What a channel handler may touch: the qubit currently in transit and
/// qubits the adversary already holds. Everything else in the registry is off
/// limits and raises kAccessViolation.
class TransitAccess {
public:
    TransitAccess(QuantumRegistry &registry, QubitId in_transit, PartyId party, GroupId group, Leg leg)
        : registry_(registry), in_transit_(in_transit), party_(party), group_(group), leg_(leg) {}

    QubitId in_transit() const { return in_transit_; }
    PartyId party() const { return party_; }
    GroupId group() const { return group_; }
    Leg leg() const { return leg_; }

    /// Moves a reachable qubit into adversary storage.
    void keep(QubitId q);
    /// Fresh adversary-held qubit in state a0|0> + a1|1>.
    QubitId prepare(Amplitude a0, Amplitude a1);
    int measure(QubitId q, MeasBasis basis, Rng &rng);
    void apply(QubitId q, PauliOp op);

private:
    void require_access(QubitId q) const;

    QuantumRegistry &registry_;
    QubitId in_transit_;
    PartyId party_;
    GroupId group_;
    Leg leg_;
};

/// Quantum channel between Alice and the other parties. The forward leg
/// carries particles out in the distribution step, the backward leg carries
/// encoded particles home. A handler returns the label that arrives, or
/// nullopt to drop the particle.
class ChannelTap {
public:
    virtual ~ChannelTap() = default;

    virtual std::optional<QubitId> forward(TransitAccess &t) { return t.in_transit(); }
    virtual std::optional<QubitId> backward(TransitAccess &t) { return t.in_transit(); }
    /// Public announcements are broadcast to everyone, including the adversary.
    virtual void observe(const Announcement &) {}
    virtual const EveReport *report() const { return nullptr; }
};

}  // namespace ghzqsdc

#endif
