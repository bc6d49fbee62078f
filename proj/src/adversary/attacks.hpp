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

#ifndef GHZQSDC_ADVERSARY_ATTACKS_HPP
#define GHZQSDC_ADVERSARY_ATTACKS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adversary/channel.hpp"

namespace ghzqsdc {

/// Identity on both legs.
class NullChannel final : public ChannelTap {};

enum class FakeState : std::uint8_t { Zero, One, Plus, Minus, Random };

std::string fake_state_name(FakeState s);
FakeState parse_fake_state(const std::string &s);

struct InterceptResendConfig {
    std::vector<PartyId> targets;  // subset of 1..n-1, nonempty
    std::vector<FakeState> fakes;  // one per target, or a single entry used for all

    void validate(unsigned parties) const;
    FakeState fake_for(std::size_t target_slot) const;
};

/// Eve keeps the genuine outbound particle, sends a fake she prepared, reads
/// the party's op off the returned fake, copies that op onto the genuine
/// particle and forwards it to Alice.
class InterceptResend final : public ChannelTap {
public:
    InterceptResend(InterceptResendConfig cfg, std::uint64_t seed);

    std::optional<QubitId> forward(TransitAccess &t) override;
    std::optional<QubitId> backward(TransitAccess &t) override;
    void observe(const Announcement &a) override;
    const EveReport *report() const override { return &report_; }

private:
    struct Stored {
        QubitId genuine;
        QubitId fake;
        FakeState prepared;
    };
    std::optional<std::size_t> target_slot(PartyId p) const;

    InterceptResendConfig cfg_;
    std::uint64_t seed_;
    std::map<std::pair<GroupId, PartyId>, Stored> stored_;
    std::map<std::pair<GroupId, PartyId>, std::uint8_t> learned_;
    EveReport report_;
};

struct DisturbanceConfig {
    enum class Mode : std::uint8_t { RandomOp, Flip, MeasureZ };
    Mode mode = Mode::RandomOp;
    double probability = 1.0;
    std::vector<PartyId> targets;  // empty means every non-Alice party

    void validate(unsigned parties) const;
};

std::string disturbance_mode_name(DisturbanceConfig::Mode m);
DisturbanceConfig::Mode parse_disturbance_mode(const std::string &s);

/// Tampers with particles on their way back to Alice: with probability p it
/// applies a uniformly drawn op from {I, iY} (RandomOp), always iY (Flip), or
/// a Z measurement (MeasureZ). Forward leg is untouched.
class Disturbance final : public ChannelTap {
public:
    Disturbance(DisturbanceConfig cfg, std::uint64_t seed);

    std::optional<QubitId> backward(TransitAccess &t) override;
    const EveReport *report() const override { return &report_; }

private:
    DisturbanceConfig cfg_;
    std::uint64_t seed_;
    EveReport report_;
};

struct AdversarySpec {
    enum class Kind : std::uint8_t { None, InterceptResend, Disturbance };
    Kind kind = Kind::None;
    InterceptResendConfig intercept;
    DisturbanceConfig disturbance;

    void validate(unsigned parties) const;
};

std::unique_ptr<ChannelTap> make_channel(const AdversarySpec &spec, std::uint64_t seed);

}  // namespace ghzqsdc

#endif
