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

#include "adversary/attacks.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "protocol/encoding.hpp"

namespace ghzqsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Rng handler_rng(std::uint64_t seed, GroupId g, PartyId p, Leg leg) {
    return Rng::derive(seed, g.index, StreamTag::kAdversary).split(2ULL * p.index + static_cast<std::uint64_t>(leg));
}

void validate_targets(const std::vector<PartyId> &targets, unsigned parties, bool allow_empty) {
    if (targets.empty() && !allow_empty) throw Error(ErrorCode::kConfig, "adversary needs at least one target");
    std::set<std::uint32_t> seen;
    for (PartyId p : targets) {
        if (p.index == 0 || p.index >= parties) {
            throw Error(ErrorCode::kConfig, "adversary targets must be parties 1..n-1");
        }
        if (!seen.insert(p.index).second) throw Error(ErrorCode::kConfig, "duplicate adversary target");
    }
}

}  // namespace

std::string fake_state_name(FakeState s) {
    switch (s) {
        case FakeState::Zero: return "0";
        case FakeState::One: return "1";
        case FakeState::Plus: return "+";
        case FakeState::Minus: return "-";
        case FakeState::Random: return "random";
    }
    return "?";
}

FakeState parse_fake_state(const std::string &s) {
    if (s == "0") return FakeState::Zero;
    if (s == "1") return FakeState::One;
    if (s == "+") return FakeState::Plus;
    if (s == "-") return FakeState::Minus;
    if (s == "random") return FakeState::Random;
    throw Error(ErrorCode::kConfig, "unknown fake state '" + s + "' (expected 0, 1, +, - or random)");
}

void InterceptResendConfig::validate(unsigned parties) const {
    validate_targets(targets, parties, false);
    if (fakes.size() != 1 && fakes.size() != targets.size()) {
        throw Error(ErrorCode::kConfig, "intercept-resend needs one fake state, or one per target");
    }
}

FakeState InterceptResendConfig::fake_for(std::size_t slot) const {
    return fakes.size() == 1 ? fakes[0] : fakes.at(slot);
}

InterceptResend::InterceptResend(InterceptResendConfig cfg, std::uint64_t seed)
    : cfg_(std::move(cfg)), seed_(seed) {}

std::optional<std::size_t> InterceptResend::target_slot(PartyId p) const {
    auto it = std::find(cfg_.targets.begin(), cfg_.targets.end(), p);
    if (it == cfg_.targets.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cfg_.targets.begin());
}

std::optional<QubitId> InterceptResend::forward(TransitAccess &t) {
    const auto slot = target_slot(t.party());
    if (!slot) return t.in_transit();
    Rng rng = handler_rng(seed_, t.group(), t.party(), Leg::Forward);
    FakeState state = cfg_.fake_for(*slot);
    if (state == FakeState::Random) state = static_cast<FakeState>(rng.below(4));

    const QubitId genuine = t.in_transit();
    t.keep(genuine);
    QubitId fake;
    switch (state) {
        case FakeState::Zero: fake = t.prepare(1.0, 0.0); break;
        case FakeState::One: fake = t.prepare(0.0, 1.0); break;
        case FakeState::Plus: fake = t.prepare(kInvSqrt2, kInvSqrt2); break;
        default: fake = t.prepare(kInvSqrt2, -kInvSqrt2); break;
    }
    stored_[{t.group(), t.party()}] = Stored{genuine, fake, state};
    report_.actions.push_back("g" + std::to_string(t.group().index) + " p" + std::to_string(t.party().index) +
                              " swap fake=" + fake_state_name(state));
    return fake;
}

std::optional<QubitId> InterceptResend::backward(TransitAccess &t) {
    auto it = stored_.find({t.group(), t.party()});
    if (it == stored_.end()) return t.in_transit();
    const Stored &s = it->second;
    Rng rng = handler_rng(seed_, t.group(), t.party(), Leg::Backward);

    // iY maps |0>->-|1>, |1>->|0>, |+>->|->, |->->-|+>: bit 1 flips the outcome
    // in the preparation basis, bit 0 leaves it.
    const bool z_prepared = s.prepared == FakeState::Zero || s.prepared == FakeState::One;
    const int prepared_bit = (s.prepared == FakeState::One || s.prepared == FakeState::Minus) ? 1 : 0;
    const QubitId returned = t.in_transit();
    const int outcome = t.measure(returned, z_prepared ? MeasBasis::Z : MeasBasis::X, rng);
    t.keep(returned);
    const auto bit = static_cast<std::uint8_t>(outcome != prepared_bit);

    t.apply(s.genuine, encode_bit(bit));
    learned_[{t.group(), t.party()}] = bit;
    report_.party_bits.push_back({t.group(), t.party(), bit});
    report_.actions.push_back("g" + std::to_string(t.group().index) + " p" + std::to_string(t.party().index) +
                              " read bit=" + std::to_string(bit) + ", forward genuine");
    return s.genuine;
}

void InterceptResend::observe(const Announcement &a) {
    const unsigned n = a.initial.n;
    // Alice's op is derivable only if every other party's op is known.
    IndexDelta alice = index_difference(a.initial, a.measured);
    for (std::uint32_t j = 1; j < n; ++j) {
        auto it = learned_.find({a.group, PartyId{j}});
        if (it == learned_.end()) return;
        alice = alice ^ pauli_delta(encode_bit(it->second), j, n);
    }
    for (PauliOp op : kAllPaulis) {
        if (pauli_delta(op, 0, n) == alice) {
            report_.alice_dibits.push_back({a.group, decode_dibit(op)});
            return;
        }
    }
    report_.actions.push_back("g" + std::to_string(a.group.index) + " announcement inconsistent with learned ops");
}

void DisturbanceConfig::validate(unsigned parties) const {
    validate_targets(targets, parties, true);
    if (!(probability >= 0.0 && probability <= 1.0)) {
        throw Error(ErrorCode::kConfig, "disturbance probability must be in [0, 1]");
    }
}

std::string disturbance_mode_name(DisturbanceConfig::Mode m) {
    switch (m) {
        case DisturbanceConfig::Mode::RandomOp: return "random-op";
        case DisturbanceConfig::Mode::Flip: return "flip";
        case DisturbanceConfig::Mode::MeasureZ: return "measure-z";
    }
    return "?";
}

DisturbanceConfig::Mode parse_disturbance_mode(const std::string &s) {
    if (s == "random-op") return DisturbanceConfig::Mode::RandomOp;
    if (s == "flip") return DisturbanceConfig::Mode::Flip;
    if (s == "measure-z") return DisturbanceConfig::Mode::MeasureZ;
    throw Error(ErrorCode::kConfig, "unknown disturbance mode '" + s + "' (expected random-op, flip or measure-z)");
}

Disturbance::Disturbance(DisturbanceConfig cfg, std::uint64_t seed) : cfg_(std::move(cfg)), seed_(seed) {
    report_.guesses_only = true;
}

std::optional<QubitId> Disturbance::backward(TransitAccess &t) {
    if (!cfg_.targets.empty() &&
        std::find(cfg_.targets.begin(), cfg_.targets.end(), t.party()) == cfg_.targets.end()) {
        return t.in_transit();
    }
    Rng rng = handler_rng(seed_, t.group(), t.party(), Leg::Backward);
    const QubitId q = t.in_transit();
    const std::string where = "g" + std::to_string(t.group().index) + " p" + std::to_string(t.party().index);
    std::uint8_t guess;
    if (rng.bernoulli(cfg_.probability)) {
        switch (cfg_.mode) {
            case DisturbanceConfig::Mode::RandomOp: {
                const PauliOp op = rng.bit() ? PauliOp::IY : PauliOp::I;
                t.apply(q, op);
                report_.actions.push_back(where + " apply " + std::string(pauli_name(op)));
                guess = rng.bit();
                break;
            }
            case DisturbanceConfig::Mode::Flip:
                t.apply(q, PauliOp::IY);
                report_.actions.push_back(where + " apply iY");
                guess = rng.bit();
                break;
            case DisturbanceConfig::Mode::MeasureZ:
                guess = static_cast<std::uint8_t>(t.measure(q, MeasBasis::Z, rng));
                report_.actions.push_back(where + " measure Z -> " + std::to_string(guess));
                break;
            default:
                guess = 0;
        }
    } else {
        guess = rng.bit();
    }
    report_.party_bits.push_back({t.group(), t.party(), guess});
    return q;
}

void AdversarySpec::validate(unsigned parties) const {
    switch (kind) {
        case Kind::None: return;
        case Kind::InterceptResend: intercept.validate(parties); return;
        case Kind::Disturbance: disturbance.validate(parties); return;
    }
}

std::unique_ptr<ChannelTap> make_channel(const AdversarySpec &spec, std::uint64_t seed) {
    switch (spec.kind) {
        case AdversarySpec::Kind::None: return std::make_unique<NullChannel>();
        case AdversarySpec::Kind::InterceptResend: return std::make_unique<InterceptResend>(spec.intercept, seed);
        case AdversarySpec::Kind::Disturbance: return std::make_unique<Disturbance>(spec.disturbance, seed);
    }
    return std::make_unique<NullChannel>();
}

}  // namespace ghzqsdc
