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

#include "quantum/registry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"

namespace ghzqsdc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

QubitId QuantumRegistry::new_label(Holder holder) {
    const QubitId q{next_label_++};
    holders_[q] = holder;
    return q;
}

void QuantumRegistry::add_subsystem(StateVector state) {
    for (QubitId q : state.labels()) {
        if (!holders_.contains(q)) {
            throw Error(ErrorCode::kUnknownLabel, "label " + std::to_string(q.value) + " was not allocated");
        }
        if (owner_.contains(q)) {
            throw Error(ErrorCode::kDuplicateLabel, "label " + std::to_string(q.value) + " is already live");
        }
    }
    const std::size_t slot = subsystems_.size();
    for (QubitId q : state.labels()) owner_[q] = slot;
    subsystems_.push_back(std::move(state));
}

std::vector<QubitId> QuantumRegistry::add_ghz(const GhzIndex &idx, std::span<const Holder> holders) {
    if (holders.size() != idx.n) throw Error(ErrorCode::kLengthMismatch, "one holder per GHZ qubit required");
    std::vector<QubitId> labels;
    labels.reserve(idx.n);
    for (const Holder &h : holders) labels.push_back(new_label(h));
    add_subsystem(ghz_state(idx, labels));
    return labels;
}

QubitId QuantumRegistry::add_single(Holder holder, Amplitude a0, Amplitude a1) {
    const QubitId q = new_label(holder);
    add_subsystem(StateVector::single(q, a0, a1));
    return q;
}

bool QuantumRegistry::is_live(QubitId q) const { return owner_.contains(q); }

const Holder &QuantumRegistry::holder(QubitId q) const {
    auto it = holders_.find(q);
    if (it == holders_.end() || !owner_.contains(q)) {
        throw Error(ErrorCode::kUnknownLabel, "unknown qubit " + std::to_string(q.value));
    }
    return it->second;
}

void QuantumRegistry::set_holder(QubitId q, Holder h) {
    slot_of(q);
    holders_[q] = h;
}

std::size_t QuantumRegistry::slot_of(QubitId q) const {
    auto it = owner_.find(q);
    if (it == owner_.end()) throw Error(ErrorCode::kUnknownLabel, "unknown qubit " + std::to_string(q.value));
    return it->second;
}

const StateVector &QuantumRegistry::subsystem_of(QubitId q) const { return subsystems_[slot_of(q)]; }

void QuantumRegistry::apply_pauli(QubitId q, PauliOp op) { subsystems_[slot_of(q)].apply(q, op); }

int QuantumRegistry::measure_single(QubitId q, MeasBasis basis, Rng &rng) {
    StateVector &s = subsystems_[slot_of(q)];
    const double p0 = s.probability(q, basis, 0);
    const double p1 = s.probability(q, basis, 1);
    // Draw against the normalized pair so rounding never selects a zero-probability branch.
    int outcome;
    if (p1 <= 0.0) {
        outcome = 0;
    } else if (p0 <= 0.0) {
        outcome = 1;
    } else {
        outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
    }
    s.project(q, basis, outcome);
    return outcome;
}

std::string QuantumRegistry::measure_joint(std::span<const QubitId> qs, MeasBasis basis, Rng &rng) {
    std::string out;
    out.reserve(qs.size());
    for (QubitId q : qs) slot_of(q);
    for (QubitId q : qs) out.push_back(outcome_char(basis, measure_single(q, basis, rng)));
    return out;
}

QuantumRegistry::JointView QuantumRegistry::joint_view(std::span<const QubitId> qs) const {
    const std::size_t n = qs.size();
    if (n < 2 || n > kMaxGhzQubits) throw Error(ErrorCode::kInvalidArgument, "GHZ measurement needs 2..20 qubits");
    {
        std::set<QubitId> distinct(qs.begin(), qs.end());
        if (distinct.size() != qs.size()) throw Error(ErrorCode::kDuplicateLabel, "duplicate label in GHZ measurement");
    }
    JointView view;
    for (QubitId q : qs) {
        const std::size_t s = slot_of(q);
        if (std::find(view.slots.begin(), view.slots.end(), s) == view.slots.end()) view.slots.push_back(s);
    }
    StateVector joint = subsystems_[view.slots[0]];
    for (std::size_t i = 1; i < view.slots.size(); ++i) joint = joint.tensor(subsystems_[view.slots[i]]);
    for (QubitId q : joint.labels()) {
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) view.rest.push_back(q);
    }
    std::vector<QubitId> order(qs.begin(), qs.end());
    order.insert(order.end(), view.rest.begin(), view.rest.end());
    view.state = std::make_unique<StateVector>(joint.reordered(order));
    return view;
}

std::vector<Amplitude> QuantumRegistry::JointView::project(const GhzIndex &idx) const {
    // c(r) = (<ghz_idx| ⊗ <r|) joint, with the measured block as the major index.
    const unsigned n = idx.n;
    const std::size_t rest_dim = std::size_t{1} << rest.size();
    std::uint64_t k0 = 0;
    for (unsigned q = 0; q + 1 < n; ++q) {
        if ((idx.pattern >> q) & 1) k0 |= 1ULL << (n - 1 - q);
    }
    const std::uint64_t k1 = k0 ^ ((1ULL << n) - 1);
    const double sign = idx.phase ? -1.0 : 1.0;
    auto amps = state->amplitudes();
    std::vector<Amplitude> c(rest_dim);
    for (std::size_t r = 0; r < rest_dim; ++r) {
        c[r] = (amps[k0 * rest_dim + r] + sign * amps[k1 * rest_dim + r]) * kInvSqrt2;
    }
    return c;
}

std::vector<double> QuantumRegistry::ghz_distribution(std::span<const QubitId> qs) const {
    const JointView view = joint_view(qs);
    const unsigned n = static_cast<unsigned>(qs.size());
    std::vector<double> probs(std::size_t{1} << n);
    for (std::uint64_t o = 0; o < probs.size(); ++o) {
        for (const Amplitude &a : view.project(GhzIndex::from_ordinal(n, o))) probs[o] += std::norm(a);
    }
    return probs;
}

GhzIndex QuantumRegistry::ghz_measure(std::span<const QubitId> qs, Rng &rng) {
    const unsigned n = static_cast<unsigned>(qs.size());
    const std::vector<double> probs = ghz_distribution(qs);
    double total = 0.0;
    for (double p : probs) total += p;
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::kInternal, "GHZ-basis probabilities do not sum to 1");
    }
    double u = rng.uniform() * total;
    std::uint64_t chosen = probs.size();
    for (std::uint64_t o = 0; o < probs.size(); ++o) {
        if (probs[o] <= 0.0) continue;
        chosen = o;
        if (u < probs[o]) break;
        u -= probs[o];
    }
    const GhzIndex result = GhzIndex::from_ordinal(n, chosen);
    JointView view = joint_view(qs);
    std::vector<Amplitude> c = view.project(result);
    const double scale = 1.0 / std::sqrt(probs[chosen]);
    for (Amplitude &a : c) a *= scale;

    remove_slots(view.slots);
    add_subsystem(ghz_state(result, std::vector<QubitId>(qs.begin(), qs.end())));
    if (!view.rest.empty()) add_subsystem(StateVector(view.rest, std::move(c)));
    return result;
}

void QuantumRegistry::remove_slots(const std::vector<std::size_t> &slots) {
    std::vector<StateVector> kept;
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        if (std::find(slots.begin(), slots.end(), i) != slots.end()) {
            for (QubitId q : subsystems_[i].labels()) owner_.erase(q);
            continue;
        }
        kept.push_back(std::move(subsystems_[i]));
    }
    subsystems_ = std::move(kept);
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        for (QubitId q : subsystems_[i].labels()) owner_[q] = i;
    }
}

void QuantumRegistry::check_invariants() const {
    std::set<QubitId> seen;
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        const StateVector &s = subsystems_[i];
        if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
            throw Error(ErrorCode::kInternal, "subsystem lost normalization");
        }
        for (QubitId q : s.labels()) {
            if (!seen.insert(q).second) throw Error(ErrorCode::kInternal, "label in two subsystems");
            auto it = owner_.find(q);
            if (it == owner_.end() || it->second != i) throw Error(ErrorCode::kInternal, "owner map out of sync");
        }
    }
    if (seen.size() != owner_.size()) throw Error(ErrorCode::kInternal, "owner map has stale labels");
}

}  // namespace ghzqsdc
