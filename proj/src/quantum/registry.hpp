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

#ifndef GHZQSDC_QUANTUM_REGISTRY_HPP
#define GHZQSDC_QUANTUM_REGISTRY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quantum/ghz.hpp"
#include "quantum/state_vector.hpp"
#include "rng.hpp"

namespace ghzqsdc {

/// Who currently possesses a qubit.
struct Holder {
    enum class Kind : std::uint8_t { Party, Transit, Adversary };
    Kind kind = Kind::Party;
    std::uint32_t party = 0;  // meaningful for Party and Transit (destination)

    static Holder of_party(std::uint32_t p) { return {Kind::Party, p}; }
    static Holder in_transit(std::uint32_t dest) { return {Kind::Transit, dest}; }
    static Holder adversary() { return {Kind::Adversary, 0}; }
    friend bool operator==(const Holder &, const Holder &) = default;
};

/// The qubits of one protocol group, kept as disjoint subsystems that are
/// merged only when a joint GHZ-basis measurement needs them.
class QuantumRegistry {
public:
    /// Registers a fresh subsystem. Its labels must have been allocated by
    /// new_label() and not yet be live.
    void add_subsystem(StateVector state);
    QubitId new_label(Holder holder);

    /// Allocates n labels held by `holders[k]` and registers ghz_state(idx) over them.
    std::vector<QubitId> add_ghz(const GhzIndex &idx, std::span<const Holder> holders);
    /// Allocates a label and registers a single-qubit state a0|0> + a1|1>.
    QubitId add_single(Holder holder, Amplitude a0, Amplitude a1);

    bool is_live(QubitId q) const;
    const Holder &holder(QubitId q) const;
    void set_holder(QubitId q, Holder h);

    const StateVector &subsystem_of(QubitId q) const;
    std::size_t subsystem_count() const { return subsystems_.size(); }
    std::size_t live_count() const { return owner_.size(); }

    void apply_pauli(QubitId q, PauliOp op);

    /// Born-rule sample; collapses q's subsystem. Returns 0/1 (X: 0 is '+').
    int measure_single(QubitId q, MeasBasis basis, Rng &rng);
    /// Sequential measure_single in label order; returns the outcome string.
    std::string measure_joint(std::span<const QubitId> qs, MeasBasis basis, Rng &rng);
    /// Projective measurement of qs onto the 2^n GHZ basis. Afterwards qs form
    /// their own subsystem in the measured GHZ state, and the rest of the
    /// touched subsystems is kept as one conditional subsystem.
    GhzIndex ghz_measure(std::span<const QubitId> qs, Rng &rng);
    /// Probability of each GHZ outcome (by ordinal) without collapsing anything.
    std::vector<double> ghz_distribution(std::span<const QubitId> qs) const;

    /// Throws kInternal if the partition or normalization invariants fail.
    void check_invariants() const;

private:
    struct JointView {
        std::vector<std::size_t> slots;  // subsystems merged into `state`
        std::vector<QubitId> rest;       // non-measured qubits, after qs in `state`
        std::unique_ptr<StateVector> state;
        std::vector<Amplitude> project(const GhzIndex &idx) const;
    };
    JointView joint_view(std::span<const QubitId> qs) const;
    std::size_t slot_of(QubitId q) const;
    void remove_slots(const std::vector<std::size_t> &slots);

    std::vector<StateVector> subsystems_;
    std::map<QubitId, std::size_t> owner_;  // label -> subsystem slot
    std::map<QubitId, Holder> holders_;
    std::uint32_t next_label_ = 0;
};

}  // namespace ghzqsdc

#endif
