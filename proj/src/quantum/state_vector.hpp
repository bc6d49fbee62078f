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

#ifndef GHZQSDC_QUANTUM_STATE_VECTOR_HPP
#define GHZQSDC_QUANTUM_STATE_VECTOR_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quantum/pauli.hpp"

namespace ghzqsdc {

struct QubitId {
    std::uint32_t value = 0;
    friend auto operator<=>(const QubitId &, const QubitId &) = default;
};

inline constexpr double kNormTolerance = 1e-10;

/// Dense amplitude vector over an ordered list of labeled qubits.
///
/// Basis index convention: the qubit at label position k is bit (n-1-k) of
/// the index, so the binary expansion of an index reads as the ket string in
/// label order ("|abc>").
class StateVector {
public:
    /// Validates length == 2^|labels|, distinct labels and unit norm.
    StateVector(std::vector<QubitId> labels, std::vector<Amplitude> amplitudes);

    static StateVector basis(std::vector<QubitId> labels, std::uint64_t index);
    /// a0|0> + a1|1>, normalized by the caller.
    static StateVector single(QubitId q, Amplitude a0, Amplitude a1);

    const std::vector<QubitId> &labels() const { return labels_; }
    std::size_t qubit_count() const { return labels_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }
    /// Amplitude of a computational ket given as a '0'/'1' string in label order.
    Amplitude amplitude(std::string_view ket) const;

    bool contains(QubitId q) const { return position(q).has_value(); }
    std::optional<std::size_t> position(QubitId q) const;
    double norm_squared() const;

    void apply(QubitId q, PauliOp op);

    /// Born probability of `outcome` when measuring q in `basis`.
    double probability(QubitId q, MeasBasis basis, int outcome) const;
    /// Projects q onto the `outcome` eigenvector and renormalizes. The outcome
    /// must have nonzero probability.
    void project(QubitId q, MeasBasis basis, int outcome);

    /// this ⊗ other; labels concatenated.
    StateVector tensor(const StateVector &other) const;
    /// Same state with labels permuted into `order` (a permutation of labels()).
    StateVector reordered(std::span<const QubitId> order) const;

private:
    std::size_t shift_of(QubitId q) const;

    std::vector<QubitId> labels_;
    std::vector<Amplitude> amps_;
};

/// <s1|s2>; requires identical label order.
Amplitude inner_product(const StateVector &s1, const StateVector &s2);

}  // namespace ghzqsdc

#endif
