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

#ifndef GHZQSDC_QUANTUM_GHZ_HPP
#define GHZQSDC_QUANTUM_GHZ_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quantum/pauli.hpp"
#include "quantum/state_vector.hpp"

namespace ghzqsdc {

inline constexpr unsigned kMaxGhzQubits = 20;

/// GF(2) toggle applied to a GhzIndex: (pattern, phase) ^= (dp, ds).
struct IndexDelta {
    unsigned n = 0;
    std::uint64_t dp = 0;  // bit q = qubit q, q < n-1
    std::uint8_t ds = 0;

    bool is_zero() const { return dp == 0 && ds == 0; }
    /// Packs into n bits: pattern in bits 0..n-2, phase in bit n-1.
    std::uint64_t packed() const { return dp | (std::uint64_t{ds} << (n - 1)); }
    static IndexDelta unpack(unsigned n, std::uint64_t packed);

    IndexDelta operator^(const IndexDelta &o) const;
    friend bool operator==(const IndexDelta &, const IndexDelta &) = default;
};

/// Label of the GHZ basis state (|p,0> + (-1)^s |~p,1>)/√2, with p the
/// first-term values of qubits 0..n-2 (last qubit is 0 in the first term).
struct GhzIndex {
    unsigned n = 0;
    std::uint64_t pattern = 0;  // bit q = qubit q
    std::uint8_t phase = 0;

    GhzIndex() = default;
    GhzIndex(unsigned n, std::uint64_t pattern, std::uint8_t phase);

    /// `pattern` is written in particle order, e.g. "10" means qubit 0 is 1.
    static GhzIndex from_pattern(std::string_view pattern, int phase);
    /// Ordinal in [0, 2^n): the packed (pattern, phase) word.
    static GhzIndex from_ordinal(unsigned n, std::uint64_t ordinal);
    std::uint64_t ordinal() const { return pattern | (std::uint64_t{phase} << (n - 1)); }

    std::string pattern_string() const;

    GhzIndex operator^(const IndexDelta &d) const;
    friend auto operator<=>(const GhzIndex &, const GhzIndex &) = default;
};

/// canonical(a) ^ canonical(b) as a delta.
IndexDelta index_difference(const GhzIndex &a, const GhzIndex &b);

/// Display label in the (p_{n-2} ... p_0, s) order, e.g. pattern "10", phase 0 -> "010".
std::string display_label(const GhzIndex &idx);
GhzIndex index_from_display_label(std::string_view label);

StateVector ghz_state(const GhzIndex &idx, std::vector<QubitId> labels);

/// Toggle produced by `op` on qubit `q` of any n-qubit GHZ basis state, up to a
/// global sign.
IndexDelta pauli_delta(PauliOp op, unsigned q, unsigned n);

/// True iff `outcome` (characters 0/1 for Z, +/- for X, one per qubit in
/// order) has nonzero probability for ghz_state(idx).
bool outcome_is_consistent(const GhzIndex &idx, MeasBasis basis, std::string_view outcome);

}  // namespace ghzqsdc

#endif
