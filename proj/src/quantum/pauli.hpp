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

#ifndef GHZQSDC_QUANTUM_PAULI_HPP
#define GHZQSDC_QUANTUM_PAULI_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace ghzqsdc {

using Amplitude = std::complex<double>;

/// The four single-qubit encoding operators. `IY` is i*sigma_y, i.e. the real
/// matrix |0><1| - |1><0|.
enum class PauliOp : std::uint8_t { I, X, IY, Z };

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
constexpr std::array<double, 4> pauli_matrix(PauliOp op) {
    switch (op) {
        case PauliOp::I: return {1, 0, 0, 1};
        case PauliOp::X: return {0, 1, 1, 0};
        case PauliOp::IY: return {0, 1, -1, 0};
        case PauliOp::Z: return {1, 0, 0, -1};
    }
    return {1, 0, 0, 1};
}

constexpr std::string_view pauli_name(PauliOp op) {
    switch (op) {
        case PauliOp::I: return "I";
        case PauliOp::X: return "X";
        case PauliOp::IY: return "iY";
        case PauliOp::Z: return "Z";
    }
    return "?";
}

inline constexpr std::array<PauliOp, 4> kAllPaulis = {PauliOp::I, PauliOp::X, PauliOp::IY, PauliOp::Z};

/// Z outcomes 0/1 are |0>/|1>; X outcomes 0/1 are |+>/|->.
enum class MeasBasis : std::uint8_t { Z, X };

constexpr char basis_char(MeasBasis b) { return b == MeasBasis::Z ? 'Z' : 'X'; }

constexpr char outcome_char(MeasBasis b, int bit) {
    if (b == MeasBasis::Z) return bit ? '1' : '0';
    return bit ? '-' : '+';
}

}  // namespace ghzqsdc

#endif
