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

#ifndef GHZQSDC_PROTOCOL_ENCODING_HPP
#define GHZQSDC_PROTOCOL_ENCODING_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "quantum/pauli.hpp"

namespace ghzqsdc {

// Alice: I->00, X->01, iY->10, Z->11. Everyone else: I->0, iY->1.

PauliOp encode_bit(std::uint8_t bit);
PauliOp encode_dibit(std::uint8_t first, std::uint8_t second);

/// nullopt for ops outside {I, iY}.
std::optional<std::uint8_t> decode_bit(PauliOp op);
std::array<std::uint8_t, 2> decode_dibit(PauliOp op);

}  // namespace ghzqsdc

#endif
