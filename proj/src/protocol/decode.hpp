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

#ifndef GHZQSDC_PROTOCOL_DECODE_HPP
#define GHZQSDC_PROTOCOL_DECODE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ids.hpp"
#include "quantum/ghz.hpp"
#include "quantum/pauli.hpp"

namespace ghzqsdc {

/// Solves for the mask of `columns` whose XOR equals `target`. Columns must be
/// linearly independent over GF(2) (kInternal otherwise). Returns nullopt when
/// target lies outside their span.
std::optional<std::uint64_t> solve_gf2(std::span<const std::uint64_t> columns, std::uint64_t target);

/// Recovers every party's op for one message group from the public
/// announcement (initial, measured) and the viewer's own op. Alice's op is
/// any of {I, X, iY, Z} on qubit 0; party j >= 1 uses {I, iY} on qubit j.
/// The viewer's slot holds `own_op`. Throws kNoSolution if no assignment of
/// allowed ops explains the announcement.
std::vector<PauliOp> decode_others(PartyId self, unsigned parties, PauliOp own_op, const GhzIndex &initial,
                                   const GhzIndex &measured);

}  // namespace ghzqsdc

#endif
