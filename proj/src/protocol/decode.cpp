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

#include "protocol/decode.hpp"

#include <array>

#include "error.hpp"

namespace ghzqsdc {

std::optional<std::uint64_t> solve_gf2(std::span<const std::uint64_t> columns, std::uint64_t target) {
    if (columns.size() > 64) throw Error(ErrorCode::kInvalidArgument, "at most 64 columns");
    // basis[b]: vector with highest set bit b, plus the column mask producing it.
    std::array<std::uint64_t, 64> vec{};
    std::array<std::uint64_t, 64> combo{};
    std::array<bool, 64> used{};
    for (std::size_t i = 0; i < columns.size(); ++i) {
        std::uint64_t v = columns[i];
        std::uint64_t m = 1ULL << i;
        bool inserted = false;
        for (int b = 63; b >= 0; --b) {
            if (!((v >> b) & 1)) continue;
            if (used[b]) {
                v ^= vec[b];
                m ^= combo[b];
                continue;
            }
            used[b] = true;
            vec[b] = v;
            combo[b] = m;
            inserted = true;
            break;
        }
        if (!inserted) throw Error(ErrorCode::kInternal, "decode generators are linearly dependent");
    }
    std::uint64_t mask = 0;
    for (int b = 63; b >= 0; --b) {
        if (((target >> b) & 1) && used[b]) {
            target ^= vec[b];
            mask ^= combo[b];
        }
    }
    if (target != 0) return std::nullopt;
    return mask;
}

std::vector<PauliOp> decode_others(PartyId self, unsigned parties, PauliOp own_op, const GhzIndex &initial,
                                   const GhzIndex &measured) {
    if (parties < 2 || initial.n != parties || measured.n != parties) {
        throw Error(ErrorCode::kLengthMismatch, "announcement width does not match party count");
    }
    if (self.index >= parties) throw Error(ErrorCode::kInvalidArgument, "viewer index out of range");
    if (self.index != 0 && own_op != PauliOp::I && own_op != PauliOp::IY) {
        throw Error(ErrorCode::kInvalidArgument, "non-Alice parties only use I or iY");
    }
    const IndexDelta remainder = index_difference(initial, measured) ^ pauli_delta(own_op, self.index, parties);

    // Generator columns and what each stands for.
    struct Gen {
        std::uint32_t party;
        PauliOp op;
    };
    std::vector<std::uint64_t> columns;
    std::vector<Gen> gens;
    if (self.index != 0) {
        columns.push_back(pauli_delta(PauliOp::X, 0, parties).packed());
        gens.push_back({0, PauliOp::X});
        columns.push_back(pauli_delta(PauliOp::Z, 0, parties).packed());
        gens.push_back({0, PauliOp::Z});
    }
    for (std::uint32_t j = 1; j < parties; ++j) {
        if (j == self.index) continue;
        columns.push_back(pauli_delta(PauliOp::IY, j, parties).packed());
        gens.push_back({j, PauliOp::IY});
    }
    const auto mask = solve_gf2(columns, remainder.packed());
    if (!mask) {
        throw Error(ErrorCode::kNoSolution, "announcement is not reachable by any allowed op assignment");
    }
    std::vector<PauliOp> ops(parties, PauliOp::I);
    ops[self.index] = own_op;
    bool alice_x = false;
    bool alice_z = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!((*mask >> i) & 1)) continue;
        if (gens[i].party == 0) {
            (gens[i].op == PauliOp::X ? alice_x : alice_z) = true;
        } else {
            ops[gens[i].party] = PauliOp::IY;
        }
    }
    if (self.index != 0) {
        ops[0] = alice_x ? (alice_z ? PauliOp::IY : PauliOp::X) : (alice_z ? PauliOp::Z : PauliOp::I);
    }
    return ops;
}

}  // namespace ghzqsdc
