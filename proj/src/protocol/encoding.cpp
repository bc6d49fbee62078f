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

#include "protocol/encoding.hpp"

#include "error.hpp"

namespace ghzqsdc {

PauliOp encode_bit(std::uint8_t bit) {
    if (bit > 1) throw Error(ErrorCode::kInvalidArgument, "bit must be 0 or 1");
    return bit ? PauliOp::IY : PauliOp::I;
}

PauliOp encode_dibit(std::uint8_t first, std::uint8_t second) {
    if (first > 1 || second > 1) throw Error(ErrorCode::kInvalidArgument, "bits must be 0 or 1");
    static constexpr std::array<PauliOp, 4> kTable = {PauliOp::I, PauliOp::X, PauliOp::IY, PauliOp::Z};
    return kTable[(first << 1) | second];
}

std::optional<std::uint8_t> decode_bit(PauliOp op) {
    switch (op) {
        case PauliOp::I: return 0;
        case PauliOp::IY: return 1;
        default: return std::nullopt;
    }
}

std::array<std::uint8_t, 2> decode_dibit(PauliOp op) {
    switch (op) {
        case PauliOp::I: return {0, 0};
        case PauliOp::X: return {0, 1};
        case PauliOp::IY: return {1, 0};
        case PauliOp::Z: return {1, 1};
    }
    return {0, 0};
}

}  // namespace ghzqsdc
