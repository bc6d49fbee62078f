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

#include "quantum/ghz.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace ghzqsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_width(unsigned n) {
    if (n < 2 || n > kMaxGhzQubits) {
        throw Error(ErrorCode::kInvalidArgument, "GHZ qubit count must be in [2, 20]");
    }
}

std::uint64_t low_mask(unsigned bits) { return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1); }

}  // namespace

IndexDelta IndexDelta::unpack(unsigned n, std::uint64_t packed) {
    require_width(n);
    return IndexDelta{n, packed & low_mask(n - 1), static_cast<std::uint8_t>((packed >> (n - 1)) & 1)};
}

IndexDelta IndexDelta::operator^(const IndexDelta &o) const {
    if (n != o.n) throw Error(ErrorCode::kLengthMismatch, "index delta width mismatch");
    return IndexDelta{n, dp ^ o.dp, static_cast<std::uint8_t>(ds ^ o.ds)};
}

GhzIndex::GhzIndex(unsigned n_, std::uint64_t pattern_, std::uint8_t phase_)
    : n(n_), pattern(pattern_), phase(phase_) {
    require_width(n);
    if ((pattern & ~low_mask(n - 1)) != 0 || phase > 1) {
        throw Error(ErrorCode::kInvalidArgument, "GHZ index out of range");
    }
}

GhzIndex GhzIndex::from_pattern(std::string_view p, int s) {
    if (s != 0 && s != 1) throw Error(ErrorCode::kInvalidArgument, "phase must be 0 or 1");
    std::uint64_t bits = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p[q] != '0' && p[q] != '1') throw Error(ErrorCode::kInvalidArgument, "pattern must be a 0/1 string");
        if (p[q] == '1') bits |= 1ULL << q;
    }
    return GhzIndex(static_cast<unsigned>(p.size() + 1), bits, static_cast<std::uint8_t>(s));
}

GhzIndex GhzIndex::from_ordinal(unsigned n, std::uint64_t ordinal) {
    require_width(n);
    if (ordinal >= (1ULL << n)) throw Error(ErrorCode::kInvalidArgument, "GHZ ordinal out of range");
    return GhzIndex(n, ordinal & low_mask(n - 1), static_cast<std::uint8_t>(ordinal >> (n - 1)));
}

std::string GhzIndex::pattern_string() const {
    std::string out(n - 1, '0');
    for (unsigned q = 0; q + 1 < n; ++q) out[q] = ((pattern >> q) & 1) ? '1' : '0';
    return out;
}

GhzIndex GhzIndex::operator^(const IndexDelta &d) const {
    if (d.n != n) throw Error(ErrorCode::kLengthMismatch, "index delta width mismatch");
    return GhzIndex(n, pattern ^ d.dp, static_cast<std::uint8_t>(phase ^ d.ds));
}

IndexDelta index_difference(const GhzIndex &a, const GhzIndex &b) {
    if (a.n != b.n) throw Error(ErrorCode::kLengthMismatch, "index width mismatch");
    return IndexDelta{a.n, a.pattern ^ b.pattern, static_cast<std::uint8_t>(a.phase ^ b.phase)};
}

std::string display_label(const GhzIndex &idx) {
    std::string p = idx.pattern_string();
    std::reverse(p.begin(), p.end());
    p.push_back(idx.phase ? '1' : '0');
    return p;
}

GhzIndex index_from_display_label(std::string_view label) {
    if (label.size() < 2) throw Error(ErrorCode::kInvalidArgument, "GHZ label needs at least 2 bits");
    std::string p(label.substr(0, label.size() - 1));
    std::reverse(p.begin(), p.end());
    const char s = label.back();
    if (s != '0' && s != '1') throw Error(ErrorCode::kInvalidArgument, "GHZ label must be a 0/1 string");
    return GhzIndex::from_pattern(p, s - '0');
}

StateVector ghz_state(const GhzIndex &idx, std::vector<QubitId> labels) {
    if (labels.size() != idx.n) {
        throw Error(ErrorCode::kLengthMismatch, "GHZ pattern length does not match label count");
    }
    const unsigned n = idx.n;
    // ket index: qubit q sits at bit n-1-q.
    std::uint64_t first = 0;
    for (unsigned q = 0; q + 1 < n; ++q) {
        if ((idx.pattern >> q) & 1) first |= 1ULL << (n - 1 - q);
    }
    const std::uint64_t second = first ^ low_mask(n);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[first] = kInvSqrt2;
    amps[second] = idx.phase ? -kInvSqrt2 : kInvSqrt2;
    return StateVector(std::move(labels), std::move(amps));
}

IndexDelta pauli_delta(PauliOp op, unsigned q, unsigned n) {
    require_width(n);
    if (q >= n) throw Error(ErrorCode::kInvalidArgument, "qubit position out of range");
    IndexDelta d{n, 0, 0};
    const bool x_part = op == PauliOp::X || op == PauliOp::IY;
    const bool z_part = op == PauliOp::Z || op == PauliOp::IY;
    if (x_part) d.dp = (q + 1 < n) ? (1ULL << q) : low_mask(n - 1);
    if (z_part) d.ds = 1;
    return d;
}

bool outcome_is_consistent(const GhzIndex &idx, MeasBasis basis, std::string_view outcome) {
    if (outcome.size() != idx.n) {
        throw Error(ErrorCode::kLengthMismatch, "outcome length does not match GHZ width");
    }
    if (basis == MeasBasis::Z) {
        std::uint64_t bits = 0;
        for (unsigned q = 0; q < idx.n; ++q) {
            if (outcome[q] != '0' && outcome[q] != '1') {
                throw Error(ErrorCode::kInvalidArgument, "Z outcome must use 0/1");
            }
            if (outcome[q] == '1') bits |= 1ULL << q;
        }
        const std::uint64_t first = idx.pattern;  // last qubit 0
        const std::uint64_t second = first ^ low_mask(idx.n);
        return bits == first || bits == second;
    }
    unsigned minus = 0;
    for (char c : outcome) {
        if (c != '+' && c != '-') throw Error(ErrorCode::kInvalidArgument, "X outcome must use +/-");
        minus += c == '-';
    }
    return (minus & 1U) == idx.phase;
}

}  // namespace ghzqsdc
