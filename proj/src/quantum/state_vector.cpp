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

#include "quantum/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "error.hpp"

namespace ghzqsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_distinct(const std::vector<QubitId> &labels) {
    std::set<QubitId> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
        throw Error(ErrorCode::kDuplicateLabel, "duplicate qubit label in state");
    }
}

}  // namespace

StateVector::StateVector(std::vector<QubitId> labels, std::vector<Amplitude> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    if (labels_.size() >= 63) {
        throw Error(ErrorCode::kInvalidArgument, "too many qubits for a dense state");
    }
    require_distinct(labels_);
    if (amps_.size() != (std::size_t{1} << labels_.size())) {
        throw Error(ErrorCode::kLengthMismatch, "amplitude count must be 2^(qubit count)");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
    }
}

StateVector StateVector::basis(std::vector<QubitId> labels, std::uint64_t index) {
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps.at(index) = 1.0;
    return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::single(QubitId q, Amplitude a0, Amplitude a1) {
    return StateVector({q}, {a0, a1});
}

Amplitude StateVector::amplitude(std::string_view ket) const {
    if (ket.size() != labels_.size()) {
        throw Error(ErrorCode::kLengthMismatch, "ket length does not match qubit count");
    }
    std::uint64_t index = 0;
    for (char c : ket) {
        if (c != '0' && c != '1') throw Error(ErrorCode::kInvalidArgument, "ket must be a 0/1 string");
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return amps_[index];
}

std::optional<std::size_t> StateVector::position(QubitId q) const {
    auto it = std::find(labels_.begin(), labels_.end(), q);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t StateVector::shift_of(QubitId q) const {
    auto pos = position(q);
    if (!pos) throw Error(ErrorCode::kUnknownLabel, "qubit " + std::to_string(q.value) + " not in state");
    return labels_.size() - 1 - *pos;
}

double StateVector::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Amplitude &a) { return acc + std::norm(a); });
}

void StateVector::apply(QubitId q, PauliOp op) {
    const std::uint64_t mask = std::uint64_t{1} << shift_of(q);
    if (op == PauliOp::I) return;
    const auto m = pauli_matrix(op);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | mask];
        amps_[i] = m[0] * a0 + m[1] * a1;
        amps_[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

double StateVector::probability(QubitId q, MeasBasis basis, int outcome) const {
    const std::uint64_t mask = std::uint64_t{1} << shift_of(q);
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | mask];
        if (basis == MeasBasis::Z) {
            p += std::norm(outcome ? a1 : a0);
        } else {
            p += std::norm(outcome ? (a0 - a1) : (a0 + a1)) * 0.5;
        }
    }
    return p;
}

void StateVector::project(QubitId q, MeasBasis basis, int outcome) {
    const double p = probability(q, basis, outcome);
    if (p <= 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "projection onto a zero-probability outcome");
    }
    const std::uint64_t mask = std::uint64_t{1} << shift_of(q);
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        Amplitude &a0 = amps_[i];
        Amplitude &a1 = amps_[i | mask];
        if (basis == MeasBasis::Z) {
            if (outcome) {
                a0 = 0.0;
                a1 *= scale;
            } else {
                a0 *= scale;
                a1 = 0.0;
            }
        } else {
            // Component along |±> is (a0 ± a1)/√2; the projected pair is that
            // component times |±> = (|0> ± |1>)/√2.
            const double sign = outcome ? -1.0 : 1.0;
            const Amplitude c = (a0 + sign * a1) * kInvSqrt2 * scale;
            a0 = c * kInvSqrt2;
            a1 = sign * c * kInvSqrt2;
        }
    }
}

StateVector StateVector::tensor(const StateVector &other) const {
    std::vector<QubitId> labels = labels_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    std::vector<Amplitude> amps(amps_.size() * other.amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        for (std::size_t j = 0; j < other.amps_.size(); ++j) {
            amps[i * other.amps_.size() + j] = amps_[i] * other.amps_[j];
        }
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::reordered(std::span<const QubitId> order) const {
    if (order.size() != labels_.size()) {
        throw Error(ErrorCode::kLengthMismatch, "reorder must name every qubit exactly once");
    }
    const std::size_t n = labels_.size();
    // new position k takes its bit from old shift src_shift[k]
    std::vector<std::size_t> src_shift(n);
    for (std::size_t k = 0; k < n; ++k) src_shift[k] = shift_of(order[k]);
    std::vector<QubitId> labels(order.begin(), order.end());
    require_distinct(labels);
    std::vector<Amplitude> amps(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        std::uint64_t j = 0;
        for (std::size_t k = 0; k < n; ++k) {
            j |= ((i >> src_shift[k]) & 1ULL) << (n - 1 - k);
        }
        amps[j] = amps_[i];
    }
    return StateVector(std::move(labels), std::move(amps));
}

Amplitude inner_product(const StateVector &s1, const StateVector &s2) {
    if (s1.labels() != s2.labels()) {
        throw Error(ErrorCode::kLengthMismatch, "inner_product: label sets differ");
    }
    Amplitude acc = 0.0;
    auto a = s1.amplitudes();
    auto b = s2.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace ghzqsdc
