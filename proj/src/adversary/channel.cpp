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

#include "adversary/channel.hpp"

#include "error.hpp"

namespace ghzqsdc {

void TransitAccess::require_access(QubitId q) const {
    if (q == in_transit_) return;
    if (registry_.holder(q).kind == Holder::Kind::Adversary) return;
    throw Error(ErrorCode::kAccessViolation,
                "channel handler touched qubit " + std::to_string(q.value) + " which is not in transit");
}

void TransitAccess::keep(QubitId q) {
    require_access(q);
    registry_.set_holder(q, Holder::adversary());
}

QubitId TransitAccess::prepare(Amplitude a0, Amplitude a1) {
    return registry_.add_single(Holder::adversary(), a0, a1);
}

int TransitAccess::measure(QubitId q, MeasBasis basis, Rng &rng) {
    require_access(q);
    return registry_.measure_single(q, basis, rng);
}

void TransitAccess::apply(QubitId q, PauliOp op) {
    require_access(q);
    registry_.apply_pauli(q, op);
}

}  // namespace ghzqsdc
