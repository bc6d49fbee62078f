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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "../common/oracles.hpp"
#include "../common/reference_states.hpp"
#include "error.hpp"
#include "quantum/ghz.hpp"
#include "quantum/registry.hpp"
#include "quantum/state_vector.hpp"

using namespace ghzqsdc;

namespace {

constexpr double kExact = 1e-12;
constexpr double kTol = 1e-10;

std::vector<QubitId> labels(unsigned n, std::uint32_t base = 0) {
    std::vector<QubitId> out;
    for (unsigned k = 0; k < n; ++k) out.push_back(QubitId{base + k});
    return out;
}

oracle::Vec to_vec(const StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

std::string x_string(std::uint64_t index, unsigned n) {
    std::string s;
    for (unsigned k = 0; k < n; ++k) s += (index >> (n - 1 - k)) & 1 ? '-' : '+';
    return s;
}

std::string z_string(std::uint64_t index, unsigned n) {
    std::string s;
    for (unsigned k = 0; k < n; ++k) s += (index >> (n - 1 - k)) & 1 ? '1' : '0';
    return s;
}

std::vector<std::vector<oracle::C>> oracle_matrix(PauliOp op) {
    switch (op) {
        case PauliOp::X: return oracle::matrix('X');
        case PauliOp::IY: return oracle::matrix('Y');
        case PauliOp::Z: return oracle::matrix('Z');
        default: return oracle::matrix('I');
    }
}

}  // namespace

TEST(StateVector, RejectsBadConstruction) {
    EXPECT_THROW(StateVector(labels(2), {1, 0, 0}), Error);
    EXPECT_THROW(StateVector({QubitId{1}, QubitId{1}}, {1, 0, 0, 0}), Error);
    EXPECT_THROW(StateVector(labels(1), {1, 1}), Error);
}

TEST(StateVector, IdentityLeavesStateUnchanged) {
    StateVector s = ghz_state(GhzIndex::from_pattern("01", 1), labels(3));
    const StateVector before = s;
    s.apply(QubitId{1}, PauliOp::I);
    for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(s.amplitude(i), before.amplitude(i));
}

TEST(StateVector, IYOnSingleQubits) {
    StateVector zero = StateVector::single(QubitId{0}, 1, 0);
    zero.apply(QubitId{0}, PauliOp::IY);
    EXPECT_NEAR(std::abs(zero.amplitude(0)), 0.0, kExact);
    EXPECT_NEAR(zero.amplitude(1).real(), -1.0, kExact);

    StateVector plus = StateVector::single(QubitId{0}, oracle::kS, oracle::kS);
    plus.apply(QubitId{0}, PauliOp::IY);
    const oracle::Vec expect = oracle::ketm();
    EXPECT_NEAR(std::abs(plus.amplitude(0) - expect[0]), 0.0, kExact);
    EXPECT_NEAR(std::abs(plus.amplitude(1) - expect[1]), 0.0, kExact);
}

TEST(StateVector, XOnParticleAGivesPsi010) {
    StateVector s = ghz_state(index_from_display_label("000"), labels(3));
    s.apply(QubitId{0}, PauliOp::X);
    const oracle::Vec expect = oracle::ghz_from_kets("100", "011", +1);
    for (std::uint64_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(s.amplitude(i) - expect[i]), 0.0, kExact);
}

TEST(StateVector, ApplyMatchesKroneckerOracle) {
    const std::vector<std::string> inputs = {"0+1", "-10", "+-+"};
    for (const std::string &in : inputs) {
        for (PauliOp op : kAllPaulis) {
            for (unsigned q = 0; q < 3; ++q) {
                const oracle::Vec v = oracle::product(in);
                StateVector s(labels(3), v);
                s.apply(QubitId{q}, op);
                const oracle::Vec expect = oracle::apply(oracle::embed(oracle_matrix(op), q, 3), v);
                for (std::uint64_t i = 0; i < 8; ++i) {
                    EXPECT_NEAR(std::abs(s.amplitude(i) - expect[i]), 0.0, kExact) << in << " q=" << q;
                }
                EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
            }
        }
    }
}

TEST(StateVector, ProbabilityMatchesPartialTrace) {
    const StateVector s = ghz_state(index_from_display_label("000"), labels(3));
    const auto rho = oracle::reduced(to_vec(s), 0, 3);
    EXPECT_NEAR(s.probability(QubitId{0}, MeasBasis::Z, 0), rho[0][0].real(), kExact);
    EXPECT_NEAR(s.probability(QubitId{0}, MeasBasis::Z, 1), rho[1][1].real(), kExact);
    EXPECT_NEAR(s.probability(QubitId{0}, MeasBasis::Z, 0), 0.5, kExact);
    const double plus = 0.5 * (rho[0][0] + rho[0][1] + rho[1][0] + rho[1][1]).real();
    EXPECT_NEAR(s.probability(QubitId{0}, MeasBasis::X, 0), plus, kExact);
}

TEST(StateVector, InnerProducts) {
    const StateVector a = ghz_state(index_from_display_label("000"), labels(3));
    const StateVector b = ghz_state(index_from_display_label("001"), labels(3));
    EXPECT_NEAR(std::abs(inner_product(a, a) - 1.0), 0.0, kExact);
    EXPECT_NEAR(std::abs(inner_product(a, b)), 0.0, kExact);
    StateVector c = ghz_state(index_from_display_label("010"), labels(3));
    c.apply(QubitId{0}, PauliOp::X);
    EXPECT_NEAR(std::abs(inner_product(a, c) - 1.0), 0.0, kExact);
    EXPECT_THROW(inner_product(a, ghz_state(index_from_display_label("000"), labels(3, 5))), Error);
}

TEST(StateVector, InnerProductIsConjugateLinearInFirstArgument) {
    const StateVector s1(labels(1), {oracle::C(0, 1), 0});
    const StateVector s2(labels(1), {1, 0});
    EXPECT_NEAR(std::abs(inner_product(s1, s2) - oracle::C(0, -1)), 0.0, kExact);
}

TEST(Ghz, SpecificAmplitudes) {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector s0 = ghz_state(GhzIndex::from_pattern("00", 0), labels(3));
    EXPECT_NEAR(s0.amplitude("000").real(), r, kExact);
    EXPECT_NEAR(s0.amplitude("111").real(), r, kExact);
    EXPECT_NEAR(std::abs(s0.amplitude("010")), 0.0, kExact);

    const StateVector s1 = ghz_state(GhzIndex::from_pattern("01", 1), labels(3));
    EXPECT_NEAR(s1.amplitude("010").real(), r, kExact);
    EXPECT_NEAR(s1.amplitude("101").real(), -r, kExact);

    const StateVector epr = ghz_state(GhzIndex::from_pattern("0", 0), labels(2));
    EXPECT_NEAR(epr.amplitude("00").real(), r, kExact);
    EXPECT_NEAR(epr.amplitude("11").real(), r, kExact);
}

TEST(Ghz, ConstructionErrors) {
    EXPECT_THROW(ghz_state(GhzIndex::from_pattern("00", 0), labels(2)), Error);
    EXPECT_THROW(ghz_state(GhzIndex::from_pattern("00", 0), {QubitId{0}, QubitId{0}, QubitId{1}}), Error);
}

TEST(Ghz, DisplayLabels) {
    EXPECT_EQ(display_label(GhzIndex::from_pattern("10", 0)), "010");
    EXPECT_EQ(display_label(GhzIndex::from_pattern("01", 0)), "100");
    EXPECT_EQ(display_label(GhzIndex::from_pattern("00", 0)), "000");
    for (unsigned n = 2; n <= 6; ++n) {
        for (std::uint64_t o = 0; o < (std::uint64_t{1} << n); ++o) {
            const GhzIndex idx = GhzIndex::from_ordinal(n, o);
            EXPECT_EQ(index_from_display_label(display_label(idx)), idx);
        }
    }
}

TEST(Ghz, ThreeParticleStatesMatchHandExpansions) {
    for (const auto &ref : reference::kStates) {
        const StateVector s = ghz_state(index_from_display_label(ref.label), labels(3));
        oracle::Vec z(8);
        for (const auto &t : ref.z) z[std::stoul(t.ket, nullptr, 2)] = t.sign * oracle::kS;
        for (std::uint64_t i = 0; i < 8; ++i) {
            EXPECT_NEAR(std::abs(s.amplitude(i) - z[i]), 0.0, kExact) << ref.label;
        }
        std::map<std::string, int> x;
        for (const auto &t : ref.x) x[t.ket] = t.sign;
        for (std::uint64_t i = 0; i < 8; ++i) {
            const std::string out = x_string(i, 3);
            const oracle::C amp = oracle::dot(oracle::product(out), to_vec(s));
            const double expect = x.contains(out) ? 0.5 * x[out] : 0.0;
            EXPECT_NEAR(std::abs(amp - expect), 0.0, kExact) << ref.label << " " << out;
        }
    }
}

TEST(Ghz, BasisIsOrthonormal) {
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<StateVector> basis;
        for (std::uint64_t o = 0; o < dim; ++o) basis.push_back(ghz_state(GhzIndex::from_ordinal(n, o), labels(n)));
        for (std::uint64_t i = 0; i < dim; ++i) {
            for (std::uint64_t j = 0; j < dim; ++j) {
                EXPECT_NEAR(std::abs(inner_product(basis[i], basis[j])), i == j ? 1.0 : 0.0, kTol);
            }
        }
    }
}

TEST(Ghz, PauliDeltaExamples) {
    const IndexDelta x0 = pauli_delta(PauliOp::X, 0, 3);
    EXPECT_EQ(x0.dp, 0b01u);  // pattern "10": bit 0 set
    EXPECT_EQ(x0.ds, 0);
    EXPECT_EQ(display_label(GhzIndex(3, 0, 0) ^ x0), "010");
    const IndexDelta y2 = pauli_delta(PauliOp::IY, 2, 3);
    EXPECT_EQ(y2.dp, 0b11u);
    EXPECT_EQ(y2.ds, 1);
    EXPECT_EQ(display_label(GhzIndex(3, 0, 0) ^ y2), "111");
    for (unsigned q = 0; q < 4; ++q) EXPECT_TRUE(pauli_delta(PauliOp::I, q, 4).is_zero());
    EXPECT_THROW(pauli_delta(PauliOp::X, 3, 3), Error);
}

// The delta is recovered by brute force: apply the operator to every basis
// state via explicit Kronecker products and find the GHZ state it lands on.
TEST(Ghz, ToggleSoundnessAgainstBruteForce) {
    for (unsigned n = 2; n <= 5; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (PauliOp op : kAllPaulis) {
            for (unsigned q = 0; q < n; ++q) {
                const IndexDelta delta = pauli_delta(op, q, n);
                const auto m = oracle::embed(oracle_matrix(op), q, n);
                for (std::uint64_t o = 0; o < dim; ++o) {
                    const GhzIndex idx = GhzIndex::from_ordinal(n, o);
                    const oracle::Vec moved = oracle::apply(m, oracle::ghz(idx.pattern_string(), idx.phase));
                    std::uint64_t hits = 0;
                    GhzIndex landed;
                    for (std::uint64_t t = 0; t < dim; ++t) {
                        const GhzIndex cand = GhzIndex::from_ordinal(n, t);
                        const double overlap =
                            std::abs(oracle::dot(oracle::ghz(cand.pattern_string(), cand.phase), moved));
                        if (std::abs(overlap - 1.0) < kTol) {
                            ++hits;
                            landed = cand;
                        } else {
                            ASSERT_NEAR(overlap, 0.0, kTol);
                        }
                    }
                    ASSERT_EQ(hits, 1u);
                    EXPECT_EQ(landed, idx ^ delta) << "n=" << n << " q=" << q << " op=" << pauli_name(op);
                }
            }
        }
    }
}

TEST(Ghz, ParityLawOfXExpansion) {
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t o = 0; o < dim; ++o) {
            const GhzIndex idx = GhzIndex::from_ordinal(n, o);
            const oracle::Vec psi = oracle::ghz(idx.pattern_string(), idx.phase);
            const StateVector s = ghz_state(idx, labels(n));
            for (std::uint64_t i = 0; i < dim; ++i) ASSERT_NEAR(std::abs(s.amplitude(i) - psi[i]), 0.0, kExact);
            for (std::uint64_t x = 0; x < dim; ++x) {
                if (oracle::born(psi, x_string(x, n)) < kTol) continue;
                EXPECT_EQ(std::popcount(x) % 2, idx.phase);
            }
        }
    }
}

TEST(Ghz, ConsistencyExamples) {
    const GhzIndex idx = index_from_display_label("000");
    EXPECT_TRUE(outcome_is_consistent(idx, MeasBasis::Z, "111"));
    EXPECT_FALSE(outcome_is_consistent(idx, MeasBasis::Z, "001"));
    EXPECT_TRUE(outcome_is_consistent(idx, MeasBasis::X, "+--"));
    EXPECT_FALSE(outcome_is_consistent(idx, MeasBasis::X, "+-+"));
    EXPECT_THROW(outcome_is_consistent(idx, MeasBasis::Z, "00"), Error);
}

TEST(Ghz, ConsistencyEqualsBornSupport) {
    for (unsigned n = 2; n <= 5; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t o = 0; o < dim; ++o) {
            const GhzIndex idx = GhzIndex::from_ordinal(n, o);
            const oracle::Vec psi = oracle::ghz(idx.pattern_string(), idx.phase);
            for (std::uint64_t i = 0; i < dim; ++i) {
                for (MeasBasis b : {MeasBasis::Z, MeasBasis::X}) {
                    const std::string out = b == MeasBasis::Z ? z_string(i, n) : x_string(i, n);
                    EXPECT_EQ(outcome_is_consistent(idx, b, out), oracle::born(psi, out) > kTol) << out;
                }
            }
        }
    }
}

TEST(Registry, MeasureSingleEigenstates) {
    QuantumRegistry reg;
    Rng rng(1);
    const QubitId one = reg.add_single(Holder::of_party(0), 0, 1);
    const QubitId plus = reg.add_single(Holder::of_party(0), oracle::kS, oracle::kS);
    for (int i = 0; i < 20; ++i) {
        EXPECT_EQ(reg.measure_single(one, MeasBasis::Z, rng), 1);
        EXPECT_EQ(reg.measure_single(plus, MeasBasis::X, rng), 0);
    }
    reg.check_invariants();
}

TEST(Registry, MeasureSingleGhzParticleIsFair) {
    Rng rng(7);
    int ones = 0;
    const int trials = 10000;
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    for (int t = 0; t < trials; ++t) {
        QuantumRegistry reg;
        const auto qs = reg.add_ghz(index_from_display_label("000"), h);
        ones += reg.measure_single(qs[0], MeasBasis::Z, rng);
    }
    EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 0.02);
}

TEST(Registry, MeasureJointStatisticsMatchBorn) {
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    const oracle::Vec psi = oracle::ghz("00", 0);
    for (MeasBasis basis : {MeasBasis::Z, MeasBasis::X}) {
        Rng rng(basis == MeasBasis::Z ? 11 : 12);
        std::map<std::string, int> counts;
        const int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            QuantumRegistry reg;
            const auto qs = reg.add_ghz(index_from_display_label("000"), h);
            ++counts[reg.measure_joint(qs, basis, rng)];
            reg.check_invariants();
        }
        for (std::uint64_t i = 0; i < 8; ++i) {
            const std::string out = basis == MeasBasis::Z ? z_string(i, 3) : x_string(i, 3);
            EXPECT_NEAR(static_cast<double>(counts[out]) / trials, oracle::born(psi, out), 0.02) << out;
        }
    }
}

TEST(Registry, MeasureJointOddParityForPsi001) {
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        QuantumRegistry reg;
        const auto qs = reg.add_ghz(index_from_display_label("001"), h);
        const std::string out = reg.measure_joint(qs, MeasBasis::X, rng);
        EXPECT_EQ(std::count(out.begin(), out.end(), '-') % 2, 1);
    }
}

TEST(Registry, MeasureJointOrderIndependence) {
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    const oracle::Vec psi = oracle::ghz("10", 1);
    Rng rng(99);
    std::map<std::string, int> counts;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        QuantumRegistry reg;
        const auto qs = reg.add_ghz(GhzIndex::from_pattern("10", 1), h);
        const std::vector<QubitId> rev = {qs[2], qs[1], qs[0]};
        std::string out = reg.measure_joint(rev, MeasBasis::X, rng);
        std::reverse(out.begin(), out.end());
        ++counts[out];
    }
    for (std::uint64_t i = 0; i < 8; ++i) {
        const std::string out = x_string(i, 3);
        EXPECT_NEAR(static_cast<double>(counts[out]) / trials, oracle::born(psi, out), 0.02) << out;
    }
}

TEST(Registry, GhzMeasureEigenstates) {
    const Holder h[3] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2)};
    Rng rng(3);
    for (const char *label : {"101", "000"}) {
        for (int t = 0; t < 50; ++t) {
            QuantumRegistry reg;
            const auto qs = reg.add_ghz(index_from_display_label(label), h);
            EXPECT_EQ(display_label(reg.ghz_measure(qs, rng)), label);
            reg.check_invariants();
        }
    }
}

// Genuine a,b,c in psi_000 plus fakes B=|0>, C=|0>; the GHZ measurement acts
// on (a, B, C). Reference: projector on the explicit 5-qubit vector ordered
// (a, b, c, B, C), tracing over b and c.
TEST(Registry, GhzMeasureFiveQubitProjectorOracle) {
    const Holder h[3] = {Holder::of_party(0), Holder::adversary(), Holder::adversary()};
    QuantumRegistry reg;
    const auto abc = reg.add_ghz(index_from_display_label("000"), h);
    const QubitId fb = reg.add_single(Holder::of_party(1), 1, 0);
    const QubitId fc = reg.add_single(Holder::of_party(2), 1, 0);
    const std::vector<QubitId> qs = {abc[0], fb, fc};
    const std::vector<double> got = reg.ghz_distribution(qs);

    const oracle::Vec phi = oracle::kron(oracle::ghz("00", 0), oracle::product("00"));
    std::size_t support = 0;
    double total = 0.0;
    for (std::uint64_t o = 0; o < 8; ++o) {
        const GhzIndex idx = GhzIndex::from_ordinal(3, o);
        const oracle::Vec g = oracle::ghz(idx.pattern_string(), idx.phase);
        double p = 0.0;
        for (std::uint64_t bc = 0; bc < 4; ++bc) {
            oracle::C amp = 0;
            for (std::uint64_t aBC = 0; aBC < 8; ++aBC) {
                const std::uint64_t a = aBC >> 2;
                const std::uint64_t BC = aBC & 3;
                amp += std::conj(g[aBC]) * phi[(a << 4) | (bc << 2) | BC];
            }
            p += std::norm(amp);
        }
        EXPECT_NEAR(got[o], p, kTol) << display_label(idx);
        total += got[o];
        if (p > kTol) {
            ++support;
            EXPECT_NEAR(p, 0.25, kTol);
        }
    }
    EXPECT_EQ(support, 4u);
    EXPECT_NEAR(total, 1.0, kTol);

    Rng rng(21);
    const GhzIndex r = reg.ghz_measure(qs, rng);
    EXPECT_GT(got[r.ordinal()], 0.0);
    reg.check_invariants();
    EXPECT_TRUE(reg.is_live(abc[1]));
}

TEST(Registry, LabelErrors) {
    QuantumRegistry reg;
    Rng rng(1);
    const QubitId q = reg.add_single(Holder::of_party(0), 1, 0);
    EXPECT_THROW(reg.measure_single(QubitId{42}, MeasBasis::Z, rng), Error);
    EXPECT_THROW(reg.apply_pauli(QubitId{42}, PauliOp::X), Error);
    const std::vector<QubitId> dup = {q, q};
    EXPECT_THROW(reg.ghz_measure(dup, rng), Error);
    try {
        reg.apply_pauli(QubitId{42}, PauliOp::X);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnknownLabel);
    }
}

TEST(Registry, OperationsPreserveNorm) {
    const Holder h[4] = {Holder::of_party(0), Holder::of_party(1), Holder::of_party(2), Holder::of_party(3)};
    QuantumRegistry reg;
    Rng rng(8);
    const auto qs = reg.add_ghz(GhzIndex::from_pattern("101", 1), h);
    reg.apply_pauli(qs[2], PauliOp::IY);
    reg.apply_pauli(qs[0], PauliOp::Z);
    EXPECT_NEAR(reg.subsystem_of(qs[0]).norm_squared(), 1.0, kTol);
    reg.measure_single(qs[1], MeasBasis::X, rng);
    EXPECT_NEAR(reg.subsystem_of(qs[0]).norm_squared(), 1.0, kTol);
    reg.check_invariants();
}
