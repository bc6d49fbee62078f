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

#ifndef GHZQSDC_RNG_HPP
#define GHZQSDC_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ghzqsdc {

/// Purpose tags separating the random streams of one session. Values are part
/// of the reproducibility contract; never renumber.
enum class StreamTag : std::uint64_t {
    kPrepare = 1,
    kCheckSelect = 2,
    kCheckMeasure = 3,
    kMessages = 4,
    kReadout = 5,
    kReveal = 6,
    kAdversary = 7,
    kTrial = 8,
};

/// Stateless 64-bit mixer (SplitMix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combination of two words; used for stream keys and digests.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

/// Counter-based generator: output i is mix64(key + (i+1) * golden). Streams
/// are derived by hashing (master, group, tag), so groups and trials can be
/// processed in any order and still reproduce the same draws.
class Rng {
public:
    explicit Rng(std::uint64_t key) : key_(key) {}

    static Rng derive(std::uint64_t master, std::uint64_t group, StreamTag tag);

    /// Child stream keyed by this stream's key and `tag`. Does not advance this stream.
    Rng split(std::uint64_t tag) const;

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform in [0, bound), unbiased. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p);
    std::uint8_t bit() { return static_cast<std::uint8_t>(next_u64() >> 63); }

    /// `count` distinct values from [0, population), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample(std::size_t population, std::size_t count);

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ghzqsdc

#endif
