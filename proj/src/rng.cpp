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

#include "rng.hpp"

#include <numeric>

#include "error.hpp"

namespace ghzqsdc {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a + kGolden) ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2)));
}

Rng Rng::derive(std::uint64_t master, std::uint64_t group, StreamTag tag) {
    return Rng(hash_combine(hash_combine(master, group), static_cast<std::uint64_t>(tag)));
}

Rng Rng::split(std::uint64_t tag) const { return Rng(hash_combine(key_, tag)); }

std::uint64_t Rng::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::kInvalidArgument, "Rng::below: bound must be nonzero");
    }
    // Rejection on the top of the range keeps the result unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
}

std::vector<std::size_t> Rng::sample(std::size_t population, std::size_t count) {
    if (count > population) {
        throw Error(ErrorCode::kInvalidArgument, "Rng::sample: count exceeds population");
    }
    std::vector<std::size_t> pool(population);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(population - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace ghzqsdc
