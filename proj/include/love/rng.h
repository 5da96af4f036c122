// Copyright 2026 The love-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOVE_RNG_H
#define LOVE_RNG_H

#include <cstdint>
#include <random>

namespace love {

using Rng = std::mt19937_64;

/// Sub-streams derived from one user seed.
enum class Stream : uint64_t {
    ANGLES = 1,
    NOISE = 2,
    PREP_REFERENCE = 3,
};

inline constexpr const char *kRngDescription =
    "std::mt19937_64 seeded by std::seed_seq{seed_lo, seed_hi, stream, index_lo, index_hi}";

/// Independent generator for (seed, stream, index); index is usually the shot number.
inline Rng make_stream(uint64_t seed, Stream stream, uint64_t index) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(stream), static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index >> 32)};
    return Rng(seq);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace love

#endif
