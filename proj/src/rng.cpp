// Copyright 2026 The cwsim Authors
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

#include "cwsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace cwsim {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stable_hash(std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return mix64(h ^ mix64(index));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : RngStream(seed, stream, mix64(mix64(seed) ^ stream)) {}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t engine_seed)
    : seed_(seed), stream_(stream), engine_(engine_seed) {}

RngStream RngStream::substream(std::uint64_t index) const {
    const std::uint64_t key = mix64(mix64(mix64(seed_) ^ stream_) + mix64(index ^ 0x5DEECE66DULL));
    return RngStream(seed_, stream_, key);
}

cplx RngStream::complex_normal() {
    // 1 - u lies in (0, 1], so the logarithm is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phase = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

}  // namespace cwsim
