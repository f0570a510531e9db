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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cwsim/complex_linalg.hpp"

namespace cwsim {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a of the label folded with an index. Stable across platforms and builds.
std::uint64_t stable_hash(std::string_view label, std::uint64_t index);

/// Deterministic random stream identified by (seed, stream index).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniform and Gaussian variates are derived here rather than via
/// std::*_distribution, whose algorithms are implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Independent child stream for work chunk `index`. Children are keyed only
    /// by (seed, stream, index), never by the parent's consumption state.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard complex Gaussian, E|z|^2 = 1 (real and imaginary parts have
    /// variance 1/2). Box-Muller in polar form: |z|^2 ~ Exp(1), phase uniform.
    cplx complex_normal();

private:
    RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t engine_seed);

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace cwsim
