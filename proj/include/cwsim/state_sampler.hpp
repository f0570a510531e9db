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

#include <cmath>

#include "cwsim/complex_linalg.hpp"
#include "cwsim/rng.hpp"

namespace cwsim {

enum class MixtureVariant {
    Discrete,  ///< singlet with probability q, else a uniformly chosen standard basis vector
    Gaussian,  ///< sqrt(q) singlet + sqrt(1 - q) w, w complex Gaussian with covariance I/4
};

struct MixtureModel {
    MixtureVariant variant = MixtureVariant::Discrete;
    double q = 1.0;  ///< singlet weight in [0, 1]

    /// Throws std::invalid_argument when q is outside [0, 1].
    void validate() const;

    bool operator==(const MixtureModel &) const = default;
};

/// Noise and detection scales. Only the ratios s/sigma and gamma/sigma affect
/// detection decisions.
struct NoiseParams {
    double sigma = 1.0;
    double s = std::sqrt(2.0) - 1.0;
    double gamma = 1.0;

    /// s = (sqrt(2) - 1) sigma and gamma = sigma.
    static NoiseParams with_defaults(double sigma);

    void validate() const;

    bool operator==(const NoiseParams &) const = default;
};

/// [0, 1, -1, 0] / sqrt(2).
CVec4 singlet_amplitudes();

/// Draws one prepared state. Consumes exactly one uniform for the Discrete
/// variant and four complex normals for the Gaussian variant.
CVec4 sample_prepared_state(const MixtureModel &model, RngStream &rng);

/// sigma z / |z| with z standard complex Gaussian; |result| = sigma.
CVec4 sample_noise(const NoiseParams &params, RngStream &rng);

/// s alpha + v.
CVec4 assemble_signal(const CVec4 &alpha, const CVec4 &v, const NoiseParams &params);

}  // namespace cwsim
