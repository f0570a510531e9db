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

#include "cwsim/state_sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwsim {

void MixtureModel::validate() const {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("singlet weight q must lie in [0, 1]");
    }
}

NoiseParams NoiseParams::with_defaults(double sigma) {
    return NoiseParams{sigma, (std::sqrt(2.0) - 1.0) * sigma, sigma};
}

void NoiseParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("noise scale sigma must be positive");
    }
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("signal scale s must be non-negative");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("threshold gamma must be positive");
    }
}

CVec4 singlet_amplitudes() {
    const double r = 1.0 / std::sqrt(2.0);
    return {cplx(0.0), cplx(r), cplx(-r), cplx(0.0)};
}

CVec4 sample_prepared_state(const MixtureModel &model, RngStream &rng) {
    if (model.variant == MixtureVariant::Discrete) {
        const double u = rng.uniform();
        if (u < model.q) {
            return singlet_amplitudes();
        }
        // [q, 1) split into four intervals of width (1 - q)/4.
        const double width = (1.0 - model.q) / 4.0;
        const auto k = std::min<std::size_t>(static_cast<std::size_t>((u - model.q) / width), 3);
        CVec4 basis{};
        basis[k] = 1.0;
        return basis;
    }

    const CVec4 singlet = singlet_amplitudes();
    const double a = std::sqrt(model.q);
    // w = z / 2 gives E[w w^dagger] = I/4.
    const double b = 0.5 * std::sqrt(1.0 - model.q);
    CVec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = a * singlet[i] + b * rng.complex_normal();
    }
    return out;
}

CVec4 sample_noise(const NoiseParams &params, RngStream &rng) {
    CVec4 z;
    for (cplx &c : z) {
        c = rng.complex_normal();
    }
    const double scale = params.sigma / norm(z);
    for (cplx &c : z) {
        c *= scale;
    }
    return z;
}

CVec4 assemble_signal(const CVec4 &alpha, const CVec4 &v, const NoiseParams &params) {
    CVec4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = params.s * alpha[i] + v[i];
    }
    return out;
}

}  // namespace cwsim
