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
#include <span>

#include "cwsim/counts.hpp"
#include "cwsim/protocol.hpp"

namespace cwsim {

/// Binomial frequency estimate for one count out of N realizations.
struct FrequencyEstimate {
    double p_hat = 0.0;
    double sigma_hat = 0.0;  ///< sqrt(p_hat (1 - p_hat) / N)
    std::uint64_t n = 0;

    static FrequencyEstimate from_count(std::uint64_t count, std::uint64_t n);
};

struct WitnessError {
    double delta_w = 0.0;
    /// mu_X was zero, so delta_w = sigma_X / (2 mu_Y) instead of the relative form.
    bool zero_mean_fallback = false;
};

/// Gaussian error propagation for W_est treating the eight frequencies as
/// independent binomials with sampled values in place of their means:
///
///   delta_W = |W| sqrt((sigma_X / mu_X)^2 + (sigma_Y / mu_Y)^2)
///
/// with X the witness numerator over N (six terms) and Y the standard-basis
/// total over N (four terms). The covariance from C_HH and C_VV appearing in
/// both X and Y is ignored.
///
/// Throws EstimationError(ZeroDenominator) when mu_Y = 0 and
/// std::invalid_argument when n = 0.
WitnessError propagate_witness_error(const NamedCounts &counts, std::uint64_t n);

/// Error propagation for q_est. Each ratio r_i = p_x / p_y contributes
/// delta r_i = r_i sqrt((sigma_x / p_x)^2 + (sigma_y / p_y)^2), the four are
/// combined in quadrature into delta_R = (1/4) sqrt(sum delta r_i^2), and
///
///   delta_q = |q| sqrt((delta_R / (1 - R))^2 + (delta_R / (1 + R))^2)
///
/// with R = R_est. Throws EstimationError(ZeroCount) if any of C_HH, C_HV,
/// C_VH, C_VV is zero.
double propagate_q_error(const NamedCounts &counts, std::uint64_t n);

/// Half-widths at the given multiplier (2 gives roughly 95% coverage).
struct ErrorBars {
    double delta_w = 0.0;
    double delta_q = 0.0;
    double multiplier = 2.0;

    double half_width_w() const { return multiplier * delta_w; }
    double half_width_q() const { return multiplier * delta_q; }
};

struct BootstrapSpread {
    double std_w = 0.0;
    double std_q = 0.0;
    std::uint64_t replications = 0;
    /// Replications where W_est or q_est was undefined and had to be skipped.
    std::uint64_t skipped = 0;
};

/// Seed for bootstrap replication r, derived from the master seed.
std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t replication);

/// Reruns the experiment once per seed and returns the sample standard
/// deviations (n - 1 denominator) of W_est and q_est. Replications run in
/// parallel; the result does not depend on the thread count. Throws
/// std::invalid_argument for fewer than two seeds.
BootstrapSpread bootstrap_spread(const ExperimentConfig &config, std::span<const std::uint64_t> seeds);

/// Convenience form using replication_seed(config.master_seed, r) for r < replications.
BootstrapSpread bootstrap_spread(const ExperimentConfig &config, std::uint64_t replications);

}  // namespace cwsim
