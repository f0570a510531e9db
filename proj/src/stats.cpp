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

#include "cwsim/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "cwsim/rng.hpp"

namespace cwsim {

FrequencyEstimate FrequencyEstimate::from_count(std::uint64_t count, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("frequency needs N > 0");
    }
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

WitnessError propagate_witness_error(const NamedCounts &counts, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("error propagation needs N > 0");
    }
    const auto f = [n](std::uint64_t c) { return FrequencyEstimate::from_count(c, n); };
    const FrequencyEstimate hh = f(counts.hh), hv = f(counts.hv), vh = f(counts.vh), vv = f(counts.vv);
    const FrequencyEstimate dd = f(counts.dd), aa = f(counts.aa), lr = f(counts.lr), rl = f(counts.rl);

    const double mu_x = hh.p_hat + vv.p_hat + dd.p_hat + aa.p_hat - lr.p_hat - rl.p_hat;
    const double mu_y = hh.p_hat + hv.p_hat + vh.p_hat + vv.p_hat;
    if (mu_y == 0.0) {
        throw EstimationError(EstimationError::Kind::ZeroDenominator, "standard-basis frequency total is zero");
    }
    const auto sq = [](double x) { return x * x; };
    const double sigma_x = std::sqrt(sq(hh.sigma_hat) + sq(vv.sigma_hat) + sq(dd.sigma_hat) + sq(aa.sigma_hat) +
                                     sq(lr.sigma_hat) + sq(rl.sigma_hat));
    const double sigma_y = std::sqrt(sq(hh.sigma_hat) + sq(hv.sigma_hat) + sq(vh.sigma_hat) + sq(vv.sigma_hat));

    if (mu_x == 0.0) {
        return {sigma_x / (2.0 * mu_y), true};
    }
    const double w = 0.5 * mu_x / mu_y;
    return {std::abs(w) * std::sqrt(sq(sigma_x / mu_x) + sq(sigma_y / mu_y)), false};
}

double propagate_q_error(const NamedCounts &counts, std::uint64_t n) {
    if (counts.hh == 0 || counts.hv == 0 || counts.vh == 0 || counts.vv == 0) {
        throw EstimationError(EstimationError::Kind::ZeroCount, "a standard-basis count is zero");
    }
    const auto f = [n](std::uint64_t c) { return FrequencyEstimate::from_count(c, n); };
    const FrequencyEstimate hh = f(counts.hh), hv = f(counts.hv), vh = f(counts.vh), vv = f(counts.vv);

    const auto ratio_error = [](const FrequencyEstimate &num, const FrequencyEstimate &den) {
        const double a = num.sigma_hat / num.p_hat;
        const double b = den.sigma_hat / den.p_hat;
        return num.p_hat / den.p_hat * std::sqrt(a * a + b * b);
    };
    const double dr1 = ratio_error(hh, vh);
    const double dr2 = ratio_error(vv, hv);
    const double dr3 = ratio_error(hh, hv);
    const double dr4 = ratio_error(vv, vh);
    const double delta_r = 0.25 * std::sqrt(dr1 * dr1 + dr2 * dr2 + dr3 * dr3 + dr4 * dr4);

    const SingletWeightEstimate est = estimate_q(counts);
    // |q| / |1 - R| = 1 / (1 + R), so the first term is evaluated in that form;
    // it stays finite at R = 1 where q = 0.
    const double t1 = delta_r / (1.0 + est.r_est);
    const double t2 = std::abs(est.q_est) * delta_r / (1.0 + est.r_est);
    return std::sqrt(t1 * t1 + t2 * t2);
}

std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t replication) {
    return mix64(master_seed ^ mix64(replication + 0x2545F4914F6CDD1DULL));
}

BootstrapSpread bootstrap_spread(const ExperimentConfig &config, std::span<const std::uint64_t> seeds) {
    if (seeds.size() < 2) {
        throw std::invalid_argument("bootstrap needs at least two replications");
    }
    config.validate();
    const auto reps = static_cast<std::int64_t>(seeds.size());
    std::vector<double> w(seeds.size(), std::nan(""));
    std::vector<double> q(seeds.size(), std::nan(""));

    // Inner batch kernels run single-threaded inside this region (no nesting).
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.threads > 0 ? config.threads : omp_get_max_threads())
    for (std::int64_t r = 0; r < reps; ++r) {
        ExperimentConfig rep = config;
        rep.master_seed = seeds[static_cast<std::size_t>(r)];
        rep.threads = 1;
        const WitnessResult res = run_witness_experiment(rep);
        if (res.w_est && res.q_est) {
            w[static_cast<std::size_t>(r)] = *res.w_est;
            q[static_cast<std::size_t>(r)] = *res.q_est;
        }
    }

    const auto sample_std = [](const std::vector<double> &xs) {
        double mean = 0.0;
        std::size_t k = 0;
        for (double x : xs) {
            if (!std::isnan(x)) {
                mean += x;
                ++k;
            }
        }
        if (k < 2) {
            return std::nan("");
        }
        mean /= static_cast<double>(k);
        double ss = 0.0;
        for (double x : xs) {
            if (!std::isnan(x)) {
                ss += (x - mean) * (x - mean);
            }
        }
        return std::sqrt(ss / static_cast<double>(k - 1));
    };

    BootstrapSpread out;
    out.replications = seeds.size();
    for (double x : w) {
        out.skipped += std::isnan(x);
    }
    out.std_w = sample_std(w);
    out.std_q = sample_std(q);
    return out;
}

BootstrapSpread bootstrap_spread(const ExperimentConfig &config, std::uint64_t replications) {
    std::vector<std::uint64_t> seeds(replications);
    for (std::uint64_t r = 0; r < replications; ++r) {
        seeds[r] = replication_seed(config.master_seed, r);
    }
    return bootstrap_spread(config, seeds);
}

}  // namespace cwsim
