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
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "cwsim/werner.hpp"

using namespace cwsim;

namespace {

CMat4 empirical_second_moment(const MixtureModel &model, std::uint64_t seed, int n) {
    RngStream rng(seed, 0);
    CMat4 acc;
    for (int t = 0; t < n; ++t) {
        const CVec4 a = sample_prepared_state(model, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                acc(i, j) += a[i] * std::conj(a[j]);
            }
        }
    }
    for (cplx &x : acc.e) {
        x /= n;
    }
    return acc;
}

double frobenius_diff(const CMat4 &a, const CMat4 &b) {
    double s = 0;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        s += std::norm(a.e[i] - b.e[i]);
    }
    return std::sqrt(s);
}

// One-sample Kolmogorov-Smirnov statistic against Uniform[0, 1).
double ks_uniform(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d = std::max(d, std::max((i + 1) / n - xs[i], xs[i] - i / n));
    }
    return d;
}

}  // namespace

TEST(state_sampler, singlet_amplitudes) {
    const CVec4 s = singlet_amplitudes();
    EXPECT_EQ(s[0], cplx(0.0));
    EXPECT_EQ(s[1], cplx(1.0 / std::sqrt(2.0)));
    EXPECT_EQ(s[2], cplx(-1.0 / std::sqrt(2.0)));
    EXPECT_EQ(s[3], cplx(0.0));
    EXPECT_NEAR(norm(s), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(trace(outer(s, s)) - 1.0), 0.0, 1e-15);
}

TEST(state_sampler, validation) {
    EXPECT_THROW((MixtureModel{MixtureVariant::Discrete, -0.1}.validate()), std::invalid_argument);
    EXPECT_THROW((MixtureModel{MixtureVariant::Gaussian, 1.5}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((MixtureModel{MixtureVariant::Discrete, 0.0}.validate()));
    EXPECT_THROW((NoiseParams{0.0, 0.1, 1.0}.validate()), std::invalid_argument);
    EXPECT_THROW((NoiseParams{1.0, -0.1, 1.0}.validate()), std::invalid_argument);
    EXPECT_THROW((NoiseParams{1.0, 0.1, 0.0}.validate()), std::invalid_argument);
    const NoiseParams d = NoiseParams::with_defaults(2.0);
    EXPECT_DOUBLE_EQ(d.sigma, 2.0);
    EXPECT_DOUBLE_EQ(d.gamma, 2.0);
    EXPECT_DOUBLE_EQ(d.s, 2.0 * (std::sqrt(2.0) - 1.0));
}

TEST(state_sampler, discrete_singlet_only) {
    RngStream rng(1, 0);
    const MixtureModel m{MixtureVariant::Discrete, 1.0};
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(sample_prepared_state(m, rng), singlet_amplitudes());
    }
}

TEST(state_sampler, discrete_uniform_basis_at_q0) {
    RngStream rng(2, 0);
    const MixtureModel m{MixtureVariant::Discrete, 0.0};
    const int n = 400000;
    std::array<int, 4> hits{};
    for (int i = 0; i < n; ++i) {
        const CVec4 a = sample_prepared_state(m, rng);
        int k = -1;
        for (int j = 0; j < 4; ++j) {
            if (a[j] == cplx(1.0)) {
                ASSERT_EQ(k, -1);
                k = j;
            } else {
                ASSERT_EQ(a[j], cplx(0.0));
            }
        }
        ASSERT_NE(k, -1);
        ++hits[k];
    }
    const double tol = 3 * std::sqrt(0.25 * 0.75 / n);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(static_cast<double>(hits[k]) / n, 0.25, tol) << k;
    }
}

TEST(state_sampler, discrete_consumes_one_uniform) {
    RngStream a(3, 3), b(3, 3);
    sample_prepared_state({MixtureVariant::Discrete, 0.5}, a);
    b.uniform();
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(state_sampler, gaussian_consumes_four_normals) {
    RngStream a(3, 3), b(3, 3);
    sample_prepared_state({MixtureVariant::Gaussian, 0.5}, a);
    for (int i = 0; i < 4; ++i) {
        b.complex_normal();
    }
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(state_sampler, gaussian_is_not_renormalized) {
    RngStream rng(4, 0);
    const MixtureModel m{MixtureVariant::Gaussian, 0.0};
    double total = 0;
    bool saw_non_unit = false;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double r2 = norm_squared(sample_prepared_state(m, rng));
        saw_non_unit = saw_non_unit || std::abs(r2 - 1.0) > 1e-3;
        total += r2;
    }
    EXPECT_TRUE(saw_non_unit);
    EXPECT_NEAR(total / n, 1.0, 0.01);
}

TEST(state_sampler, second_moment_matches_werner_density_at_half) {
    const int n = 1000000;
    for (MixtureVariant v : {MixtureVariant::Discrete, MixtureVariant::Gaussian}) {
        const CMat4 emp = empirical_second_moment({v, 0.5}, 21, n);
        EXPECT_LE(max_abs_diff(emp, werner_density(0.5)), 0.005);
    }
}

TEST(state_sampler, second_moment_frobenius_convergence) {
    const int n = 1000000;
    const double tol = 5.0 / std::sqrt(static_cast<double>(n));
    std::uint64_t seed = 100;
    for (MixtureVariant v : {MixtureVariant::Discrete, MixtureVariant::Gaussian}) {
        for (double q : {0.0, 1.0 / 3.0, 1.0}) {
            const CMat4 emp = empirical_second_moment({v, q}, ++seed, n);
            EXPECT_LE(frobenius_diff(emp, werner_density(q)), tol)
                << (v == MixtureVariant::Discrete ? "discrete" : "gaussian") << " q=" << q;
        }
    }
}

TEST(state_sampler, noise_norm_is_sigma) {
    RngStream rng(6, 0);
    for (double sigma : {1.0, 0.37, 2.5}) {
        const NoiseParams p = NoiseParams::with_defaults(sigma);
        for (int i = 0; i < 10000; ++i) {
            ASSERT_NEAR(norm(sample_noise(p, rng)), sigma, 1e-12);
        }
    }
}

TEST(state_sampler, noise_isotropy) {
    const double sigma = 1.7;
    const NoiseParams p = NoiseParams::with_defaults(sigma);
    const int n = 1000000;

    // Oracle: direct Monte Carlo of E[z z^dagger / |z|^2] with an unrelated generator.
    std::mt19937_64 eng(99);
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    CMat4 oracle;
    CMat4 sampled;
    RngStream rng(7, 0);
    for (int t = 0; t < n; ++t) {
        CVec4 z;
        for (cplx &c : z) {
            c = {nd(eng), nd(eng)};
        }
        const double z2 = norm_squared(z);
        const CVec4 v = sample_noise(p, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                oracle(i, j) += z[i] * std::conj(z[j]) / z2;
                sampled(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    for (std::size_t k = 0; k < 16; ++k) {
        oracle.e[k] *= sigma * sigma / n;
        sampled.e[k] /= n;
    }
    CMat4 expected;
    for (std::size_t i = 0; i < 4; ++i) {
        expected(i, i) = sigma * sigma / 4;
    }
    EXPECT_LE(max_abs_diff(oracle, expected), 0.005 * sigma * sigma);
    EXPECT_LE(max_abs_diff(sampled, expected), 0.005 * sigma * sigma);
    EXPECT_LE(max_abs_diff(sampled, oracle), 0.005 * sigma * sigma);
}

TEST(state_sampler, noise_phases_uniform) {
    RngStream rng(8, 0);
    const NoiseParams p = NoiseParams::with_defaults(1.0);
    const int n = 100000;
    std::array<std::vector<double>, 4> phases;
    for (int t = 0; t < n; ++t) {
        const CVec4 v = sample_noise(p, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            double ph = std::arg(v[i]);
            if (ph < 0) {
                ph += 2 * std::numbers::pi;
            }
            phases[i].push_back(ph / (2 * std::numbers::pi));
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LE(ks_uniform(phases[i]), 0.01) << "component " << i;
    }
}

TEST(state_sampler, assemble_signal) {
    RngStream rng(9, 0);
    const NoiseParams p = NoiseParams::with_defaults(1.0);
    const CVec4 v = sample_noise(p, rng);
    EXPECT_EQ(assemble_signal(CVec4{}, v, p), v);
    NoiseParams silent = p;
    silent.s = 0.0;
    EXPECT_EQ(assemble_signal(singlet_amplitudes(), v, silent), v);
    const CVec4 a = assemble_signal(singlet_amplitudes(), v, p);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a[i], p.s * singlet_amplitudes()[i] + v[i]);
    }
}

TEST(state_sampler, discrete_signal_norm_bound_and_exclusivity) {
    const NoiseParams p = NoiseParams::with_defaults(1.0);
    const int n = 1000000;
    std::uint64_t stream = 0;
    for (double q : {0.0, 0.5, 1.0}) {
        RngStream rng(10, ++stream);
        const MixtureModel m{MixtureVariant::Discrete, q};
        int violations = 0;
        for (int t = 0; t < n; ++t) {
            const CVec4 alpha = sample_prepared_state(m, rng);
            const CVec4 a = assemble_signal(alpha, sample_noise(p, rng), p);
            ASSERT_LE(norm(a), std::sqrt(2.0) * p.sigma + 1e-12);
            int above = 0;
            for (const cplx &c : a) {
                above += std::abs(c) > p.gamma;
            }
            violations += above > 1;
        }
        EXPECT_EQ(violations, 0) << "q=" << q;
    }
}

TEST(state_sampler, deterministic_sequences) {
    RngStream a(11, 2), b(11, 2);
    const MixtureModel m{MixtureVariant::Gaussian, 0.3};
    const NoiseParams p = NoiseParams::with_defaults(1.0);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(sample_prepared_state(m, a), sample_prepared_state(m, b));
        ASSERT_EQ(sample_noise(p, a), sample_noise(p, b));
    }
}
