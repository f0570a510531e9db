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
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cwsim/protocol.hpp"

namespace cwsim {

/// Invalid or unparseable configuration. field() names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string &field() const { return field_; }

private:
    std::string field_;
};

/// User-facing run configuration. Physics scales are stored as ratios to
/// sigma and converted to absolute values by to_experiment().
///
/// Recognized keys (dashes and underscores are interchangeable):
///   q, model (discrete|gaussian), scheme (local|joint), sigma,
///   gamma_over_sigma, s_over_sigma, n, seed, batch_policy (per-basis|per-count),
///   threads
struct RunConfig {
    double q = 1.0;
    MixtureVariant model = MixtureVariant::Discrete;
    Scheme scheme = Scheme::Local;
    double sigma = 1.0;
    double gamma_over_sigma = 1.0;
    double s_over_sigma = std::sqrt(2.0) - 1.0;
    std::uint64_t n = std::uint64_t{1} << 20;
    std::uint64_t seed = 1;
    BatchPolicy batch_policy = BatchPolicy::PerBasis;
    int threads = 0;

    /// Sets one field from its textual value. Throws ConfigError.
    void set(std::string_view key, std::string_view value);

    /// Validated experiment configuration. Throws ConfigError.
    ExperimentConfig to_experiment() const;

    /// Flat "key = value" lines in a fixed order, parseable by parse_config.
    std::string to_key_value() const;
};

/// Parses either flat "key = value" text ('#' comments, blank lines allowed)
/// or a JSON object with the same keys, applied on top of `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

/// Parses a grid given as "a,b,c" or "start:stop:step" (inclusive of stop
/// within half a step). Throws ConfigError for empty or malformed grids.
std::vector<double> parse_grid(std::string_view text, std::string_view field);

/// Locale-independent number parsing; accepts "2^k" for integers.
double parse_double(std::string_view text, std::string_view field);
std::uint64_t parse_count(std::string_view text, std::string_view field);

std::string_view model_name(MixtureVariant v);
std::string_view scheme_name(Scheme s);
std::string_view batch_policy_name(BatchPolicy p);

}  // namespace cwsim
