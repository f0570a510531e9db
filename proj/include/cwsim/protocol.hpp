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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwsim/counts.hpp"
#include "cwsim/detection.hpp"
#include "cwsim/rng.hpp"
#include "cwsim/state_sampler.hpp"

namespace cwsim {

enum class BatchPolicy {
    PerBasis,  ///< one batch of N per basis pair (HV/HV, DA/DA, LR/LR)
    PerCount,  ///< one independent batch of N per named count (eight batches)
};

struct ExperimentConfig {
    MixtureModel model;
    NoiseParams noise;
    std::uint64_t n = std::uint64_t{1} << 20;
    Scheme scheme = Scheme::Local;
    BatchPolicy batch_policy = BatchPolicy::PerBasis;
    std::uint64_t master_seed = 1;
    /// OpenMP threads for the batch kernels; 0 leaves the runtime default.
    int threads = 0;
    /// Folded into every stream key so sweep points draw independent samples.
    std::uint64_t sweep_index = 0;

    /// Throws std::invalid_argument on out-of-range fields (including N = 0).
    void validate() const;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Tallies for one batch of realizations measured in a single setting.
///
/// Classified fields partition the batch: for Local every realization lands in
/// exactly one of coincidences / singles_a / singles_b / no_detections /
/// doubles, and for Joint in coincidences (Detected) / no_detections / doubles
/// (MultipleDetection). The channel_* fields are raw, overlapping flag tallies
/// kept for the efficiency analysis (Local only).
struct CountRecord {
    MeasurementSetting setting;
    std::uint64_t n = 0;
    std::array<std::array<std::uint64_t, 2>, 2> coincidences{};
    std::array<std::uint64_t, 2> singles_a{};
    std::array<std::uint64_t, 2> singles_b{};
    std::uint64_t no_detections = 0;
    std::uint64_t doubles = 0;

    std::array<std::uint64_t, 2> fires_a{};
    std::array<std::uint64_t, 2> fires_b{};
    std::array<std::array<std::uint64_t, 2>, 2> channel_pairs{};
    std::array<std::uint64_t, 2> channel_singles_a{};
    std::array<std::uint64_t, 2> channel_singles_b{};

    /// Adds another record's tallies (settings must match).
    void merge(const CountRecord &other);

    /// Sum of the partitioning fields; equals n for a well-formed record.
    std::uint64_t classified_total() const;

    /// C_HH + C_HV + C_VH + C_VV for an HV/HV record.
    std::uint64_t coincidence_total() const;

    bool operator==(const CountRecord &) const = default;
};

/// Realizations per RNG work chunk. Chunk k of a batch always draws from
/// stream.substream(k), so results do not depend on how chunks map to threads.
inline constexpr std::uint64_t kChunkSize = 4096;

/// Draws config.n realizations and tallies them in the given setting. Chunks
/// run in parallel under OpenMP. Bit-identical to run_setting_serial.
CountRecord run_setting(const ExperimentConfig &config, const MeasurementSetting &setting, const RngStream &stream);

/// Single-threaded reference for run_setting.
CountRecord run_setting_serial(const ExperimentConfig &config, const MeasurementSetting &setting,
                               const RngStream &stream);

/// Stream index for a batch: stable_hash(label, sweep_index).
std::uint64_t batch_stream_index(std::string_view label, std::uint64_t sweep_index);

/// W_est = (1/2) (C_HH + C_VV + C_DD + C_AA - C_LR - C_RL) / (C_HH + C_HV + C_VH + C_VV).
/// Throws EstimationError(ZeroDenominator) when no standard-basis coincidences exist.
double estimate_witness(const NamedCounts &counts);

struct SingletWeightEstimate {
    double r_est = 0.0;
    double q_est = 0.0;
};

/// R_est = (1/4)[C_HH/C_VH + C_VV/C_HV + C_HH/C_HV + C_VV/C_VH], q_est = (1 - R)/(1 + R).
/// Throws EstimationError(ZeroDenominator) when C_HV or C_VH is zero.
SingletWeightEstimate estimate_q(const NamedCounts &counts);

/// Witness numerator over 2N: the estimate without coincidence postselection.
double witness_normalized_by_n(const NamedCounts &counts, std::uint64_t n);

struct TrueEfficiencies {
    double eps_ab = 0.0;
    double eps_a = 0.0;
    double eps_b = 0.0;
    double eps = 0.0;

    bool operator==(const TrueEfficiencies &) const = default;
};

struct MeasuredEfficiencies {
    double eta_a = 0.0;
    double eta_b = 0.0;
    double eta = 0.0;

    bool operator==(const MeasuredEfficiencies &) const = default;
};

/// From a Local HV/HV record: eps_AB = coincidences / N, eps_A adds A-only
/// singles, eps_B adds B-only singles, eps is their mean. Throws
/// std::invalid_argument when record.n == 0.
TrueEfficiencies true_efficiencies(const CountRecord &record);

/// Same formulas using raw channel tallies, where a realization firing both
/// channels on a side contributes once per channel. Values above 1 signal that
/// double detections make the efficiency ill defined.
TrueEfficiencies channel_efficiencies(const CountRecord &record);

/// eta_A = eps_AB / eps_B, eta_B = eps_AB / eps_A, eta = mean.
/// Throws EstimationError(ZeroSingleEfficiency) when eps_A or eps_B is zero.
MeasuredEfficiencies measured_efficiencies(double eps_ab, double eps_a, double eps_b);

/// Bit flags attached to a result.
enum WitnessFlag : unsigned {
    kDegenerateCounts = 1u << 0,     ///< a W_est or R_est denominator was zero
    kZeroMeanWitness = 1u << 1,      ///< delta_W used the mu_X = 0 fallback
    kZeroCountError = 1u << 2,       ///< a standard count was zero, delta_q omitted
    kEfficiencyUndefined = 1u << 3,  ///< eps_A or eps_B was zero, eta omitted
    kEfficiencyIllDefined = 1u << 4, ///< a channel-convention efficiency exceeded 1
    kRunFailed = 1u << 5,            ///< the run threw; see SweepRow::error
};

std::vector<std::string> flag_names(unsigned flags);

/// True for flags that make the run's statistics unusable (CLI exit code 2).
bool has_degenerate_statistics(unsigned flags);

struct BatchRecord {
    std::string label;  ///< stream label, e.g. "local:DA/DA" or "count:C_DD"
    std::uint64_t stream_index = 0;
    CountRecord record;

    bool operator==(const BatchRecord &) const = default;
};

struct EfficiencyReport {
    TrueEfficiencies true_eff;
    std::optional<MeasuredEfficiencies> measured;
    TrueEfficiencies channel;

    bool operator==(const EfficiencyReport &) const = default;
};

struct WitnessResult {
    ExperimentConfig config;
    NamedCounts counts;
    std::vector<BatchRecord> batches;

    std::optional<double> w_est;
    std::optional<double> r_est;
    std::optional<double> q_est;
    std::optional<double> delta_w;
    std::optional<double> delta_q;
    /// Witness normalized by 2N instead of the coincidence total.
    double w_over_n = 0.0;
    /// Standard-basis coincidence fraction, (C_HH + C_HV + C_VH + C_VV) / N.
    double yield = 0.0;

    /// Local scheme only.
    std::optional<EfficiencyReport> efficiencies;

    unsigned flags = 0;

    bool operator==(const WitnessResult &) const = default;
};

/// Runs the batches implied by config.batch_policy, extracts the eight named
/// counts, and fills every estimate that its inputs allow. Undefined estimates
/// are left empty and flagged instead of throwing.
WitnessResult run_witness_experiment(const ExperimentConfig &config);

struct SweepRow {
    double value = 0.0;
    WitnessResult result;
    std::string error;  ///< non-empty when the run threw; result.flags has kRunFailed
};

struct SweepResult {
    std::string parameter;  ///< "q" or "gamma_over_sigma"
    std::vector<SweepRow> rows;  ///< ascending in value
};

/// One run per q value. Values are sorted first; row i uses sweep_index i.
SweepResult sweep_q(const ExperimentConfig &config, std::span<const double> q_values);

/// One run per gamma/sigma ratio, with gamma = ratio * config.noise.sigma.
SweepResult sweep_gamma(const ExperimentConfig &config, std::span<const double> gamma_over_sigma);

}  // namespace cwsim
