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

#include "cwsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "cwsim/stats.hpp"

namespace cwsim {

void ExperimentConfig::validate() const {
    model.validate();
    noise.validate();
    if (n == 0) {
        throw std::invalid_argument("batch size N must be at least 1");
    }
    if (threads < 0) {
        throw std::invalid_argument("threads must be non-negative");
    }
}

void CountRecord::merge(const CountRecord &other) {
    n += other.n;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            coincidences[i][j] += other.coincidences[i][j];
            channel_pairs[i][j] += other.channel_pairs[i][j];
        }
        singles_a[i] += other.singles_a[i];
        singles_b[i] += other.singles_b[i];
        fires_a[i] += other.fires_a[i];
        fires_b[i] += other.fires_b[i];
        channel_singles_a[i] += other.channel_singles_a[i];
        channel_singles_b[i] += other.channel_singles_b[i];
    }
    no_detections += other.no_detections;
    doubles += other.doubles;
}

std::uint64_t CountRecord::classified_total() const {
    return coincidence_total() + singles_a[0] + singles_a[1] + singles_b[0] + singles_b[1] + no_detections + doubles;
}

std::uint64_t CountRecord::coincidence_total() const {
    return coincidences[0][0] + coincidences[0][1] + coincidences[1][0] + coincidences[1][1];
}

namespace {

// Tallies realizations [begin, end) of a batch; every chunk starts a fresh substream.
void tally_chunk(const ExperimentConfig &config, const SettingRotations &rotations, Scheme scheme, RngStream rng,
                 std::uint64_t count, CountRecord &out) {
    const double gamma = config.noise.gamma;
    for (std::uint64_t r = 0; r < count; ++r) {
        const CVec4 alpha = sample_prepared_state(config.model, rng);
        const CVec4 v = sample_noise(config.noise, rng);
        const CVec4 a = assemble_signal(alpha, v, config.noise);

        if (scheme == Scheme::Joint) {
            const JointOutcome o = measure_joint(a, rotations.joint, gamma);
            switch (o.kind) {
                case JointOutcome::Kind::Detected:
                    ++out.coincidences[o.index >> 1][o.index & 1];
                    break;
                case JointOutcome::Kind::NoDetection:
                    ++out.no_detections;
                    break;
                case JointOutcome::Kind::MultipleDetection:
                    ++out.doubles;
                    break;
            }
            continue;
        }

        const LocalEvent e = measure_local(a, rotations, gamma);
        const bool any_a = e.fire_a0 || e.fire_a1;
        const bool any_b = e.fire_b0 || e.fire_b1;
        for (int k = 0; k < 2; ++k) {
            out.fires_a[k] += e.fire_a(k);
            out.fires_b[k] += e.fire_b(k);
            out.channel_singles_a[k] += e.fire_a(k) && !any_b;
            out.channel_singles_b[k] += e.fire_b(k) && !any_a;
            for (int j = 0; j < 2; ++j) {
                out.channel_pairs[k][j] += e.fire_a(k) && e.fire_b(j);
            }
        }

        const LocalClass c = classify_local(e);
        switch (c.kind) {
            case LocalClass::Kind::Coincidence:
                ++out.coincidences[c.outcome_a][c.outcome_b];
                break;
            case LocalClass::Kind::SingleA:
                ++out.singles_a[c.outcome_a];
                break;
            case LocalClass::Kind::SingleB:
                ++out.singles_b[c.outcome_b];
                break;
            case LocalClass::Kind::NoDetection:
                ++out.no_detections;
                break;
            case LocalClass::Kind::DoubleInvolved:
                ++out.doubles;
                break;
        }
    }
    out.n += count;
}

std::uint64_t chunk_count(std::uint64_t n) { return (n + kChunkSize - 1) / kChunkSize; }

std::uint64_t chunk_length(std::uint64_t n, std::uint64_t chunk) {
    return std::min(kChunkSize, n - chunk * kChunkSize);
}

}  // namespace

CountRecord run_setting_serial(const ExperimentConfig &config, const MeasurementSetting &setting,
                               const RngStream &stream) {
    const SettingRotations rotations = SettingRotations::for_setting(setting);
    CountRecord total;
    total.setting = setting;
    const std::uint64_t chunks = chunk_count(config.n);
    for (std::uint64_t k = 0; k < chunks; ++k) {
        tally_chunk(config, rotations, setting.scheme, stream.substream(k), chunk_length(config.n, k), total);
    }
    return total;
}

CountRecord run_setting(const ExperimentConfig &config, const MeasurementSetting &setting, const RngStream &stream) {
    const SettingRotations rotations = SettingRotations::for_setting(setting);
    CountRecord total;
    total.setting = setting;
    const auto chunks = static_cast<std::int64_t>(chunk_count(config.n));
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        CountRecord local;
        local.setting = setting;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::int64_t k = 0; k < chunks; ++k) {
            const auto chunk = static_cast<std::uint64_t>(k);
            tally_chunk(config, rotations, setting.scheme, stream.substream(chunk), chunk_length(config.n, chunk),
                        local);
        }
        // Integer sums; merge order does not matter.
#pragma omp critical(cwsim_run_setting_merge)
        total.merge(local);
    }
    return total;
}

std::uint64_t batch_stream_index(std::string_view label, std::uint64_t sweep_index) {
    return stable_hash(label, sweep_index);
}

double estimate_witness(const NamedCounts &counts) {
    const std::uint64_t denom = counts.standard_total();
    if (denom == 0) {
        throw EstimationError(EstimationError::Kind::ZeroDenominator, "no standard-basis coincidences");
    }
    return 0.5 * static_cast<double>(counts.witness_numerator()) / static_cast<double>(denom);
}

SingletWeightEstimate estimate_q(const NamedCounts &counts) {
    if (counts.hv == 0 || counts.vh == 0) {
        throw EstimationError(EstimationError::Kind::ZeroDenominator, "C_HV or C_VH is zero");
    }
    const double hh = static_cast<double>(counts.hh);
    const double vv = static_cast<double>(counts.vv);
    const double hv = static_cast<double>(counts.hv);
    const double vh = static_cast<double>(counts.vh);
    const double r = 0.25 * (hh / vh + vv / hv + hh / hv + vv / vh);
    return {r, (1.0 - r) / (1.0 + r)};
}

double witness_normalized_by_n(const NamedCounts &counts, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("N must be positive");
    }
    return 0.5 * static_cast<double>(counts.witness_numerator()) / static_cast<double>(n);
}

TrueEfficiencies true_efficiencies(const CountRecord &record) {
    if (record.n == 0) {
        throw std::invalid_argument("efficiencies need N > 0");
    }
    const double n = static_cast<double>(record.n);
    TrueEfficiencies t;
    t.eps_ab = static_cast<double>(record.coincidence_total()) / n;
    t.eps_a = t.eps_ab + static_cast<double>(record.singles_a[0] + record.singles_a[1]) / n;
    t.eps_b = t.eps_ab + static_cast<double>(record.singles_b[0] + record.singles_b[1]) / n;
    t.eps = 0.5 * (t.eps_a + t.eps_b);
    return t;
}

TrueEfficiencies channel_efficiencies(const CountRecord &record) {
    if (record.n == 0) {
        throw std::invalid_argument("efficiencies need N > 0");
    }
    const double n = static_cast<double>(record.n);
    const auto &p = record.channel_pairs;
    TrueEfficiencies t;
    t.eps_ab = static_cast<double>(p[0][0] + p[0][1] + p[1][0] + p[1][1]) / n;
    t.eps_a = t.eps_ab + static_cast<double>(record.channel_singles_a[0] + record.channel_singles_a[1]) / n;
    t.eps_b = t.eps_ab + static_cast<double>(record.channel_singles_b[0] + record.channel_singles_b[1]) / n;
    t.eps = 0.5 * (t.eps_a + t.eps_b);
    return t;
}

MeasuredEfficiencies measured_efficiencies(double eps_ab, double eps_a, double eps_b) {
    if (!(eps_a > 0.0) || !(eps_b > 0.0)) {
        throw EstimationError(EstimationError::Kind::ZeroSingleEfficiency, "single-detector efficiency is zero");
    }
    MeasuredEfficiencies m;
    m.eta_a = eps_ab / eps_b;
    m.eta_b = eps_ab / eps_a;
    m.eta = 0.5 * (m.eta_a + m.eta_b);
    return m;
}

std::vector<std::string> flag_names(unsigned flags) {
    static constexpr std::pair<unsigned, const char *> kNames[] = {
        {kDegenerateCounts, "DegenerateCounts"},       {kZeroMeanWitness, "ZeroMeanWitness"},
        {kZeroCountError, "ZeroCount"},                {kEfficiencyUndefined, "EfficiencyUndefined"},
        {kEfficiencyIllDefined, "EfficiencyIllDefined"}, {kRunFailed, "RunFailed"},
    };
    std::vector<std::string> out;
    for (const auto &[bit, name] : kNames) {
        if (flags & bit) {
            out.emplace_back(name);
        }
    }
    return out;
}

bool has_degenerate_statistics(unsigned flags) {
    return (flags & (kDegenerateCounts | kZeroCountError | kRunFailed)) != 0;
}

namespace {

struct BatchPlan {
    std::string label;
    MeasurementSetting setting;
};

using Basis = SingleQubitBasis;

std::vector<BatchPlan> plan_batches(const ExperimentConfig &config) {
    const Scheme scheme = config.scheme;
    const MeasurementSetting hv{scheme, Basis::HV, Basis::HV};
    const MeasurementSetting da{scheme, Basis::DA, Basis::DA};
    const MeasurementSetting lr{scheme, Basis::LR, Basis::LR};
    if (config.batch_policy == BatchPolicy::PerBasis) {
        return {{hv.label(), hv}, {da.label(), da}, {lr.label(), lr}};
    }
    // Order matches NamedCounts::items().
    return {{"count:C_HH", hv}, {"count:C_HV", hv}, {"count:C_VH", hv}, {"count:C_VV", hv},
            {"count:C_DD", da}, {"count:C_AA", da}, {"count:C_LR", lr}, {"count:C_RL", lr}};
}

NamedCounts extract_counts(const std::vector<BatchRecord> &batches, BatchPolicy policy) {
    NamedCounts c;
    if (policy == BatchPolicy::PerBasis) {
        const auto &hv = batches[0].record.coincidences;
        const auto &da = batches[1].record.coincidences;
        const auto &lr = batches[2].record.coincidences;
        c.hh = hv[0][0];
        c.hv = hv[0][1];
        c.vh = hv[1][0];
        c.vv = hv[1][1];
        c.dd = da[0][0];
        c.aa = da[1][1];
        c.lr = lr[0][1];
        c.rl = lr[1][0];
        return c;
    }
    c.hh = batches[0].record.coincidences[0][0];
    c.hv = batches[1].record.coincidences[0][1];
    c.vh = batches[2].record.coincidences[1][0];
    c.vv = batches[3].record.coincidences[1][1];
    c.dd = batches[4].record.coincidences[0][0];
    c.aa = batches[5].record.coincidences[1][1];
    c.lr = batches[6].record.coincidences[0][1];
    c.rl = batches[7].record.coincidences[1][0];
    return c;
}

}  // namespace

WitnessResult run_witness_experiment(const ExperimentConfig &config) {
    config.validate();
    WitnessResult result;
    result.config = config;

    for (const BatchPlan &plan : plan_batches(config)) {
        const std::uint64_t stream_index = batch_stream_index(plan.label, config.sweep_index);
        const RngStream stream(config.master_seed, stream_index);
        result.batches.push_back({plan.label, stream_index, run_setting(config, plan.setting, stream)});
    }
    result.counts = extract_counts(result.batches, config.batch_policy);

    const NamedCounts &c = result.counts;
    const std::uint64_t n = config.n;
    result.yield = static_cast<double>(c.standard_total()) / static_cast<double>(n);
    result.w_over_n = witness_normalized_by_n(c, n);

    try {
        result.w_est = estimate_witness(c);
        const WitnessError err = propagate_witness_error(c, n);
        result.delta_w = err.delta_w;
        if (err.zero_mean_fallback) {
            result.flags |= kZeroMeanWitness;
        }
    } catch (const EstimationError &) {
        result.flags |= kDegenerateCounts;
    }

    try {
        const SingletWeightEstimate q = estimate_q(c);
        result.r_est = q.r_est;
        result.q_est = q.q_est;
        try {
            result.delta_q = propagate_q_error(c, n);
        } catch (const EstimationError &) {
            result.flags |= kZeroCountError;
        }
    } catch (const EstimationError &) {
        result.flags |= kDegenerateCounts;
    }

    if (config.scheme == Scheme::Local) {
        // The first batch is the HV/HV record under either policy.
        const CountRecord &hv = result.batches.front().record;
        EfficiencyReport eff;
        eff.true_eff = true_efficiencies(hv);
        eff.channel = channel_efficiencies(hv);
        try {
            eff.measured = measured_efficiencies(eff.true_eff.eps_ab, eff.true_eff.eps_a, eff.true_eff.eps_b);
        } catch (const EstimationError &) {
            result.flags |= kEfficiencyUndefined;
        }
        const TrueEfficiencies &ch = eff.channel;
        if (ch.eps_ab > 1.0 || ch.eps_a > 1.0 || ch.eps_b > 1.0 || ch.eps > 1.0) {
            result.flags |= kEfficiencyIllDefined;
        }
        result.efficiencies = eff;
    }
    return result;
}

namespace {

template <typename Apply>
SweepResult run_sweep(const ExperimentConfig &config, std::span<const double> values, std::string parameter,
                      Apply apply) {
    if (values.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::stable_sort(sorted.begin(), sorted.end());

    SweepResult out;
    out.parameter = std::move(parameter);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        SweepRow row;
        row.value = sorted[i];
        ExperimentConfig point = config;
        point.sweep_index = config.sweep_index + i;
        apply(point, sorted[i]);
        try {
            row.result = run_witness_experiment(point);
        } catch (const std::exception &e) {
            row.result.config = point;
            row.result.flags |= kRunFailed;
            row.error = e.what();
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace

SweepResult sweep_q(const ExperimentConfig &config, std::span<const double> q_values) {
    return run_sweep(config, q_values, "q", [](ExperimentConfig &c, double q) { c.model.q = q; });
}

SweepResult sweep_gamma(const ExperimentConfig &config, std::span<const double> gamma_over_sigma) {
    return run_sweep(config, gamma_over_sigma, "gamma_over_sigma",
                     [](ExperimentConfig &c, double ratio) { c.noise.gamma = ratio * c.noise.sigma; });
}

}  // namespace cwsim
