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

#include "cwsim/report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>

namespace cwsim {

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

nlohmann::json optional_number(const std::optional<double> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string optional_cell(const std::optional<double> &v) { return v ? format_double(*v) : std::string(); }

nlohmann::json efficiencies_to_json(const TrueEfficiencies &t) {
    return {{"eps_AB", t.eps_ab}, {"eps_A", t.eps_a}, {"eps_B", t.eps_b}, {"eps", t.eps}};
}

nlohmann::json record_to_json(const BatchRecord &batch) {
    const CountRecord &r = batch.record;
    const MeasurementSetting &s = r.setting;
    nlohmann::json coinc = nlohmann::json::object();
    nlohmann::json pairs = nlohmann::json::object();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const std::string key =
                std::string(outcome_label(s.basis_a, i)) + std::string(outcome_label(s.basis_b, j));
            coinc[key] = r.coincidences[i][j];
            pairs[key] = r.channel_pairs[i][j];
        }
    }
    const auto side = [](const std::array<std::uint64_t, 2> &v, SingleQubitBasis b) {
        return nlohmann::json{{std::string(outcome_label(b, 0)), v[0]}, {std::string(outcome_label(b, 1)), v[1]}};
    };
    nlohmann::json j = {
        {"label", batch.label},
        {"stream_index", batch.stream_index},
        {"setting", s.label()},
        {"n", r.n},
        {"coincidences", coinc},
        {"singles_a", side(r.singles_a, s.basis_a)},
        {"singles_b", side(r.singles_b, s.basis_b)},
        {"no_detections", r.no_detections},
        {"doubles", r.doubles},
    };
    if (s.scheme == Scheme::Local) {
        j["channel"] = {
            {"fires_a", side(r.fires_a, s.basis_a)},
            {"fires_b", side(r.fires_b, s.basis_b)},
            {"pairs", pairs},
            {"singles_a", side(r.channel_singles_a, s.basis_a)},
            {"singles_b", side(r.channel_singles_b, s.basis_b)},
        };
    }
    return j;
}

}  // namespace

nlohmann::json config_to_json(const ExperimentConfig &c) {
    return {
        {"q", c.model.q},
        {"model", std::string(model_name(c.model.variant))},
        {"scheme", std::string(scheme_name(c.scheme))},
        {"sigma", c.noise.sigma},
        {"s", c.noise.s},
        {"gamma", c.noise.gamma},
        {"n", c.n},
        {"seed", c.master_seed},
        {"batch_policy", std::string(batch_policy_name(c.batch_policy))},
        {"sweep_index", c.sweep_index},
    };
}

nlohmann::json result_to_json(const WitnessResult &result) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[name, value] : result.counts.items()) {
        counts[std::string(name)] = value;
    }
    nlohmann::json j = {
        {"version", std::string(kVersion)},
        {"config", config_to_json(result.config)},
        {"counts", counts},
        {"estimates",
         {
             {"W_est", optional_number(result.w_est)},
             {"delta_W", optional_number(result.delta_w)},
             {"R_est", optional_number(result.r_est)},
             {"q_est", optional_number(result.q_est)},
             {"delta_q", optional_number(result.delta_q)},
             {"W_over_N", result.w_over_n},
             {"yield", result.yield},
         }},
        {"flags", flag_names(result.flags)},
    };
    if (result.efficiencies) {
        const EfficiencyReport &e = *result.efficiencies;
        nlohmann::json eff = efficiencies_to_json(e.true_eff);
        if (e.measured) {
            eff["eta_A"] = e.measured->eta_a;
            eff["eta_B"] = e.measured->eta_b;
            eff["eta"] = e.measured->eta;
        } else {
            eff["eta_A"] = nullptr;
            eff["eta_B"] = nullptr;
            eff["eta"] = nullptr;
        }
        eff["channel"] = efficiencies_to_json(e.channel);
        j["efficiencies"] = eff;
    } else {
        j["efficiencies"] = nullptr;
    }
    nlohmann::json batches = nlohmann::json::array();
    for (const BatchRecord &b : result.batches) {
        batches.push_back(record_to_json(b));
    }
    j["batches"] = batches;
    return j;
}

std::string sweep_csv_row(double param, const WitnessResult &r) {
    std::ostringstream row;
    row << format_double(param) << ',' << optional_cell(r.w_est) << ',' << optional_cell(r.delta_w) << ','
        << optional_cell(r.r_est) << ',' << optional_cell(r.q_est) << ',' << optional_cell(r.delta_q);
    for (const auto &[name, value] : r.counts.items()) {
        row << ',' << value;
    }
    row << ',' << format_double(r.yield) << ',';
    const std::vector<std::string> flags = flag_names(r.flags);
    for (std::size_t i = 0; i < flags.size(); ++i) {
        row << (i ? ";" : "") << flags[i];
    }
    return row.str();
}

std::string sweep_csv(const SweepResult &sweep) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const SweepRow &row : sweep.rows) {
        out += sweep_csv_row(row.value, row.result);
        out += '\n';
    }
    return out;
}

std::string efficiency_csv(const SweepResult &sweep) {
    std::ostringstream out;
    out << kEfficiencyCsvHeader << '\n';
    for (const SweepRow &row : sweep.rows) {
        const WitnessResult &r = row.result;
        out << format_double(row.value);
        if (!r.efficiencies || r.batches.empty()) {
            out << ",,,,,,,,1,,,,,,,,,,\n";
            continue;
        }
        const EfficiencyReport &e = *r.efficiencies;
        const CountRecord &hv = r.batches.front().record;
        const bool ill = (r.flags & (kEfficiencyIllDefined | kEfficiencyUndefined)) != 0;
        out << ',' << format_double(e.true_eff.eps_ab) << ',' << format_double(e.true_eff.eps_a) << ','
            << format_double(e.true_eff.eps_b) << ',' << format_double(e.true_eff.eps) << ',';
        if (e.measured) {
            out << format_double(e.measured->eta_a) << ',' << format_double(e.measured->eta_b) << ','
                << format_double(e.measured->eta);
        } else {
            out << ",,";
        }
        out << ',' << (ill ? 1 : 0) << ',' << format_double(e.channel.eps_ab) << ','
            << format_double(e.channel.eps_a) << ',' << format_double(e.channel.eps_b) << ','
            << format_double(e.channel.eps) << ',' << hv.singles_a[0] << ',' << hv.singles_a[1] << ','
            << hv.singles_b[0] << ',' << hv.singles_b[1] << ',' << hv.no_detections << ',' << hv.doubles << '\n';
    }
    return out.str();
}

nlohmann::json make_manifest(std::string_view command, const RunConfig &config,
                             const std::vector<const WitnessResult *> &results, std::string_view timestamp,
                             double duration_seconds) {
    nlohmann::json streams = nlohmann::json::array();
    for (const WitnessResult *r : results) {
        for (const BatchRecord &b : r->batches) {
            streams.push_back({{"sweep_index", r->config.sweep_index},
                               {"label", b.label},
                               {"stream_index", b.stream_index},
                               {"n", b.record.n}});
        }
    }
    return {
        {"artifact", "cwsim"},
        {"version", std::string(kVersion)},
        {"command", std::string(command)},
        {"config_text", config.to_key_value()},
        {"master_seed", config.seed},
        {"rng",
         {{"engine", "mt19937_64"},
          {"chunk_seed", "mix64(mix64(mix64(seed) ^ stream_index) + mix64(chunk ^ 0x5DEECE66D))"},
          {"stream_index", "stable_hash(label, sweep_index)"},
          {"chunk_size", kChunkSize}}},
        {"streams", streams},
        {"timestamp", std::string(timestamp)},
        {"duration_seconds", duration_seconds},
    };
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace cwsim
