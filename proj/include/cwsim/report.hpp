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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cwsim/config.hpp"
#include "cwsim/protocol.hpp"

namespace cwsim {

inline constexpr std::string_view kVersion = CWSIM_VERSION;

/// Header of the sweep table, one row per grid point.
inline constexpr std::string_view kSweepCsvHeader =
    "param,W_est,delta_W,R_est,q_est,delta_q,C_HH,C_HV,C_VH,C_VV,C_DD,C_AA,C_LR,C_RL,yield,flags";

/// Header of the efficiency table. The trailing columns carry the raw
/// channel-convention efficiencies and single/none/double tallies of the
/// HV/HV batch.
inline constexpr std::string_view kEfficiencyCsvHeader =
    "gamma_over_sigma,eps_AB,eps_A,eps_B,eps,eta_A,eta_B,eta,ill_defined,"
    "eps_AB_channel,eps_A_channel,eps_B_channel,eps_channel,C_HN,C_VN,C_NH,C_NV,C_NN,doubles";

/// 17 significant digits, '.' decimal point, independent of the C locale.
std::string format_double(double v);

nlohmann::json config_to_json(const ExperimentConfig &config);

/// Full record of one run: config echo, named counts, estimates (null when
/// undefined), efficiencies, per-batch tallies with stream indices, flags.
nlohmann::json result_to_json(const WitnessResult &result);

/// One CSV row in the sweep schema (no trailing newline).
std::string sweep_csv_row(double param, const WitnessResult &result);

/// Header plus one row per sweep point, '\n' line endings.
std::string sweep_csv(const SweepResult &sweep);

std::string efficiency_csv(const SweepResult &sweep);

/// Everything needed to regenerate an output: the exact config text, the
/// stream keys of every batch, and the RNG layout. Timestamp and wall-clock
/// duration live only here so result payloads stay byte-stable.
nlohmann::json make_manifest(std::string_view command, const RunConfig &config,
                             const std::vector<const WitnessResult *> &results, std::string_view timestamp,
                             double duration_seconds);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace cwsim
