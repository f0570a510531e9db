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
#include <stdexcept>
#include <string_view>
#include <utility>

namespace cwsim {

/// The eight coincidence tallies entering the witness and singlet-weight
/// estimators. Letters name the (qubit A, qubit B) outcomes.
struct NamedCounts {
    std::uint64_t hh = 0;
    std::uint64_t hv = 0;
    std::uint64_t vh = 0;
    std::uint64_t vv = 0;
    std::uint64_t dd = 0;
    std::uint64_t aa = 0;
    std::uint64_t lr = 0;
    std::uint64_t rl = 0;

    /// C_HH + C_HV + C_VH + C_VV.
    std::uint64_t standard_total() const { return hh + hv + vh + vv; }

    /// C_HH + C_VV + C_DD + C_AA - C_LR - C_RL.
    std::int64_t witness_numerator() const {
        return static_cast<std::int64_t>(hh + vv + dd + aa) - static_cast<std::int64_t>(lr + rl);
    }

    std::array<std::pair<std::string_view, std::uint64_t>, 8> items() const {
        return {{{"C_HH", hh}, {"C_HV", hv}, {"C_VH", vh}, {"C_VV", vv},
                 {"C_DD", dd}, {"C_AA", aa}, {"C_LR", lr}, {"C_RL", rl}}};
    }

    bool operator==(const NamedCounts &) const = default;
};

/// Raised by estimators whose inputs leave a quantity undefined.
class EstimationError : public std::domain_error {
public:
    enum class Kind { ZeroDenominator, ZeroSingleEfficiency, ZeroMean, ZeroCount };

    EstimationError(Kind kind, const char *what) : std::domain_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace cwsim
