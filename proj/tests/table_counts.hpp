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

#include "cwsim/counts.hpp"

namespace cwsim::testing {

struct TableColumn {
    double q;
    NamedCounts counts;
    double w_est;
    double q_est;
};

// Reference local-scheme counts at N = 2^20, gamma = sigma, discrete model.
inline const std::array<TableColumn, 7> &table_columns() {
    static const std::array<TableColumn, 7> cols = {{
        {0.0, {31180, 31287, 31153, 31360, 29688, 29735, 29553, 29525}, 0.2516, -0.0008},
        {0.2, {25796, 35788, 35668, 25931, 24406, 24479, 34590, 34651}, 0.1273, 0.1602},
        {1.0 / 3.0, {22353, 38688, 39088, 22327, 21148, 21291, 37902, 37883}, 0.0463, 0.2703},
        {0.4, {20297, 40113, 39938, 20566, 19400, 19451, 39275, 39192}, 0.0052, 0.3241},
        {0.6, {14863, 45075, 45194, 15178, 14577, 14448, 44099, 44248}, -0.1217, 0.5006},
        {0.8, {9660, 49742, 49572, 9739, 9416, 9201, 48880, 49138}, -0.2527, 0.6732},
        {1.0, {4194, 54250, 53914, 4212, 4257, 4164, 53887, 53797}, -0.3897, 0.8558},
    }};
    return cols;
}

}  // namespace cwsim::testing
