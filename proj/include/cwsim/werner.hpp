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

#include "cwsim/complex_linalg.hpp"

namespace cwsim {

/// Closed-form quantum reference values for two-qubit Werner states. Used as
/// oracles for the Monte Carlo estimators; nothing in the simulation path calls
/// into this module.

/// rho_q = q |s><s| + (1 - q) I / 4.
CMat4 werner_density(double q);

/// Witness operator (1/2)[HH + VV + DD + AA - LR - RL] built from product kets.
CMat4 witness_operator();

/// Tr[W rho], evaluated numerically from the matrices above.
double witness_expectation(const CMat4 &rho);

/// (1 - 3q)/4, the closed form of Tr[W rho_q].
double werner_witness(double q);

/// <HH|rho_q|HH> = <VV|rho_q|VV> = (1 - q)/4.
double werner_parallel_weight(double q);

/// <HV|rho_q|HV> = <VH|rho_q|VH> = (1 + q)/4.
double werner_crossed_weight(double q);

}  // namespace cwsim
