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

#include <cstdint>
#include <string>

#include "cwsim/complex_linalg.hpp"

namespace cwsim {

enum class Scheme {
    Joint,  ///< rotate the full two-qubit vector, require one exclusive component crossing
    Local,  ///< rotate each side separately, threshold the per-outcome projection norms
};

struct MeasurementSetting {
    Scheme scheme = Scheme::Local;
    SingleQubitBasis basis_a = SingleQubitBasis::HV;
    SingleQubitBasis basis_b = SingleQubitBasis::HV;

    /// e.g. "local:HV/HV". Used as part of the RNG stream key.
    std::string label() const;

    bool operator==(const MeasurementSetting &) const = default;
};

/// Rotations applied before thresholding. For a setting with per-qubit
/// unitaries U_A, U_B: joint = U_A (x) U_B, side_a = U_A (x) I, side_b = I (x) U_B.
/// The detectors apply the adjoint of each.
struct SettingRotations {
    CMat4 joint;
    CMat4 side_a;
    CMat4 side_b;

    static SettingRotations for_setting(const MeasurementSetting &setting);
};

struct JointOutcome {
    enum class Kind : std::uint8_t { Detected, NoDetection, MultipleDetection };

    Kind kind = Kind::NoDetection;
    /// Component index 2*a + b; meaningful only when kind == Detected.
    int index = -1;

    static JointOutcome detected(int i) { return {Kind::Detected, i}; }
    static JointOutcome none() { return {Kind::NoDetection, -1}; }
    static JointOutcome multiple() { return {Kind::MultipleDetection, -1}; }

    bool operator==(const JointOutcome &) const = default;
};

/// Channel detector flags on both sides for one realization.
struct LocalEvent {
    bool fire_a0 = false;
    bool fire_a1 = false;
    bool fire_b0 = false;
    bool fire_b1 = false;

    bool fire_a(int k) const { return k == 0 ? fire_a0 : fire_a1; }
    bool fire_b(int k) const { return k == 0 ? fire_b0 : fire_b1; }

    bool operator==(const LocalEvent &) const = default;
};

struct LocalClass {
    enum class Kind : std::uint8_t { Coincidence, SingleA, SingleB, NoDetection, DoubleInvolved };

    Kind kind = Kind::NoDetection;
    int outcome_a = -1;  ///< set for Coincidence and SingleA
    int outcome_b = -1;  ///< set for Coincidence and SingleB
    LocalEvent pattern;

    bool operator==(const LocalClass &) const = default;
};

/// Returns Detected(i) iff |a'_i| > gamma and every other |a'_j| <= gamma,
/// where a' = rotation^dagger a.
JointOutcome measure_joint(const CVec4 &a, const CMat4 &rotation, double gamma);

/// Convenience form building the rotation from the setting. Throws
/// std::invalid_argument for a Local setting.
JointOutcome measure_joint(const CVec4 &a, const MeasurementSetting &setting, double gamma);

/// Both sides see the same realization a. fire_a[k] is
/// |P_A(k) (U_A (x) I)^dagger a| > gamma and fire_b[k] is
/// |P_B(k) (I (x) U_B)^dagger a| > gamma.
LocalEvent measure_local(const CVec4 &a, const SettingRotations &rotations, double gamma);

/// Convenience form. Throws std::invalid_argument for a Joint setting.
LocalEvent measure_local(const CVec4 &a, const MeasurementSetting &setting, double gamma);

/// Coincidence needs exactly one flag per side; a side with both flags set
/// makes the event DoubleInvolved regardless of the other side.
LocalClass classify_local(const LocalEvent &e);

}  // namespace cwsim
