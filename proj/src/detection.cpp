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

#include "cwsim/detection.hpp"

#include <stdexcept>

namespace cwsim {

std::string MeasurementSetting::label() const {
    std::string out = scheme == Scheme::Joint ? "joint:" : "local:";
    out += basis_name(basis_a);
    out += '/';
    out += basis_name(basis_b);
    return out;
}

SettingRotations SettingRotations::for_setting(const MeasurementSetting &setting) {
    const CMat2 ua = basis_unitary(setting.basis_a);
    const CMat2 ub = basis_unitary(setting.basis_b);
    const CMat2 id = CMat2::identity();
    return {tensor(ua, ub), tensor(ua, id), tensor(id, ub)};
}

JointOutcome measure_joint(const CVec4 &a, const CMat4 &rotation, double gamma) {
    const CVec4 rotated = adjoint_apply(rotation, a);
    const double gamma2 = gamma * gamma;
    int crossings = 0;
    int last = -1;
    for (int i = 0; i < 4; ++i) {
        if (std::norm(rotated[i]) > gamma2) {
            ++crossings;
            last = i;
        }
    }
    if (crossings == 0) {
        return JointOutcome::none();
    }
    if (crossings > 1) {
        return JointOutcome::multiple();
    }
    return JointOutcome::detected(last);
}

JointOutcome measure_joint(const CVec4 &a, const MeasurementSetting &setting, double gamma) {
    if (setting.scheme != Scheme::Joint) {
        throw std::invalid_argument("measure_joint requires a joint setting");
    }
    return measure_joint(a, SettingRotations::for_setting(setting).joint, gamma);
}

LocalEvent measure_local(const CVec4 &a, const SettingRotations &rotations, double gamma) {
    const CVec4 ra = adjoint_apply(rotations.side_a, a);
    const CVec4 rb = adjoint_apply(rotations.side_b, a);
    const double gamma2 = gamma * gamma;
    LocalEvent e;
    // Qubit A is the high index bit: outcome 0 -> {00, 01}, outcome 1 -> {10, 11}.
    e.fire_a0 = std::norm(ra[0]) + std::norm(ra[1]) > gamma2;
    e.fire_a1 = std::norm(ra[2]) + std::norm(ra[3]) > gamma2;
    // Qubit B is the low bit: outcome 0 -> {00, 10}, outcome 1 -> {01, 11}.
    e.fire_b0 = std::norm(rb[0]) + std::norm(rb[2]) > gamma2;
    e.fire_b1 = std::norm(rb[1]) + std::norm(rb[3]) > gamma2;
    return e;
}

LocalEvent measure_local(const CVec4 &a, const MeasurementSetting &setting, double gamma) {
    if (setting.scheme != Scheme::Local) {
        throw std::invalid_argument("measure_local requires a local setting");
    }
    return measure_local(a, SettingRotations::for_setting(setting), gamma);
}

LocalClass classify_local(const LocalEvent &e) {
    LocalClass c;
    c.pattern = e;
    const int na = int(e.fire_a0) + int(e.fire_a1);
    const int nb = int(e.fire_b0) + int(e.fire_b1);
    if (na == 2 || nb == 2) {
        c.kind = LocalClass::Kind::DoubleInvolved;
        return c;
    }
    const int oa = e.fire_a0 ? 0 : 1;
    const int ob = e.fire_b0 ? 0 : 1;
    if (na == 1 && nb == 1) {
        c.kind = LocalClass::Kind::Coincidence;
        c.outcome_a = oa;
        c.outcome_b = ob;
    } else if (na == 1) {
        c.kind = LocalClass::Kind::SingleA;
        c.outcome_a = oa;
    } else if (nb == 1) {
        c.kind = LocalClass::Kind::SingleB;
        c.outcome_b = ob;
    } else {
        c.kind = LocalClass::Kind::NoDetection;
    }
    return c;
}

}  // namespace cwsim
