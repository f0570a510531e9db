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

#include "cwsim/complex_linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace cwsim {

CMat4 tensor(const CMat2 &u, const CMat2 &v) {
    CMat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = u(i, j) * v(k, l);
                }
            }
        }
    }
    return out;
}

CVec4 adjoint_apply(const CMat4 &m, const CVec4 &a) {
    CVec4 out{};
    for (std::size_t j = 0; j < 4; ++j) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            acc += std::conj(m(i, j)) * a[i];
        }
        out[j] = acc;
    }
    return out;
}

static void check_outcome(int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("qubit outcome must be 0 or 1");
    }
}

CMat4 projector_qubit_a(int outcome) {
    check_outcome(outcome);
    CMat4 p;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        if (static_cast<int>(idx >> 1) == outcome) {
            p(idx, idx) = 1.0;
        }
    }
    return p;
}

CMat4 projector_qubit_b(int outcome) {
    check_outcome(outcome);
    CMat4 p;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        if (static_cast<int>(idx & 1) == outcome) {
            p(idx, idx) = 1.0;
        }
    }
    return p;
}

CMat2 basis_unitary(SingleQubitBasis basis) {
    const double r = 1.0 / std::sqrt(2.0);
    CMat2 u;
    switch (basis) {
        case SingleQubitBasis::HV:
            return CMat2::identity();
        case SingleQubitBasis::DA:
            u(0, 0) = r;
            u(0, 1) = r;
            u(1, 0) = r;
            u(1, 1) = -r;
            return u;
        case SingleQubitBasis::LR:
            u(0, 0) = r;
            u(0, 1) = r;
            u(1, 0) = cplx(0.0, r);
            u(1, 1) = cplx(0.0, -r);
            return u;
    }
    throw std::invalid_argument("unknown basis");
}

std::string_view outcome_label(SingleQubitBasis basis, int outcome) {
    check_outcome(outcome);
    switch (basis) {
        case SingleQubitBasis::HV:
            return outcome == 0 ? "H" : "V";
        case SingleQubitBasis::DA:
            return outcome == 0 ? "D" : "A";
        case SingleQubitBasis::LR:
            return outcome == 0 ? "L" : "R";
    }
    throw std::invalid_argument("unknown basis");
}

std::string_view basis_name(SingleQubitBasis basis) {
    switch (basis) {
        case SingleQubitBasis::HV:
            return "HV";
        case SingleQubitBasis::DA:
            return "DA";
        case SingleQubitBasis::LR:
            return "LR";
    }
    throw std::invalid_argument("unknown basis");
}

}  // namespace cwsim
