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

#include "cwsim/werner.hpp"

#include <cmath>

namespace cwsim {

namespace {

CVec4 product_ket(SingleQubitBasis basis_a, int outcome_a, SingleQubitBasis basis_b, int outcome_b) {
    const CMat2 ua = basis_unitary(basis_a);
    const CMat2 ub = basis_unitary(basis_b);
    CVec4 ket{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            ket[2 * i + k] = ua(i, outcome_a) * ub(k, outcome_b);
        }
    }
    return ket;
}

CMat4 product_projector(SingleQubitBasis basis_a, int outcome_a, SingleQubitBasis basis_b, int outcome_b) {
    const CVec4 ket = product_ket(basis_a, outcome_a, basis_b, outcome_b);
    return outer(ket, ket);
}

// (|HV> - |VH>)/sqrt(2), assembled from kets rather than the sampler's constant.
CVec4 singlet_ket() {
    const CVec4 hv = product_ket(SingleQubitBasis::HV, 0, SingleQubitBasis::HV, 1);
    const CVec4 vh = product_ket(SingleQubitBasis::HV, 1, SingleQubitBasis::HV, 0);
    CVec4 s;
    for (std::size_t i = 0; i < 4; ++i) {
        s[i] = (hv[i] - vh[i]) / std::sqrt(2.0);
    }
    return s;
}

}  // namespace

CMat4 werner_density(double q) {
    const CVec4 s = singlet_ket();
    CMat4 rho = outer(s, s);
    for (cplx &x : rho.e) {
        x *= q;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        rho(i, i) += (1.0 - q) / 4.0;
    }
    return rho;
}

CMat4 witness_operator() {
    using B = SingleQubitBasis;
    CMat4 w = product_projector(B::HV, 0, B::HV, 0) + product_projector(B::HV, 1, B::HV, 1) +
              product_projector(B::DA, 0, B::DA, 0) + product_projector(B::DA, 1, B::DA, 1);
    const CMat4 neg = product_projector(B::LR, 0, B::LR, 1) + product_projector(B::LR, 1, B::LR, 0);
    for (std::size_t i = 0; i < 16; ++i) {
        w.e[i] = 0.5 * (w.e[i] - neg.e[i]);
    }
    return w;
}

double witness_expectation(const CMat4 &rho) { return trace(witness_operator() * rho).real(); }

double werner_witness(double q) { return (1.0 - 3.0 * q) / 4.0; }

double werner_parallel_weight(double q) { return (1.0 - q) / 4.0; }

double werner_crossed_weight(double q) { return (1.0 + q) / 4.0; }

}  // namespace cwsim
