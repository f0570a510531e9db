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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string_view>

namespace cwsim {

using cplx = std::complex<double>;

/// Complex column vector of fixed dimension.
///
/// For two qubits the component order is (00, 01, 10, 11), i.e. (HH, HV, VH, VV):
/// the first bit is qubit A and the second bit is qubit B.
template <std::size_t D>
using CVec = std::array<cplx, D>;

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;

/// Row-major complex square matrix of fixed dimension.
template <std::size_t D>
struct CMat {
    std::array<cplx, D * D> e{};

    constexpr cplx &operator()(std::size_t r, std::size_t c) { return e[r * D + c]; }
    constexpr const cplx &operator()(std::size_t r, std::size_t c) const { return e[r * D + c]; }

    static constexpr CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < D; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    bool operator==(const CMat &) const = default;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t D>
CMat<D> operator*(const CMat<D> &a, const CMat<D> &b) {
    CMat<D> out;
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t k = 0; k < D; ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < D; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <std::size_t D>
CMat<D> operator+(const CMat<D> &a, const CMat<D> &b) {
    CMat<D> out;
    for (std::size_t i = 0; i < D * D; ++i) {
        out.e[i] = a.e[i] + b.e[i];
    }
    return out;
}

template <std::size_t D>
CVec<D> operator*(const CMat<D> &m, const CVec<D> &x) {
    CVec<D> out{};
    for (std::size_t i = 0; i < D; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < D; ++j) {
            acc += m(i, j) * x[j];
        }
        out[i] = acc;
    }
    return out;
}

template <std::size_t D>
CMat<D> adjoint(const CMat<D> &m) {
    CMat<D> out;
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t j = 0; j < D; ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

/// Largest entrywise modulus of a - b.
template <std::size_t D>
double max_abs_diff(const CMat<D> &a, const CMat<D> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < D * D; ++i) {
        worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    }
    return worst;
}

template <std::size_t D>
double norm_squared(const CVec<D> &x) {
    double acc = 0.0;
    for (const cplx &c : x) {
        acc += std::norm(c);
    }
    return acc;
}

template <std::size_t D>
double norm(const CVec<D> &x) {
    return std::sqrt(norm_squared(x));
}

/// Outer product x y^dagger.
template <std::size_t D>
CMat<D> outer(const CVec<D> &x, const CVec<D> &y) {
    CMat<D> out;
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t j = 0; j < D; ++j) {
            out(i, j) = x[i] * std::conj(y[j]);
        }
    }
    return out;
}

template <std::size_t D>
cplx trace(const CMat<D> &m) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < D; ++i) {
        acc += m(i, i);
    }
    return acc;
}

inline constexpr double kUnitaryTolerance = 1e-12;

template <std::size_t D>
bool is_unitary(const CMat<D> &u, double tol = kUnitaryTolerance) {
    return max_abs_diff(adjoint(u) * u, CMat<D>::identity()) <= tol;
}

template <std::size_t D>
bool is_projector(const CMat<D> &p, double tol = kUnitaryTolerance) {
    return max_abs_diff(p * p, p) <= tol && max_abs_diff(adjoint(p), p) <= tol;
}

/// Kronecker product: (u (x) v)[2i+k, 2j+l] = u[i,j] * v[k,l].
CMat4 tensor(const CMat2 &u, const CMat2 &v);

/// Returns m^dagger a without forming the adjoint.
CVec4 adjoint_apply(const CMat4 &m, const CVec4 &a);

/// Projector onto qubit A (first index bit) taking the given outcome.
CMat4 projector_qubit_a(int outcome);

/// Projector onto qubit B (second index bit) taking the given outcome.
CMat4 projector_qubit_b(int outcome);

/// Polarization measurement bases for a single qubit.
enum class SingleQubitBasis {
    HV,  ///< horizontal / vertical (standard)
    DA,  ///< diagonal / antidiagonal
    LR,  ///< left / right circular
};

/// Unitary whose columns are the basis kets: identity, Hadamard, or
/// [[1, 1], [i, -i]] / sqrt(2) so that column 0 is |L> and column 1 is |R>.
CMat2 basis_unitary(SingleQubitBasis basis);

/// Letter for outcome 0 or 1 in this basis ("H"/"V", "D"/"A", "L"/"R").
std::string_view outcome_label(SingleQubitBasis basis, int outcome);

std::string_view basis_name(SingleQubitBasis basis);

}  // namespace cwsim
