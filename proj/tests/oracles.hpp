// Copyright 2026 The rootsim Authors
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

// Independent reference computations used only by the test suite.

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "rootsim/linalg.hpp"

namespace rootsim::oracle {

/// Spectral norm from a full SVD.
inline double svd_norm(const CMat& a) {
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(0);
}

/// exp(a) by scaling and squaring of a truncated Taylor series.
inline CMat taylor_expm(const CMat& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
    const CMat b = a / std::ldexp(1.0, squarings);
    CMat term = CMat::Identity(a.rows(), a.cols());
    CMat sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * b / static_cast<double>(k)).eval();
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
    return sum;
}

/// Kronecker product of single-site Pauli matrices, leftmost factor first.
inline CMat pauli_kron(const std::string& ops) {
    CMat out = CMat::Identity(1, 1);
    for (char c : ops) {
        CMat p(2, 2);
        switch (c) {
            case 'I': p << 1, 0, 0, 1; break;
            case 'X': p << 0, 1, 1, 0; break;
            case 'Y': p << 0, -kI, kI, 0; break;
            case 'Z': p << 1, 0, 0, -1; break;
            default: throw std::invalid_argument("bad Pauli");
        }
        CMat next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index s = 0; s < out.cols(); ++s) next.block(2 * r, 2 * s, 2, 2) = out(r, s) * p;
        out = next;
    }
    return out;
}

/// Spin-j operators in the |j, m> basis ordered m = j, j-1, ..., -j, built from
/// J_+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>.
struct SpinOps {
    CMat jz, jplus, jminus;
};

inline SpinOps spin_ops(double j) {
    const int d = static_cast<int>(std::lround(2 * j)) + 1;
    SpinOps s{CMat::Zero(d, d), CMat::Zero(d, d), CMat::Zero(d, d)};
    for (int k = 0; k < d; ++k) {
        const double m = j - k;
        s.jz(k, k) = m;
        if (k > 0) s.jplus(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    s.jminus = s.jplus.adjoint();
    return s;
}

/// Haar-ish random skew-Hermitian traceless matrix.
template <class Rng>
CMat random_skew(int n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = cplx(g(rng), g(rng));
    CMat s = 0.5 * (m - m.adjoint());
    s -= (s.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
    return s;
}

}  // namespace rootsim::oracle
