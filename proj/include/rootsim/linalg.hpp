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

// Dense complex matrix kernel. All generators handled by the library are
// skew-Hermitian and all propagators unitary, so the exponential and the
// logarithm go through spectral decompositions instead of Pade/Krylov schemes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "rootsim/error.hpp"

namespace rootsim {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

/// Module-level tolerances. Defaults match the documented contracts.
struct Tolerances {
    double skew = 1e-12;          // relative skew-Hermiticity of expm_skew input
    double unitarity = 1e-12;     // ||U U^dagger - I|| of produced propagators
    double unitary_input = 1e-10; // ||U U^dagger - I|| accepted by logm_unitary
    double log_roundtrip = 1e-10;
    double branch_gap = 1e-8;     // minimal angular distance to the log branch cut
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

/// Largest singular value.
///
/// Computed from the extreme eigenvalue of the smaller Gram matrix, which
/// is accurate to working precision relative to the norm itself.
inline double op_norm(const CMat& a) {
    if (a.rows() == 0 || a.cols() == 0) throw Error("empty matrix");
    if (a.rows() == 1 || a.cols() == 1) return a.norm();
    const CMat gram = a.rows() >= a.cols() ? CMat(a.adjoint() * a) : CMat(a * a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed in op_norm");
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

inline double skew_defect(const CMat& a) {
    return op_norm(CMat(a + a.adjoint()));
}

inline bool is_square(const CMat& a) { return a.rows() == a.cols() && a.rows() > 0; }

inline CMat commutator(const CMat& a, const CMat& b) {
    if (!is_square(a) || a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("commutator: dimension mismatch");
    return a * b - b * a;
}

inline double unitarity_defect(const CMat& u) {
    const CMat d = u * u.adjoint() - CMat::Identity(u.rows(), u.cols());
    return op_norm(d);
}

/// e^a for skew-Hermitian a, via the Hermitian eigendecomposition of i*a.
inline CMat expm_skew(const CMat& a, const Tolerances& tol = default_tolerances()) {
    if (!is_square(a)) throw Error("expm_skew: matrix must be square and non-empty");
    if (!a.allFinite()) throw Error("expm_skew: non-finite entries");
    const double scale = op_norm(a);
    if (scale == 0.0) return CMat::Identity(a.rows(), a.cols());
    if (skew_defect(a) > tol.skew * scale) throw Error("generator not skew-Hermitian");

    // i*a is Hermitian; symmetrize so the solver sees exactly Hermitian data.
    CMat h = kI * a;
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed in expm_skew");
    const CMat& v = es.eigenvectors();
    CVec phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::exp(-kI * es.eigenvalues()(k));
    return v * phases.asDiagonal() * v.adjoint();
}

/// Principal logarithm of a unitary matrix.
///
/// Eigenphases are mapped into (branch_cut - 2*pi, branch_cut]; the default cut
/// at pi gives the principal branch. The Schur form of a normal matrix is
/// diagonal up to roundoff, so only its diagonal is used.
inline CMat logm_unitary(const CMat& u, double branch_cut = std::numbers::pi,
                         const Tolerances& tol = default_tolerances()) {
    if (!is_square(u)) throw Error("logm_unitary: matrix must be square and non-empty");
    if (!u.allFinite()) throw Error("logm_unitary: non-finite entries");
    if (unitarity_defect(u) > tol.unitary_input) throw Error("logm_unitary: matrix not unitary");

    Eigen::ComplexSchur<CMat> schur(u);
    if (schur.info() != Eigen::Success) throw Error("Schur decomposition failed in logm_unitary");
    const CMat& q = schur.matrixU();
    const CMat& t = schur.matrixT();
    CVec logs(u.rows());
    for (Eigen::Index k = 0; k < u.rows(); ++k) {
        // Rotate so the cut sits at angle pi, take the principal argument, rotate back.
        const double rel = std::arg(t(k, k) * std::exp(kI * (std::numbers::pi - branch_cut)));
        if (std::numbers::pi - std::abs(rel) < tol.branch_gap) throw Error("logarithm branch ambiguous");
        logs(k) = kI * (rel + branch_cut - std::numbers::pi);
    }
    CMat z = q * logs.asDiagonal() * q.adjoint();
    return 0.5 * (z - z.adjoint());
}

inline cplx trace(const CMat& a) { return a.trace(); }

/// Frobenius norm sqrt(Tr(A^dagger A)).
inline double frobenius(const CMat& a) { return a.norm(); }

}  // namespace rootsim
