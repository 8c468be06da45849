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

// Cartan data for su(2), su(N) and su(2^n) realized as traceless
// skew-Hermitian matrices, with the diagonal matrices as maximal torus.
// Root vectors are the matrix units E_zw (a single unit entry); the Cartan
// basis is the diagonal generalized Gell-Mann family, Tr(H_k H_l) = 2 delta_kl,
// so that for su(2) it is exactly H = diag(1, -1).

#include <cmath>
#include <compare>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rootsim/linalg.hpp"

namespace rootsim {

enum class Family { SU2, SUN, SU2N };

inline constexpr int kMaxQubits = 10;
inline constexpr int kRootEnumerationCap = 64;

struct AlgebraId {
    Family family = Family::SU2;
    int param = 2;  // N for SUN, qubit count for SU2N, 2 for SU2

    static AlgebraId su2() { return {Family::SU2, 2}; }
    static AlgebraId sun(int n) {
        if (n < 2) throw InputError("su(N) requires N >= 2");
        return {Family::SUN, n};
    }
    static AlgebraId su2n(int qubits) {
        if (qubits < 1) throw InputError("su(2^n) requires n >= 1");
        if (qubits > kMaxQubits)
            throw SizeCapError("su(2^n) with n = " + std::to_string(qubits) + " exceeds the dense cap of " +
                               std::to_string(kMaxQubits) + " qubits; use the grouped profile");
        return {Family::SU2N, qubits};
    }

    int dim() const {
        switch (family) {
            case Family::SU2: return 2;
            case Family::SUN: return param;
            case Family::SU2N: return 1 << param;
        }
        return 0;
    }

    std::string name() const {
        switch (family) {
            case Family::SU2: return "su2";
            case Family::SUN: return "su(" + std::to_string(param) + ")";
            case Family::SU2N: return "su(2^" + std::to_string(param) + ")";
        }
        return "?";
    }

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Root labels are ordered index pairs (z, w) with z != w, naming E_zw.
/// For su(2) the pair (0, 1) is +alpha and (1, 0) is -alpha.
struct RootLabel {
    int z = 0;
    int w = 1;

    RootLabel negated() const { return {w, z}; }
    bool positive() const { return z < w; }

    std::string str(const AlgebraId& algebra) const {
        if (algebra.family == Family::SU2) return positive() ? "+alpha" : "-alpha";
        return "(" + std::to_string(z) + "," + std::to_string(w) + ")";
    }

    friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

inline CMat matrix_unit(int dim, const RootLabel& label) {
    CMat e = CMat::Zero(dim, dim);
    e(label.z, label.w) = 1.0;
    return e;
}

/// Diagonals of the Hermitian Cartan basis H_1..H_{N-1} (the torus is spanned by i*H_k).
inline std::vector<RVec> cartan_basis(int dim) {
    std::vector<RVec> basis;
    basis.reserve(static_cast<std::size_t>(dim - 1));
    for (int k = 1; k < dim; ++k) {
        RVec h = RVec::Zero(dim);
        const double norm = std::sqrt(2.0 / (static_cast<double>(k) * (k + 1)));
        for (int i = 0; i < k; ++i) h(i) = norm;
        h(k) = -k * norm;
        basis.push_back(std::move(h));
    }
    return basis;
}

struct RootDatum {
    RootLabel label;
    int dim = 2;
    /// alpha(i H_k) / i on the Cartan basis.
    std::vector<double> functional;

    /// E_alpha in the defining model; built on demand to keep enumeration light.
    CMat root_vector() const { return matrix_unit(dim, label); }
};

/// Value of the root alpha_zw on a diagonal toral element: X0_zz - X0_ww
/// (purely imaginary for elements of the compact form).
inline cplx root_value(const RootLabel& label, const CMat& x0) {
    return x0(label.z, label.z) - x0(label.w, label.w);
}

/// Evaluate a root through its stored functional on the coordinates of x0
/// in the Cartan basis; agrees with root_value for toral x0.
inline cplx evaluate_functional(const RootDatum& root, const CMat& x0) {
    const auto basis = cartan_basis(root.dim);
    double acc = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        // x0 = sum_k c_k i H_k with c_k = Tr(H_k (-i x0)) / 2
        double ck = 0.0;
        for (int i = 0; i < root.dim; ++i) ck += basis[k](i) * (-kI * x0(i, i)).real();
        acc += root.functional[k] * ck / 2.0;
    }
    return kI * acc;
}

inline std::vector<RootDatum> enumerate_roots(const AlgebraId& algebra) {
    const int n = algebra.dim();
    if (n > kRootEnumerationCap) throw SizeCapError("root enumeration too large; use grouped profile");
    const auto basis = cartan_basis(n);
    std::vector<RootDatum> roots;
    roots.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
            if (z == w) continue;
            RootDatum d{{z, w}, n, {}};
            d.functional.reserve(basis.size());
            for (const auto& h : basis) d.functional.push_back(h(z) - h(w));
            roots.push_back(std::move(d));
        }
    }
    return roots;
}

/// Number of roots |Delta| = N(N-1) without materializing them.
inline long long root_count(const AlgebraId& algebra) {
    const long long n = algebra.dim();
    return n * (n - 1);
}

struct AlgebraElement {
    AlgebraId algebra;
    CMat mat;
};

/// Validates dimension, skew-Hermiticity and tracelessness (1e-12, relative
/// to max(1, ||mat||)).
inline AlgebraElement make_element(const AlgebraId& algebra, CMat mat) {
    const int n = algebra.dim();
    if (mat.rows() != n || mat.cols() != n)
        throw InputError("element of " + algebra.name() + " must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!mat.allFinite()) throw InputError("element has non-finite entries");
    const double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
    if ((mat + mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw InputError("element not skew-Hermitian");
    if (std::abs(mat.trace()) > 1e-12 * scale * n) throw InputError("element not traceless");
    return {algebra, std::move(mat)};
}

/// X = a iH + b (E_a - E_-a) + c i (E_a + E_-a) in su(2).
inline AlgebraElement su2_element(double a, double b, double c) {
    CMat m(2, 2);
    m << kI * a, cplx(b, c), cplx(-b, c), -kI * a;
    return {AlgebraId::su2(), m};
}

struct TorusRootDecomposition {
    AlgebraId algebra;
    CMat x0;                          // diagonal toral part
    std::map<RootLabel, cplx> coeffs; // nonzero root coefficients x_alpha

    CMat root_part() const {
        const int n = algebra.dim();
        CMat r = CMat::Zero(n, n);
        for (const auto& [label, x] : coeffs) r(label.z, label.w) = x;
        return r;
    }
    CMat reconstruct() const { return x0 + root_part(); }
};

/// Orthogonal projection onto the diagonal torus; root coefficients are the
/// off-diagonal entries, since the matrix units are the root vectors.
inline TorusRootDecomposition decompose(const AlgebraElement& x) {
    const int n = x.algebra.dim();
    TorusRootDecomposition d{x.algebra, CMat::Zero(n, n), {}};
    for (int i = 0; i < n; ++i) d.x0(i, i) = x.mat(i, i);
    for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
            if (z != w && x.mat(z, w) != cplx(0.0, 0.0)) d.coeffs.emplace(RootLabel{z, w}, x.mat(z, w));
    return d;
}

inline int permutation_parity(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        parity ^= static_cast<int>((len + 1) % 2);
    }
    return parity;
}

/// Signed permutation matrix g with g e_k = +-e_perm[k] and det g = 1.
/// For an odd permutation the last column is negated; for the su(2) swap
/// this gives g = [[0, -1], [1, 0]].
inline CMat weyl_representative(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> hit(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) throw InputError("invalid permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
    CMat g = CMat::Zero(n, n);
    for (int k = 0; k < n; ++k) g(perm[static_cast<std::size_t>(k)], k) = 1.0;
    if (permutation_parity(perm) == 1) g.col(n - 1) *= -1.0;
    return g;
}

inline AlgebraElement weyl_act(const AlgebraId& algebra, std::span<const int> perm, const AlgebraElement& x) {
    if (!(x.algebra == algebra)) throw InputError("weyl_act: algebra mismatch");
    if (static_cast<int>(perm.size()) != algebra.dim()) throw InputError("invalid permutation");
    const CMat g = weyl_representative(perm);
    return {algebra, g * x.mat * g.adjoint()};
}

/// Random element with Gaussian entries (before projection onto su(N)).
template <class Rng>
AlgebraElement random_element(const AlgebraId& algebra, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const int n = algebra.dim();
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(normal(rng), normal(rng));
    CMat x = 0.5 * (m - m.adjoint());
    const cplx tr = x.trace() / static_cast<double>(n);
    for (int i = 0; i < n; ++i) x(i, i) -= tr;
    return {algebra, x};
}

}  // namespace rootsim
