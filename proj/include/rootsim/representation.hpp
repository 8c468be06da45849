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

// Lie algebra representations d rho acting on the defining matrix model:
// the defining representation, the su(2) spin-j irreducibles, and the
// tensor product with a one-dimensional trivial factor.

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rootsim/algebra.hpp"

namespace rootsim {

/// Exact half-integer stored as twice its value.
struct HalfInt {
    int twice = 0;

    double value() const { return twice / 2.0; }
    std::string str() const { return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2"; }
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

enum class RepKind { Defining, SpinJ, TensorTrivial };

class Representation {
public:
    static Representation defining(const AlgebraId& algebra) {
        Representation r;
        r.algebra_ = algebra;
        r.kind_ = RepKind::Defining;
        r.dim_ = algebra.dim();
        return r;
    }

    static Representation spin(HalfInt j) {
        if (j.twice < 0) throw InputError("spin must be a non-negative half-integer");
        Representation r;
        r.algebra_ = AlgebraId::su2();
        r.kind_ = RepKind::SpinJ;
        r.j_ = j;
        r.dim_ = j.twice + 1;
        return r;
    }

    static Representation tensor_trivial(const Representation& inner) {
        Representation r;
        r.algebra_ = inner.algebra_;
        r.kind_ = RepKind::TensorTrivial;
        r.dim_ = inner.dim_;
        r.j_ = inner.j_;
        r.inner_ = std::make_shared<const Representation>(inner);
        return r;
    }

    const AlgebraId& algebra() const { return algebra_; }
    RepKind kind() const { return kind_; }
    int dim() const { return dim_; }
    HalfInt spin_j() const { return j_; }
    const Representation& inner() const { return *inner_; }

    std::string name() const {
        switch (kind_) {
            case RepKind::Defining: return "defining";
            case RepKind::SpinJ: return "spin-j=" + j_.str();
            case RepKind::TensorTrivial: return "tensor-trivial(" + inner_->name() + ")";
        }
        return "?";
    }

private:
    Representation() = default;

    AlgebraId algebra_;
    RepKind kind_ = RepKind::Defining;
    HalfInt j_{};
    int dim_ = 0;
    std::shared_ptr<const Representation> inner_;
};

/// Ladder coefficient c_{j,m} = sqrt((j-m)(j+m+1)), with j and m given doubled.
inline double ladder_coefficient(int twice_j, int twice_m) {
    const double v = (twice_j - twice_m) * (twice_j + twice_m + 2) / 4.0;
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

/// Spin-j images of the sl(2) triple (H, E_alpha, E_-alpha) in the weight basis
/// ordered v_j, v_{j-1}, ..., v_{-j}; for j = 1/2 these are the defining matrices.
struct SpinMatrices {
    CMat h, raise, lower;
};

inline SpinMatrices spin_matrices(HalfInt j) {
    const int d = j.twice + 1;
    SpinMatrices s{CMat::Zero(d, d), CMat::Zero(d, d), CMat::Zero(d, d)};
    for (int k = 0; k < d; ++k) {
        const int twice_m = j.twice - 2 * k;
        s.h(k, k) = static_cast<double>(twice_m);
        if (k > 0) s.raise(k - 1, k) = ladder_coefficient(j.twice, twice_m);
        if (k + 1 < d) s.lower(k + 1, k) = ladder_coefficient(j.twice, twice_m - 2);
    }
    return s;
}

/// Complex-linear extension of d rho to matrices in the (complexified) defining model.
inline CMat image(const Representation& rep, const CMat& y) {
    switch (rep.kind()) {
        case RepKind::Defining:
            return y;
        case RepKind::TensorTrivial:
            return image(rep.inner(), y);
        case RepKind::SpinJ: {
            if (y.rows() != 2 || y.cols() != 2) throw InputError("spin-j representation expects su(2) input");
            const auto s = spin_matrices(rep.spin_j());
            const cplx h = 0.5 * (y(0, 0) - y(1, 1));
            return h * s.h + y(0, 1) * s.raise + y(1, 0) * s.lower;
        }
    }
    throw Error("unknown representation kind");
}

inline CMat apply(const Representation& rep, const AlgebraElement& x) {
    if (!(rep.algebra() == x.algebra))
        throw InputError("representation of " + rep.algebra().name() + " applied to element of " + x.algebra.name());
    return image(rep, x.mat);
}

/// ||d rho(E_alpha)||_op.
inline double root_image_norm(const Representation& rep, const RootDatum& root) {
    switch (rep.kind()) {
        case RepKind::Defining:
            return 1.0;  // a matrix unit has a single unit singular value
        case RepKind::TensorTrivial:
            return root_image_norm(rep.inner(), root);
        case RepKind::SpinJ:
            if (rep.spin_j().twice == 0) return 0.0;
            return op_norm(image(rep, root.root_vector()));
    }
    throw Error("unknown representation kind");
}

inline double root_image_norm(const Representation& rep, const RootLabel& label) {
    return root_image_norm(rep, RootDatum{label, rep.algebra().dim(), {}});
}

struct WeightDatum {
    RVec weight;                     // lambda(i H_k) / i on the Cartan basis
    std::vector<int> basis_indices;  // basis of V spanning V_lambda
};

inline std::vector<WeightDatum> weight_decomposition(const Representation& rep) {
    switch (rep.kind()) {
        case RepKind::TensorTrivial:
            return weight_decomposition(rep.inner());
        case RepKind::SpinJ: {
            std::vector<WeightDatum> out;
            for (int k = 0; k <= rep.spin_j().twice; ++k) {
                RVec w(1);
                w(0) = static_cast<double>(rep.spin_j().twice - 2 * k);
                out.push_back({w, {k}});
            }
            return out;
        }
        case RepKind::Defining: {
            const int n = rep.dim();
            const auto basis = cartan_basis(n);
            std::vector<WeightDatum> out;
            for (int k = 0; k < n; ++k) {
                RVec w(n - 1);
                for (int l = 0; l < n - 1; ++l) w(l) = basis[static_cast<std::size_t>(l)](k);
                bool merged = false;
                for (auto& existing : out) {
                    if ((existing.weight - w).cwiseAbs().maxCoeff() < 1e-12) {
                        existing.basis_indices.push_back(k);
                        merged = true;
                        break;
                    }
                }
                if (!merged) out.push_back({w, {k}});
            }
            return out;
        }
    }
    throw Error("unknown representation kind");
}

/// Matrices d rho(i H_k) for the Cartan basis used by weights and root functionals.
inline std::vector<CMat> cartan_images(const Representation& rep) {
    std::vector<CMat> out;
    const int n = rep.algebra().dim();
    for (const auto& h : cartan_basis(n)) {
        CMat ih = CMat::Zero(n, n);
        for (int i = 0; i < n; ++i) ih(i, i) = kI * h(i);
        out.push_back(image(rep, ih));
    }
    return out;
}

inline Representation tensor_trivial(const Representation& rep) { return Representation::tensor_trivial(rep); }

/// Inverse of d rho on its image: recovers Y in the defining model with
/// d rho(Y) = z, or throws when z is not in the image.
inline AlgebraElement pullback(const Representation& rep, const CMat& z) {
    if (z.rows() != rep.dim() || z.cols() != rep.dim()) throw InputError("pullback: dimension mismatch");
    switch (rep.kind()) {
        case RepKind::TensorTrivial:
            return pullback(rep.inner(), z);
        case RepKind::Defining: {
            const double scale = std::max(1.0, op_norm(z));
            if (std::abs(z.trace()) > 1e-9 * scale * rep.dim())
                throw Error("logarithm not in the image of the algebra (nonzero trace)");
            CMat y = 0.5 * (z - z.adjoint());
            const cplx tr = y.trace() / static_cast<double>(rep.dim());
            for (int i = 0; i < rep.dim(); ++i) y(i, i) -= tr;
            return {rep.algebra(), y};
        }
        case RepKind::SpinJ: {
            if (rep.spin_j().twice == 0) return {rep.algebra(), CMat::Zero(2, 2)};
            const auto s = spin_matrices(rep.spin_j());
            auto coeff = [&](const CMat& basis) { return (basis.adjoint() * z).trace() / basis.squaredNorm(); };
            const cplx h = coeff(s.h), e = coeff(s.raise), f = coeff(s.lower);
            CMat y(2, 2);
            y << h, e, f, -h;
            const CMat back = image(rep, y);
            if (op_norm(CMat(back - z)) > 1e-9 * std::max(1.0, op_norm(z)))
                throw Error("logarithm not in the image of the algebra");
            return {rep.algebra(), 0.5 * (y - y.adjoint())};
        }
    }
    throw Error("unknown representation kind");
}

}  // namespace rootsim
