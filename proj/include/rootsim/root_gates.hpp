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

// Root-gate circuit model. Gates are e^{s d rho(Y)} with Y either toral or one
// of the unit-norm root-plane generators
//   X_a^(1) = (E_a - E_-a) / sqrt(2),   X_a^(2) = i (E_a + E_-a) / sqrt(2),
// and every gate obeys ||s Y||_g <= s0 (Frobenius norm on the defining model).

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rootsim/functionals.hpp"
#include "rootsim/splitting.hpp"

namespace rootsim {

enum class GateKind { Toral, RootPlane };

struct GateSpec {
    GateKind kind = GateKind::RootPlane;
    CMat toral;         // diagonal element of the torus (Toral gates only)
    RootLabel label{};  // positive root (RootPlane gates only)
    int k = 1;          // 1 or 2 (RootPlane gates only)
    double s = 0.0;

    static GateSpec toral_gate(CMat h, double s) { return {GateKind::Toral, std::move(h), {}, 1, s}; }
    static GateSpec root_gate(RootLabel label, int k, double s) { return {GateKind::RootPlane, {}, label, k, s}; }
};

struct Circuit {
    AlgebraId algebra;
    std::vector<GateSpec> gates;
    double s0 = 0.1;

    std::size_t length() const { return gates.size(); }
};

inline CMat gate_generator(const AlgebraId& algebra, const GateSpec& g) {
    const int n = algebra.dim();
    if (g.kind == GateKind::Toral) {
        if (g.toral.rows() != n || g.toral.cols() != n) throw InputError("toral gate generator has wrong dimension");
        if (!g.toral.isDiagonal(0.0)) throw InputError("toral gate generator must be diagonal");
        return make_element(algebra, g.toral).mat;
    }
    if (!g.label.positive() || g.label.w >= n || g.label.z < 0) throw InputError("root gate needs a positive root label");
    if (g.k != 1 && g.k != 2) throw InputError("root gate index k must be 1 or 2");
    CMat y = CMat::Zero(n, n);
    const double inv = 1.0 / std::numbers::sqrt2;
    if (g.k == 1) {
        y(g.label.z, g.label.w) = inv;
        y(g.label.w, g.label.z) = -inv;
    } else {
        y(g.label.z, g.label.w) = kI * inv;
        y(g.label.w, g.label.z) = kI * inv;
    }
    return y;
}

/// ||s Y||_g of the gate generator.
inline double gate_size(const AlgebraId& algebra, const GateSpec& g) {
    return std::abs(g.s) * frobenius(gate_generator(algebra, g));
}

inline CMat gate_unitary(const Representation& rep, const GateSpec& g, double s0) {
    const double size = gate_size(rep.algebra(), g);
    if (size > s0 * (1.0 + 1e-12)) throw InputError("gate step exceeds cap");
    return expm_skew(CMat(g.s * image(rep, gate_generator(rep.algebra(), g))));
}

/// W = U_1 U_2 ... U_N.
inline CMat circuit_unitary(const Representation& rep, const Circuit& c) {
    if (!(rep.algebra() == c.algebra)) throw InputError("circuit: algebra mismatch");
    CMat w = CMat::Identity(rep.dim(), rep.dim());
    for (const auto& g : c.gates) w = (w * gate_unitary(rep, g, c.s0)).eval();
    return w;
}

/// Sum over gates of ||Y_k||_g.
inline double total_gate_size(const Circuit& c) {
    double sum = 0.0;
    for (const auto& g : c.gates) sum += gate_size(c.algebra, g);
    return sum;
}

/// Principal logarithm of a unitary pulled back into the algebra.
inline AlgebraElement effective_generator(const Representation& rep, const CMat& w) {
    CMat z;
    try {
        z = logm_unitary(w);
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + "; shrink s0 or split the circuit into shorter segments");
    }
    return pullback(rep, z);
}

inline AlgebraElement effective_generator(const Representation& rep, const Circuit& c) {
    return effective_generator(rep, circuit_unitary(rep, c));
}

struct LogStability {
    double eps = 0.0;           // ||W - e^{t d rho(X)}||_op
    double act_distance = 0.0;  // ||Z - tX||_act
    bool in_regime = true;      // eps <= eps0
};

inline LogStability log_stability_check(const Representation& rep, const AlgebraElement& x, double t, const CMat& w,
                                        double eps0) {
    LogStability out;
    out.eps = op_norm(CMat(w - exact_evolution(rep, x, t)));
    const AlgebraElement z = effective_generator(rep, w);
    out.act_distance = activity_seminorm(rep, AlgebraElement{x.algebra, z.mat - t * x.mat});
    out.in_regime = out.eps <= eps0;
    return out;
}

inline LogStability log_stability_check(const Representation& rep, const AlgebraElement& x, double t, const Circuit& w,
                                        double eps0) {
    return log_stability_check(rep, x, t, circuit_unitary(rep, w), eps0);
}

struct LowerBoundReport {
    double m1 = 0.0;
    double M1 = 0.0;
    double c_rho = 0.0;  // empirical estimate, see lower_bound()
    double eps0 = 0.0;
    double s0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    unsigned long long seed = 0;
    int samples = 0;
    int c_rho_samples_used = 0;

    /// max(0, ceil(c1 t ||X||_act - c2)).
    long long n_lower(double act_seminorm, double t) const {
        const double v = std::ceil(c1 * t * act_seminorm - c2);
        return v > 0.0 ? static_cast<long long>(v) : 0;
    }
};

inline LowerBoundReport make_lower_bound(double m1, double M1, double c_rho, double s0, double eps0) {
    LowerBoundReport r;
    r.m1 = m1;
    r.M1 = M1;
    r.c_rho = c_rho;
    r.s0 = s0;
    r.eps0 = eps0;
    r.c1 = 1.0 / (M1 * s0);
    r.c2 = c_rho * eps0 / (M1 * s0);
    return r;
}

/// Lower-bound constants for (algebra, rep, s0, eps0).
///
/// c_rho sampling protocol (seeded): draw a random target X with
/// ||d rho(X)||_op uniform in [0.05, 1] * pi/2 (principal-branch regime, t = 1),
/// a random perturbation delta with ||d rho(delta)||_op uniform in
/// [0.01, 1] * eps0, set W = e^{d rho(X)} e^{d rho(delta)}, and record
/// ||log W - X||_act / ||W - e^{d rho(X)}||_op. c_rho is the maximum ratio.
inline LowerBoundReport lower_bound(const Representation& rep, const AlgebraId& algebra, double s0, double eps0,
                                    int samples, unsigned long long seed = 0, const RootScale& scale = {}) {
    if (!(s0 > 0.0)) throw InputError("s0 must be positive");
    if (!(eps0 > 0.0)) throw InputError("eps0 must be positive");
    if (samples < 1) throw InputError("samples must be >= 1");
    const NormEquivalence ne = norm_equivalence_constants(rep, algebra, samples, seed, scale);

    std::seed_seq seq{seed, 0x5eedULL};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double c_rho = 0.0;
    int used = 0;
    for (int i = 0; i < samples; ++i) {
        AlgebraElement x = random_element(algebra, rng);
        AlgebraElement delta = random_element(algebra, rng);
        const double xs = op_norm(apply(rep, x)), ds = op_norm(apply(rep, delta));
        if (xs == 0.0 || ds == 0.0) continue;
        x.mat *= (0.05 + 0.95 * unit(rng)) * (std::numbers::pi / 2.0) / xs;
        delta.mat *= (0.01 + 0.99 * unit(rng)) * eps0 / ds;
        const CMat target = expm_skew(apply(rep, x));
        const CMat w = target * expm_skew(apply(rep, delta));
        const double eps = op_norm(CMat(w - target));
        if (eps < 1e-14) continue;
        const AlgebraElement z = effective_generator(rep, w);
        const auto profile = root_profile(rep, AlgebraElement{algebra, z.mat - x.mat}, scale);
        c_rho = std::max(c_rho, activity(profile, 1.0) / eps);
        ++used;
    }
    if (used == 0) throw EstimationError("cannot estimate c_rho");

    LowerBoundReport r = make_lower_bound(ne.m1, ne.M1, c_rho, s0, eps0);
    r.seed = seed;
    r.samples = samples;
    r.c_rho_samples_used = used;
    return r;
}

namespace detail {

/// Appends gates realizing e^{y} for y = s * gen, split into ceil(||y||/s0) equal pieces.
inline void append_split(Circuit& c, const GateSpec& unit_gate, double total_size) {
    if (total_size == 0.0) return;
    const int pieces = static_cast<int>(std::ceil(total_size / c.s0 * (1.0 - 1e-12)));
    GateSpec g = unit_gate;
    g.s = unit_gate.s / std::max(1, pieces);
    for (int k = 0; k < std::max(1, pieces); ++k) c.gates.push_back(g);
}

inline void append_toral(Circuit& c, const CMat& h) {
    const double size = frobenius(h);
    if (size == 0.0) return;
    append_split(c, GateSpec::toral_gate(h / size, size), size);
}

}  // namespace detail

/// Root-gate circuit for r Strang steps of an su(2) generator. Each root
/// factor e^{tau B} is realized exactly by conjugating a k = 1 root gate with
/// toral rotations: B = Ad(e^{theta iH}) |x_a| (E_a - E_-a) with 2 theta = arg x_a.
inline Circuit compile_su2_strang(const TorusRootDecomposition& d, double t, int r, double s0) {
    if (!(d.algebra == AlgebraId::su2())) throw InputError("compile_su2_strang requires su(2)");
    if (r < 1) throw InputError("step count must be >= 1");
    Circuit c{d.algebra, {}, s0};
    const double tau = t / r;
    const cplx xa = d.root_part()(0, 1);
    const double rho = std::abs(xa);
    const double theta = rho > 0.0 ? 0.5 * std::arg(xa) : 0.0;
    CMat ih = CMat::Zero(2, 2);
    ih(0, 0) = kI;
    ih(1, 1) = -kI;
    const CMat half_a = 0.5 * tau * d.x0;
    for (int step = 0; step < r; ++step) {
        if (rho == 0.0) {
            detail::append_toral(c, CMat(2.0 * half_a));
            continue;
        }
        detail::append_toral(c, CMat(half_a + theta * ih));
        const double root_size = tau * rho * std::numbers::sqrt2;
        detail::append_split(c, GateSpec::root_gate({0, 1}, 1, root_size), root_size);
        detail::append_toral(c, CMat(half_a - theta * ih));
    }
    return c;
}

}  // namespace rootsim
