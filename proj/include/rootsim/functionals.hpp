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

// Root-profile functionals: root activity A_p, root curvature C, the
// activity seminorm ||X||_act = A_1(X_root), M(X0) = sup |alpha(X0)|, the
// closed-form torus-root commutators, and the norm-equivalence constants
// relating ||.||_act to the Frobenius norm on the root subspace.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootsim/representation.hpp"

namespace rootsim {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Optional rescaling E_alpha -> s(alpha) E_alpha of the root vectors; the
/// coefficients transform as x_alpha -> x_alpha / s(alpha).
using RootScale = std::function<double(const RootLabel&)>;

struct RootProfileEntry {
    RootLabel label;
    double abs_x = 0.0;
    double op_norm_E = 0.0;
    cplx alpha_x0{};
};

struct RootProfile {
    AlgebraId algebra;
    std::vector<RootProfileEntry> entries;
    long long total_roots = 0;  // |Delta|
    double m_x0 = 0.0;          // sup over all roots of |alpha(X0)|
};

inline double sup_root_value(const CMat& x0) {
    double m = 0.0;
    for (Eigen::Index z = 0; z < x0.rows(); ++z)
        for (Eigen::Index w = z + 1; w < x0.rows(); ++w) m = std::max(m, std::abs(x0(z, z) - x0(w, w)));
    return m;
}

inline RootProfile root_profile(const Representation& rep, const TorusRootDecomposition& d,
                                const RootScale& scale = {}) {
    if (!(rep.algebra() == d.algebra)) throw InputError("root_profile: algebra mismatch");
    if (d.algebra.dim() > kRootEnumerationCap) throw SizeCapError("root enumeration too large; use grouped profile");
    RootProfile p{d.algebra, {}, root_count(d.algebra), sup_root_value(d.x0)};
    p.entries.reserve(d.coeffs.size());
    for (const auto& [label, x] : d.coeffs) {
        const double s = scale ? scale(label) : 1.0;
        p.entries.push_back({label, std::abs(x) / s, s * root_image_norm(rep, label), root_value(label, d.x0)});
    }
    return p;
}

inline RootProfile root_profile(const Representation& rep, const AlgebraElement& x, const RootScale& scale = {}) {
    if (!(rep.algebra() == x.algebra)) throw InputError("root_profile: algebra mismatch");
    return root_profile(rep, decompose(x), scale);
}

/// l^p norm (p >= 1, or infinity) of a non-negative sequence.
inline double lp_norm(std::span<const double> v, double p) {
    if (!(p >= 1.0)) throw InputError("activity order p must be >= 1");
    if (v.empty()) return 0.0;
    const double peak = *std::max_element(v.begin(), v.end());
    if (p == kInfinity || peak == 0.0) return peak;
    double acc = 0.0;
    for (double x : v) acc += std::pow(x / peak, p);
    return peak * std::pow(acc, 1.0 / p);
}

inline std::vector<double> activity_terms(const RootProfile& profile) {
    std::vector<double> t;
    t.reserve(profile.entries.size());
    for (const auto& e : profile.entries) t.push_back(e.abs_x * e.op_norm_E);
    return t;
}

inline std::vector<double> curvature_terms(const RootProfile& profile) {
    std::vector<double> t;
    t.reserve(profile.entries.size());
    for (const auto& e : profile.entries) t.push_back(std::abs(e.alpha_x0) * e.abs_x * e.op_norm_E);
    return t;
}

inline double activity(const RootProfile& profile, double p) { return lp_norm(activity_terms(profile), p); }

inline double curvature(const RootProfile& profile) { return lp_norm(curvature_terms(profile), 2.0); }

/// ||X||_act = A_1(X_root); depends on the root component only.
inline double activity_seminorm(const Representation& rep, const AlgebraElement& x) {
    return activity(root_profile(rep, x), 1.0);
}

struct FunctionalReport {
    std::string convention = "matrix-unit";
    std::vector<std::pair<double, double>> a_p;  // (p, A_p), p = infinity for A_inf
    double curvature = 0.0;
    double act_seminorm = 0.0;
    double m_x0 = 0.0;
    double c_struct = 0.0;       // sqrt(active root count)
    double c_struct_full = 0.0;  // sqrt(|Delta|)

    double a(double p) const {
        for (const auto& [q, v] : a_p)
            if (q == p) return v;
        throw InputError("activity order not in report");
    }
};

inline FunctionalReport make_report(std::span<const double> act, std::span<const double> curv, double m_x0,
                                    long long total_roots, std::string convention,
                                    std::span<const double> extra_p = {}) {
    FunctionalReport r;
    r.convention = std::move(convention);
    std::vector<double> orders{1.0, 2.0, kInfinity};
    for (double p : extra_p)
        if (std::find(orders.begin(), orders.end(), p) == orders.end()) orders.push_back(p);
    for (double p : orders) r.a_p.emplace_back(p, lp_norm(act, p));
    r.curvature = lp_norm(curv, 2.0);
    r.act_seminorm = r.a(1.0);
    r.m_x0 = m_x0;
    r.c_struct = std::sqrt(static_cast<double>(act.size()));
    r.c_struct_full = std::sqrt(static_cast<double>(total_roots));
    return r;
}

inline FunctionalReport functional_report(const RootProfile& profile, std::span<const double> extra_p = {}) {
    const auto act = activity_terms(profile);
    const auto curv = curvature_terms(profile);
    return make_report(act, curv, profile.m_x0, profile.total_roots, "matrix-unit", extra_p);
}

namespace detail {

/// out += coeff * d rho(E_label), without forming dense root vectors for the
/// defining representation.
inline void add_root_image(const Representation& rep, const RootLabel& label, cplx coeff, CMat& out) {
    switch (rep.kind()) {
        case RepKind::Defining:
            out(label.z, label.w) += coeff;
            return;
        case RepKind::TensorTrivial:
            add_root_image(rep.inner(), label, coeff, out);
            return;
        case RepKind::SpinJ:
            out += coeff * image(rep, matrix_unit(2, label));
            return;
    }
}

inline CMat weighted_root_sum(const Representation& rep, const TorusRootDecomposition& d, int power) {
    if (!(rep.algebra() == d.algebra)) throw InputError("algebra mismatch");
    CMat out = CMat::Zero(rep.dim(), rep.dim());
    for (const auto& [label, x] : d.coeffs) {
        const cplx alpha = root_value(label, d.x0);
        add_root_image(rep, label, x * std::pow(alpha, power), out);
    }
    return out;
}

}  // namespace detail

/// [d rho(X0), d rho(X_root)] = sum_alpha x_alpha alpha(X0) d rho(E_alpha).
inline CMat commutator_via_roots(const Representation& rep, const TorusRootDecomposition& d) {
    return detail::weighted_root_sum(rep, d, 1);
}

/// [A, [A, B]] = sum_alpha x_alpha alpha(X0)^2 d rho(E_alpha).
inline CMat nested_commutator_AAB(const Representation& rep, const TorusRootDecomposition& d) {
    return detail::weighted_root_sum(rep, d, 2);
}

struct NormEquivalence {
    double m1 = 0.0;
    double M1 = 0.0;
    int samples = 0;
    unsigned long long seed = 0;
    double sampled_min = 0.0;  // extremes before refinement
    double sampled_max = 0.0;
};

/// Estimates m1 = min and M1 = max of ||Y||_act / ||Y_root|| over the root
/// subspace. Y is parametrized by real pairs (b, c) per positive root,
/// Y = sum b (E_a - E_-a) + c i (E_a + E_-a), so |x_a| = |x_-a| = sqrt(b^2 + c^2)
/// and ||Y_root||^2 = 2 sum (b^2 + c^2). Random directions are followed by a
/// deterministic coordinate pattern search on each extreme.
inline NormEquivalence norm_equivalence_constants(const Representation& rep, const AlgebraId& algebra, int samples,
                                                  unsigned long long seed = 0, const RootScale& scale = {}) {
    if (!(rep.algebra() == algebra)) throw InputError("norm_equivalence_constants: algebra mismatch");
    if (samples < 1) throw InputError("samples must be >= 1");
    const int n = algebra.dim();
    if (n > kRootEnumerationCap) throw SizeCapError("root enumeration too large; use grouped profile");

    // Per positive root: weights |x|/s_+ * (s_+ n_+) + |x|/s_- * (s_- n_-).
    std::vector<std::pair<double, double>> pair_scales;  // (s_+, s_-)
    std::vector<std::pair<double, double>> pair_norms;   // (s_+ n_+, s_- n_-)
    for (int z = 0; z < n; ++z) {
        for (int w = z + 1; w < n; ++w) {
            const RootLabel plus{z, w}, minus{w, z};
            const double sp = scale ? scale(plus) : 1.0, sm = scale ? scale(minus) : 1.0;
            pair_scales.emplace_back(sp, sm);
            pair_norms.emplace_back(sp * root_image_norm(rep, plus), sm * root_image_norm(rep, minus));
        }
    }
    if (pair_norms.empty()) throw Error("algebra with empty root set");
    const std::size_t dims = 2 * pair_norms.size();

    auto ratio = [&](const std::vector<double>& v) {
        double act = 0.0, sq = 0.0;
        for (std::size_t p = 0; p < pair_norms.size(); ++p) {
            const double r = std::hypot(v[2 * p], v[2 * p + 1]);
            act += r / pair_scales[p].first * pair_norms[p].first + r / pair_scales[p].second * pair_norms[p].second;
            sq += 2.0 * r * r;
        }
        return act / std::sqrt(sq);
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    NormEquivalence out;
    out.samples = samples;
    out.seed = seed;
    std::vector<double> vmin, vmax;
    double fmin = kInfinity, fmax = -kInfinity;
    for (int s = 0; s < samples; ++s) {
        std::vector<double> v(dims);
        for (auto& c : v) c = normal(rng);
        const double f = ratio(v);
        if (f < fmin) fmin = f, vmin = v;
        if (f > fmax) fmax = f, vmax = v;
    }
    out.sampled_min = fmin;
    out.sampled_max = fmax;

    // Extremes of this ratio sit on non-smooth points (single active roots,
    // equal magnitudes), which local search approaches slowly; seed them directly.
    std::vector<std::vector<double>> seeds;
    for (std::size_t i = 0; i < dims; ++i) {
        std::vector<double> v(dims, 0.0);
        v[i] = 1.0;
        seeds.push_back(std::move(v));
    }
    seeds.emplace_back(dims, 1.0);
    for (const auto& v : seeds) {
        const double f = ratio(v);
        if (f < fmin) fmin = f, vmin = v;
        if (f > fmax) fmax = f, vmax = v;
    }

    // Pattern search on the unit sphere; the objective is scale invariant.
    auto refine = [&](std::vector<double> v, double sign) {
        double nv = 0.0;
        for (double c : v) nv += c * c;
        for (auto& c : v) c /= std::sqrt(nv);
        double best = sign * ratio(v);
        const long long budget = 4'000'000;
        long long evals = 0;
        for (double step = 0.5; step > 1e-11 && evals < budget; step *= 0.5) {
            bool improved = true;
            while (improved && evals < budget) {
                improved = false;
                for (std::size_t i = 0; i < dims; ++i) {
                    for (double dir : {1.0, -1.0}) {
                        auto trial = v;
                        trial[i] += dir * step;
                        double norm2 = 0.0;
                        for (double c : trial) norm2 += c * c;
                        if (norm2 == 0.0) continue;
                        const double f = sign * ratio(trial);
                        evals += static_cast<long long>(dims);
                        if (f > best) {
                            best = f;
                            v = std::move(trial);
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }
        return sign * best;
    };
    out.m1 = std::min(fmin, refine(vmin, -1.0));
    out.M1 = std::max(fmax, refine(vmax, 1.0));
    return out;
}

}  // namespace rootsim
