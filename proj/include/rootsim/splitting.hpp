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

// Exact evolution and product formulas for the torus-root split
// d rho(X) = A + B, A = d rho(X0), B = d rho(X_root):
//   trotter1: e^{tA} e^{tB}
//   strang:   e^{tA/2} e^{tB} e^{tA/2}
// plus error sweeps against the t^3 (C + A_1) bound.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rootsim/fit.hpp"
#include "rootsim/functionals.hpp"

namespace rootsim {

enum class Scheme { Strang, Trotter1 };

inline std::string scheme_name(Scheme s) { return s == Scheme::Strang ? "strang" : "trotter1"; }

struct SplitOperators {
    CMat a;  // d rho(X0)
    CMat b;  // d rho(X_root)
};

inline SplitOperators split_operators(const Representation& rep, const TorusRootDecomposition& d) {
    if (!(rep.algebra() == d.algebra)) throw InputError("split: algebra mismatch");
    return {image(rep, d.x0), image(rep, d.root_part())};
}

inline CMat exact_evolution(const Representation& rep, const AlgebraElement& x, double t) {
    if (!std::isfinite(t)) throw InputError("time must be finite");
    return expm_skew(CMat(t * apply(rep, x)));
}

inline CMat strang(const SplitOperators& ops, double t) {
    if (!std::isfinite(t)) throw InputError("time must be finite");
    const CMat half = expm_skew(CMat(0.5 * t * ops.a));
    return half * expm_skew(CMat(t * ops.b)) * half;
}

inline CMat strang(const Representation& rep, const TorusRootDecomposition& d, double t) {
    return strang(split_operators(rep, d), t);
}

inline CMat trotter1(const SplitOperators& ops, double t) {
    if (!std::isfinite(t)) throw InputError("time must be finite");
    return expm_skew(CMat(t * ops.a)) * expm_skew(CMat(t * ops.b));
}

inline CMat trotter1(const Representation& rep, const TorusRootDecomposition& d, double t) {
    return trotter1(split_operators(rep, d), t);
}

/// strang(t / r)^r, one full three-factor step at a time.
inline CMat composed_evolution(const SplitOperators& ops, double t, int r) {
    if (r < 1) throw InputError("step count must be >= 1");
    const CMat step = strang(ops, t / r);
    CMat u = step;
    for (int k = 1; k < r; ++k) u = (u * step).eval();
    return u;
}

inline CMat composed_evolution(const Representation& rep, const TorusRootDecomposition& d, double t, int r) {
    return composed_evolution(split_operators(rep, d), t, r);
}

/// Same operator as composed_evolution with adjacent A half-steps merged:
/// e^{hA/2} (e^{hB} e^{hA})^{r-1} e^{hB} e^{hA/2}.
inline CMat composed_evolution_merged(const SplitOperators& ops, double t, int r) {
    if (r < 1) throw InputError("step count must be >= 1");
    const double h = t / r;
    const CMat half = expm_skew(CMat(0.5 * h * ops.a));
    const CMat full = expm_skew(CMat(h * ops.a));
    const CMat eb = expm_skew(CMat(h * ops.b));
    CMat u = half * eb;
    for (int k = 1; k < r; ++k) u = (u * full * eb).eval();
    return u * half;
}

inline CMat propagate(const SplitOperators& ops, Scheme scheme, double t, int steps) {
    if (scheme == Scheme::Strang) return steps == 1 ? strang(ops, t) : composed_evolution(ops, t, steps);
    const CMat step = trotter1(ops, t / steps);
    CMat u = step;
    for (int k = 1; k < steps; ++k) u = (u * step).eval();
    return u;
}

struct SplitErrorReport {
    Scheme scheme = Scheme::Strang;
    int steps = 1;
    std::vector<double> times;      // strictly decreasing
    std::vector<double> errors;     // ||e^{t(A+B)} - S(t)||_op
    std::vector<double> bound_rhs;  // t^3 (C + A_1)
    std::vector<bool> retained;     // above the roundoff floor
    double curvature = 0.0;
    double activity1 = 0.0;
    double roundoff_floor = 0.0;
    std::optional<double> fitted_order;
    double c_hat = 0.0;  // max error / bound_rhs over retained points
    double t0 = 0.0;     // largest sweep time with error < 0.1 (0 if none)
    std::vector<std::string> warnings;

    /// error / bound_rhs, or nan where the bound vanishes.
    double ratio(std::size_t i) const {
        return bound_rhs[i] > 0.0 ? errors[i] / bound_rhs[i] : std::numeric_limits<double>::quiet_NaN();
    }

    /// Empirical bound check: c_hat taken at the largest retained time, then
    /// error(t) <= slack * c_hat * t^3 (C + A_1) at every smaller time.
    bool bound_holds(double slack) const {
        std::optional<double> c_first;
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (!retained[i]) continue;
            if (!c_first) {
                c_first = ratio(i);
                continue;
            }
            if (errors[i] > slack * *c_first * bound_rhs[i]) return false;
        }
        return true;
    }
};

inline void validate_time_grid(const std::vector<double>& times) {
    if (times.size() < 4) throw InputError("error sweep needs at least 4 time points");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !std::isfinite(times[i])) throw InputError("sweep times must be positive");
        if (i > 0 && !(times[i] < times[i - 1])) throw InputError("sweep times must be strictly decreasing");
    }
}

/// t_max * ratio^k for k = 0..points-1.
inline std::vector<double> geometric_grid(double t_max, int points, double ratio) {
    if (!(t_max > 0.0) || points < 1 || !(ratio > 0.0 && ratio < 1.0))
        throw InputError("time grid needs t_max > 0, points >= 1 and 0 < ratio < 1");
    std::vector<double> t;
    for (int k = 0; k < points; ++k) t.push_back(t_max * std::pow(ratio, k));
    return t;
}

/// Sweep with an explicitly supplied bound weight (C + A_1 split into its parts).
inline SplitErrorReport error_sweep(const Representation& rep, const AlgebraElement& x, const std::vector<double>& times,
                                    Scheme scheme, double curvature_value, double activity_value, int steps = 1) {
    validate_time_grid(times);
    if (steps < 1) throw InputError("step count must be >= 1");
    const auto d = decompose(x);
    const SplitOperators ops = split_operators(rep, d);
    const CMat gen = ops.a + ops.b;

    SplitErrorReport r;
    r.scheme = scheme;
    r.steps = steps;
    r.times = times;
    r.curvature = curvature_value;
    r.activity1 = activity_value;
    r.roundoff_floor = 1e3 * std::numeric_limits<double>::epsilon() * rep.dim();
    const double weight = curvature_value + activity_value;

    r.errors.resize(times.size());
    r.bound_rhs.resize(times.size());
    r.retained.resize(times.size());
    // Grid points are independent; the loop order does not affect the report.
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const CMat exact = expm_skew(CMat(t * gen));
        r.errors[i] = op_norm(CMat(exact - propagate(ops, scheme, t, steps)));
        r.bound_rhs[i] = t * t * t * weight;
        r.retained[i] = r.errors[i] >= r.roundoff_floor;
    }

    std::vector<double> ft, fe;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!r.retained[i]) continue;
        ft.push_back(times[i]);
        fe.push_back(r.errors[i]);
        if (r.bound_rhs[i] > 0.0) r.c_hat = std::max(r.c_hat, r.errors[i] / r.bound_rhs[i]);
    }
    r.fitted_order = loglog_slope(ft, fe);
    if (!r.fitted_order) r.warnings.push_back("fewer than two errors above the roundoff floor; fitted order undefined");

    for (std::size_t i = 0; i < times.size(); ++i) {
        if (r.errors[i] < 0.1) {
            r.t0 = times[i];
            break;
        }
    }
    if (r.t0 != times.front()) r.warnings.push_back("sweep extends beyond the small-time regime (error >= 0.1)");
    return r;
}

/// Sweep with the bound weight C + A_1 taken from the matrix-unit root profile.
inline SplitErrorReport error_sweep(const Representation& rep, const AlgebraElement& x, const std::vector<double>& times,
                                    Scheme scheme, int steps = 1) {
    const auto profile = root_profile(rep, x);
    return error_sweep(rep, x, times, scheme, curvature(profile), activity(profile, 1.0), steps);
}

/// Smallest r with r * c_hat * (t/r)^3 * (C + A_1) <= eps.
inline int required_steps(double weight, double t, double eps, double c_hat) {
    if (!(eps > 0.0)) throw InputError("eps must be positive");
    if (weight == 0.0 || c_hat == 0.0) return 1;
    const double r = std::ceil(std::sqrt(c_hat * std::abs(t * t * t) * weight / eps));
    return std::max(1, static_cast<int>(r));
}

inline int required_steps(const Representation& rep, const AlgebraElement& x, double t, double eps, double c_hat) {
    const auto profile = root_profile(rep, x);
    return required_steps(curvature(profile) + activity(profile, 1.0), t, eps, c_hat);
}

}  // namespace rootsim
