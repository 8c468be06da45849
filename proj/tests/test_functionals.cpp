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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rootsim/functionals.hpp"

using namespace rootsim;

namespace {

RootProfile synthetic_profile(std::initializer_list<double> weights) {
    RootProfile p{AlgebraId::sun(3), {}, 6, 0.0};
    int k = 0;
    for (double w : weights) p.entries.push_back({RootLabel{0, ++k}, w, 1.0, cplx{}});
    return p;
}

double act_ratio(const Representation& rep, const AlgebraElement& y) {
    const auto d = decompose(y);
    return activity(root_profile(rep, d), 1.0) / frobenius(d.root_part());
}

}  // namespace

TEST(functionals, toral_profile_is_empty) {
    const auto p = root_profile(Representation::defining(AlgebraId::su2()), su2_element(0.7, 0, 0));
    EXPECT_TRUE(p.entries.empty());
    for (double q : {1.0, 2.0, 3.5, kInfinity}) EXPECT_EQ(activity(p, q), 0.0);
    EXPECT_EQ(curvature(p), 0.0);
}

TEST(functionals, su2_alpha_values) {
    const double a = 0.6;
    const auto p = root_profile(Representation::defining(AlgebraId::su2()), su2_element(a, 0.3, -0.2));
    ASSERT_EQ(p.entries.size(), 2u);
    for (const auto& e : p.entries) {
        const double sign = e.label.positive() ? 1.0 : -1.0;
        EXPECT_NEAR(std::abs(e.alpha_x0 - sign * 2.0 * a * kI), 0.0, 1e-15);
    }
    EXPECT_NEAR(p.m_x0, 2 * a, 1e-15);
}

TEST(functionals, su3_profile_matches_entries) {
    std::mt19937_64 rng(31);
    const auto x = random_element(AlgebraId::sun(3), rng);
    const auto p = root_profile(Representation::defining(AlgebraId::sun(3)), x);
    ASSERT_EQ(p.entries.size(), 6u);
    for (const auto& e : p.entries) {
        EXPECT_EQ(e.abs_x, std::abs(x.mat(e.label.z, e.label.w)));
        EXPECT_EQ(e.op_norm_E, 1.0);
        const double theta_diff = x.mat(e.label.z, e.label.z).imag() - x.mat(e.label.w, e.label.w).imag();
        EXPECT_NEAR(e.alpha_x0.imag(), theta_diff, 1e-14);
        EXPECT_NEAR(e.alpha_x0.real(), 0.0, 1e-14);
    }
}

TEST(functionals, hand_arithmetic) {
    const auto p = synthetic_profile({3.0, 4.0});
    EXPECT_DOUBLE_EQ(activity(p, 1.0), 7.0);
    EXPECT_DOUBLE_EQ(activity(p, 2.0), 5.0);
    EXPECT_DOUBLE_EQ(activity(p, kInfinity), 4.0);
    EXPECT_THROW(activity(p, 0.5), InputError);
}

TEST(functionals, spin_j_closed_forms) {
    const double a = 0.4, b = 0.7, c = -0.3;
    const double xa = std::hypot(b, c);
    for (int twice = 1; twice <= 10; ++twice) {
        const auto rep = Representation::spin(HalfInt{twice});
        const double j = twice / 2.0;
        const double norm = twice % 2 == 0 ? std::sqrt(j * (j + 1)) : j + 0.5;
        const auto p = root_profile(rep, su2_element(a, b, c));
        EXPECT_NEAR(activity(p, 1.0), 2 * xa * norm, 1e-12);
        EXPECT_NEAR(curvature(p), 2 * a * std::sqrt(2 * xa * xa) * norm, 1e-12);
    }
}

TEST(functionals, curvature_vanishes_without_toral_part) {
    const auto p = root_profile(Representation::defining(AlgebraId::su2()), su2_element(0, 1.2, 0.4));
    EXPECT_EQ(curvature(p), 0.0);
    EXPECT_GT(activity(p, 1.0), 0.0);
}

TEST(functionals, report_fields) {
    const auto rep = Representation::defining(AlgebraId::sun(3));
    std::mt19937_64 rng(2);
    const auto p = root_profile(rep, random_element(AlgebraId::sun(3), rng));
    const std::vector<double> extra{1.5};
    const auto r = functional_report(p, extra);
    EXPECT_EQ(r.act_seminorm, r.a(1.0));
    EXPECT_EQ(r.a(1.5), activity(p, 1.5));
    EXPECT_EQ(r.a(kInfinity), activity(p, kInfinity));
    EXPECT_EQ(r.curvature, curvature(p));
    EXPECT_DOUBLE_EQ(r.c_struct, std::sqrt(6.0));
    EXPECT_THROW(r.a(3.0), InputError);
}

TEST(functionals, activity_inequalities) {
    std::mt19937_64 rng(41);
    for (const AlgebraId a : {AlgebraId::su2(), AlgebraId::sun(3), AlgebraId::sun(4)}) {
        const auto rep = Representation::defining(a);
        for (int trial = 0; trial < 50; ++trial) {
            const auto x = random_element(a, rng);
            const auto d = decompose(x);
            const auto p = root_profile(rep, d);
            const double n = static_cast<double>(p.entries.size());
            EXPECT_LE(op_norm(image(rep, d.root_part())), activity(p, 1.0) + 1e-12);
            const std::vector<double> orders{1.0, 1.5, 2.0, 3.0, kInfinity};
            for (std::size_t i = 0; i < orders.size(); ++i) {
                for (std::size_t k = i + 1; k < orders.size(); ++k) {
                    const double ap = activity(p, orders[i]), aq = activity(p, orders[k]);
                    const double expo = 1.0 / orders[i] - (orders[k] == kInfinity ? 0.0 : 1.0 / orders[k]);
                    EXPECT_LE(aq, ap + 1e-12);
                    EXPECT_LE(ap, std::pow(n, expo) * aq + 1e-12);
                }
            }
        }
    }
}

TEST(functionals, commutator_closed_forms) {
    std::mt19937_64 rng(51);
    std::vector<Representation> reps{Representation::defining(AlgebraId::su2()),
                                     Representation::defining(AlgebraId::sun(3)),
                                     Representation::defining(AlgebraId::sun(4)), Representation::spin(HalfInt{3})};
    for (const auto& rep : reps) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_element(rep.algebra(), rng);
            const auto d = decompose(x);
            const CMat a = image(rep, d.x0), b = image(rep, d.root_part());
            const CMat ab = commutator(a, b);
            EXPECT_LT(op_norm(CMat(commutator_via_roots(rep, d) - ab)), 1e-10);
            EXPECT_LT(op_norm(CMat(nested_commutator_AAB(rep, d) - commutator(a, ab))), 1e-10);
            const auto r = functional_report(root_profile(rep, d));
            EXPECT_LE(op_norm(ab), r.c_struct * r.curvature + 1e-10);
        }
    }
}

TEST(functionals, commuting_case_gives_zero) {
    const auto rep = Representation::defining(AlgebraId::su2());
    const auto d = decompose(su2_element(0.0, 0.5, 0.5));
    EXPECT_EQ(op_norm(commutator_via_roots(rep, d)), 0.0);
    EXPECT_EQ(op_norm(nested_commutator_AAB(rep, d)), 0.0);
}

TEST(functionals, two_term_trotter_cross_check) {
    // X = -i w_x sigma_x - i w_z sigma_z: [A, B] = 2 w_x w_z (i sigma_y) up to sign.
    const double wx = 0.8, wz = 1.7;
    CMat x(2, 2);
    x << -kI * wz, -kI * wx, -kI * wx, kI * wz;
    const auto d = decompose(make_element(AlgebraId::su2(), x));
    EXPECT_NEAR(op_norm(commutator_via_roots(Representation::defining(AlgebraId::su2()), d)), 2 * wx * wz, 1e-14);
}

TEST(functionals, weyl_and_intertwiner_invariance) {
    std::mt19937_64 rng(61);
    for (int n : {2, 3}) {
        const AlgebraId a = n == 2 ? AlgebraId::su2() : AlgebraId::sun(n);
        const auto rep = Representation::defining(a);
        const auto x = random_element(a, rng);
        const auto base = functional_report(root_profile(rep, x));
        const auto wrapped = functional_report(root_profile(tensor_trivial(rep), x));
        EXPECT_EQ(base.a_p, wrapped.a_p);
        EXPECT_EQ(base.curvature, wrapped.curvature);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const auto r = functional_report(root_profile(rep, weyl_act(a, perm, x)));
            for (std::size_t k = 0; k < base.a_p.size(); ++k) EXPECT_NEAR(r.a_p[k].second, base.a_p[k].second, 1e-10);
            EXPECT_NEAR(r.curvature, base.curvature, 1e-10);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(functionals, normalization_invariance) {
    std::mt19937_64 rng(71);
    const auto rep = Representation::defining(AlgebraId::sun(3));
    const auto x = random_element(AlgebraId::sun(3), rng);
    const auto base = root_profile(rep, x);
    // Power-of-two scales make the rescaling exact in floating point.
    const RootScale pow2 = [](const RootLabel& l) { return std::ldexp(1.0, l.z - 2 * l.w); };
    const auto scaled = root_profile(rep, x, pow2);
    EXPECT_EQ(activity(scaled, 1.0), activity(base, 1.0));
    EXPECT_EQ(activity(scaled, 2.0), activity(base, 2.0));
    EXPECT_EQ(curvature(scaled), curvature(base));
    const RootScale generic = [](const RootLabel& l) { return 0.3 + l.z + 1.7 * l.w; };
    EXPECT_NEAR(activity(root_profile(rep, x, generic), 1.0), activity(base, 1.0), 1e-14);
}

TEST(functionals, norm_equivalence_su2) {
    const auto rep = Representation::defining(AlgebraId::su2());
    const auto ne = norm_equivalence_constants(rep, AlgebraId::su2(), 200);
    EXPECT_LE(ne.m1, ne.M1);
    EXPECT_LE(ne.M1 / ne.m1, std::sqrt(2.0));
    // Exhaustive grid over the root plane.
    for (int k = 0; k < 360; ++k) {
        const double phi = k * std::numbers::pi / 180;
        const auto y = su2_element(0.0, std::cos(phi), std::sin(phi));
        const double r = act_ratio(rep, y);
        EXPECT_GE(r, ne.m1 - 1e-12);
        EXPECT_LE(r, ne.M1 + 1e-12);
        EXPECT_NEAR(act_ratio(rep, AlgebraElement{y.algebra, 10.0 * y.mat}), r, 1e-14);
    }
}

TEST(functionals, norm_equivalence_su3_holdout) {
    const auto rep = Representation::defining(AlgebraId::sun(3));
    const auto ne = norm_equivalence_constants(rep, AlgebraId::sun(3), 500, 7);
    // Closed form for the defining rep: ratio in [sqrt 2, sqrt(2 * positive roots)].
    EXPECT_NEAR(ne.m1, std::sqrt(2.0), 1e-6);
    EXPECT_NEAR(ne.M1, std::sqrt(6.0), 1e-6);
    std::mt19937_64 rng(12345);
    for (int k = 0; k < 1000; ++k) {
        const double r = act_ratio(rep, random_element(AlgebraId::sun(3), rng));
        EXPECT_GE(r, ne.m1 - 1e-9);
        EXPECT_LE(r, ne.M1 + 1e-9);
    }
}

TEST(functionals, norm_equivalence_spin) {
    const auto rep = Representation::spin(HalfInt{2});
    const auto ne = norm_equivalence_constants(rep, AlgebraId::su2(), 50);
    EXPECT_NEAR(ne.m1, std::sqrt(2.0) * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(ne.M1, ne.m1, 1e-12);
}

TEST(functionals, enumeration_cap) {
    std::mt19937_64 rng(1);
    const auto x = random_element(AlgebraId::su2n(7), rng);
    EXPECT_THROW(root_profile(Representation::defining(AlgebraId::su2n(7)), x), SizeCapError);
}
