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

#include <random>

#include "oracles.hpp"
#include "rootsim/root_gates.hpp"

using namespace rootsim;

namespace {

const AlgebraElement kBench = su2_element(1.0, 0.7, 0.3);

CMat ih() {
    CMat h = CMat::Zero(2, 2);
    h(0, 0) = kI;
    h(1, 1) = -kI;
    return h;
}

/// Random circuit of root-plane and toral gates with |s| * ||Y|| <= s0.
template <class Rng>
Circuit random_circuit(const AlgebraId& a, int length, double s0, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> pick(0, a.dim() - 1);
    Circuit c{a, {}, s0};
    for (int k = 0; k < length; ++k) {
        if (pick(rng) == 0) {
            CMat h = CMat::Zero(a.dim(), a.dim());
            for (int i = 0; i < a.dim(); ++i) h(i, i) = kI * u(rng);
            h -= (h.trace() / static_cast<double>(a.dim())) * CMat::Identity(a.dim(), a.dim());
            h /= frobenius(h);
            c.gates.push_back(GateSpec::toral_gate(h, s0 * u(rng)));
        } else {
            int z = pick(rng), w = pick(rng);
            while (w == z) w = pick(rng);
            if (z > w) std::swap(z, w);
            c.gates.push_back(GateSpec::root_gate({z, w}, 1 + (k % 2), s0 * u(rng)));
        }
    }
    return c;
}

}  // namespace

TEST(root_gates, su2_gate_unitaries) {
    const auto rep = Representation::defining(AlgebraId::su2());
    const double s = 0.08;
    const CMat r = gate_unitary(rep, GateSpec::root_gate({0, 1}, 1, s), 0.1);
    const double a = s / std::numbers::sqrt2;
    CMat expected(2, 2);
    expected << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
    EXPECT_LT(op_norm(CMat(r - expected)), 1e-15);
    const CMat r2 = gate_unitary(rep, GateSpec::root_gate({0, 1}, 2, s), 0.1);
    expected << std::cos(a), kI * std::sin(a), kI * std::sin(a), std::cos(a);
    EXPECT_LT(op_norm(CMat(r2 - expected)), 1e-15);
    EXPECT_EQ(gate_unitary(rep, GateSpec::root_gate({0, 1}, 1, 0.0), 0.1), CMat::Identity(2, 2));
    const double theta = 0.05;
    const CMat t = gate_unitary(rep, GateSpec::toral_gate(ih(), theta), 0.1);
    EXPECT_NEAR(std::abs(t(0, 0) - std::exp(kI * theta)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t(1, 1) - std::exp(-kI * theta)), 0.0, 1e-15);
}

TEST(root_gates, generators_are_unit_norm) {
    for (int k : {1, 2}) EXPECT_NEAR(frobenius(gate_generator(AlgebraId::sun(3), GateSpec::root_gate({0, 2}, k, 1.0))), 1.0, 1e-15);
}

TEST(root_gates, gate_validation) {
    const auto rep = Representation::defining(AlgebraId::su2());
    EXPECT_THROW(gate_unitary(rep, GateSpec::root_gate({0, 1}, 1, 0.2), 0.1), InputError);
    EXPECT_THROW(gate_unitary(rep, GateSpec::root_gate({1, 0}, 1, 0.05), 0.1), InputError);
    EXPECT_THROW(gate_unitary(rep, GateSpec::root_gate({0, 1}, 3, 0.05), 0.1), InputError);
    CMat offdiag = CMat::Zero(2, 2);
    offdiag(0, 1) = 1.0;
    offdiag(1, 0) = -1.0;
    EXPECT_THROW(gate_unitary(rep, GateSpec::toral_gate(offdiag, 0.05), 0.1), InputError);
}

TEST(root_gates, circuit_identities) {
    std::mt19937_64 rng(91);
    const AlgebraId a = AlgebraId::sun(3);
    const auto rep = Representation::defining(a);
    EXPECT_EQ(circuit_unitary(rep, Circuit{a, {}, 0.1}), CMat::Identity(3, 3));
    Circuit c = random_circuit(a, 12, 0.1, rng);
    EXPECT_LT(unitarity_defect(circuit_unitary(rep, c)), 1e-12);
    Circuit both = c;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        GateSpec g = *it;
        g.s = -g.s;
        both.gates.push_back(g);
    }
    EXPECT_LT(op_norm(CMat(circuit_unitary(rep, both) - CMat::Identity(3, 3))), 1e-12);
    const Circuit single{a, {c.gates.front()}, 0.1};
    EXPECT_LT(op_norm(CMat(circuit_unitary(rep, single) - gate_unitary(rep, c.gates.front(), 0.1))), 1e-15);
}

TEST(root_gates, effective_generator_examples) {
    const AlgebraId a = AlgebraId::su2();
    const auto rep = Representation::defining(a);
    const GateSpec g = GateSpec::root_gate({0, 1}, 2, 0.07);
    const auto z = effective_generator(rep, Circuit{a, {g}, 0.1});
    EXPECT_LT(op_norm(CMat(z.mat - g.s * gate_generator(a, g))), 1e-14);
    const GateSpec t1 = GateSpec::toral_gate(ih(), 0.03), t2 = GateSpec::toral_gate(ih(), -0.05);
    const auto zz = effective_generator(rep, Circuit{a, {t1, t2}, 0.1});
    EXPECT_LT(op_norm(CMat(zz.mat - (-0.02) * ih())), 1e-14);
}

TEST(root_gates, branch_error_has_guidance) {
    const auto rep = Representation::defining(AlgebraId::su2());
    try {
        effective_generator(rep, CMat(-CMat::Identity(2, 2)));
        FAIL() << "expected a branch error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("shrink s0"), std::string::npos);
    }
}

TEST(root_gates, geometric_control) {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> len(1, 20);
    for (const AlgebraId a : {AlgebraId::su2(), AlgebraId::sun(3)}) {
        const auto rep = Representation::defining(a);
        const auto ne = norm_equivalence_constants(rep, a, 500);
        for (int trial = 0; trial < 100; ++trial) {
            const Circuit c = random_circuit(a, len(rng), 0.1, rng);
            const auto z = effective_generator(rep, c);
            ASSERT_LT(op_norm(z.mat), std::numbers::pi - 0.1);
            EXPECT_LE(frobenius(z.mat), total_gate_size(c) + 1e-9);
            EXPECT_LE(activity_seminorm(rep, z), ne.M1 * c.length() * c.s0 + 1e-8);
        }
    }
}

TEST(root_gates, log_stability) {
    const AlgebraId a = AlgebraId::su2();
    const auto rep = Representation::defining(a);
    const auto toral = su2_element(0.4, 0, 0);
    const auto d = decompose(toral);
    const Circuit exact = compile_su2_strang(d, 1.0, 1, 0.1);
    const auto ok = log_stability_check(rep, toral, 1.0, exact, 1e-3);
    EXPECT_LT(ok.eps, 1e-14);
    EXPECT_LT(ok.act_distance, 1e-14);
    EXPECT_TRUE(ok.in_regime);

    const auto lb = lower_bound(rep, a, 0.1, 1e-3, 400, 0);
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_element(a, rng);
        x.mat *= (0.1 + 1.3 * u(rng)) / op_norm(x.mat);
        auto delta = random_element(a, rng);
        delta.mat *= 1e-3 * (0.05 + 0.9 * u(rng)) / op_norm(delta.mat);
        const CMat w = expm_skew(x.mat) * expm_skew(delta.mat);
        const auto check = log_stability_check(rep, x, 1.0, w, 1e-3);
        EXPECT_TRUE(check.in_regime);
        EXPECT_LE(check.act_distance / check.eps, 1.05 * lb.c_rho);
    }
    const CMat far = expm_skew(kBench.mat) * expm_skew(CMat(0.1 * ih()));
    EXPECT_FALSE(log_stability_check(rep, kBench, 1.0, far, 1e-3).in_regime);
}

TEST(root_gates, lower_bound_constants) {
    const AlgebraId a = AlgebraId::su2();
    const auto rep = Representation::defining(a);
    const auto lb = lower_bound(rep, a, 0.1, 1e-3, 300, 5);
    EXPECT_DOUBLE_EQ(lb.c1, 1.0 / (lb.M1 * lb.s0));
    EXPECT_DOUBLE_EQ(lb.c2, lb.c_rho * lb.eps0 / (lb.M1 * lb.s0));
    EXPECT_EQ(lb.seed, 5u);
    EXPECT_EQ(lb.n_lower(0.0, 1.0), 0);
    const auto doubled = lower_bound(rep, a, 0.2, 1e-3, 300, 5);
    EXPECT_DOUBLE_EQ(doubled.c1, lb.c1 / 2.0);
    EXPECT_THROW(lower_bound(rep, a, 0.0, 1e-3, 10), InputError);
    EXPECT_THROW(lower_bound(rep, a, 0.1, 1e-3, 0), InputError);
}

TEST(root_gates, lower_bound_normalization_invariance) {
    const AlgebraId a = AlgebraId::sun(3);
    const auto rep = Representation::defining(a);
    const RootScale pow2 = [](const RootLabel& l) { return std::ldexp(1.0, 3 * l.z - l.w); };
    const auto base = lower_bound(rep, a, 0.1, 1e-3, 100, 2);
    const auto scaled = lower_bound(rep, a, 0.1, 1e-3, 100, 2, pow2);
    EXPECT_EQ(base.c1, scaled.c1);
    EXPECT_EQ(base.c2, scaled.c2);
}

TEST(root_gates, strang_compilation_reproduces_splitting) {
    const auto rep = Representation::defining(AlgebraId::su2());
    const auto d = decompose(kBench);
    for (int r : {1, 3, 10}) {
        const Circuit c = compile_su2_strang(d, 1.0, r, 0.1);
        for (const auto& g : c.gates) EXPECT_LE(gate_size(c.algebra, g), 0.1 * (1 + 1e-12));
        EXPECT_LT(op_norm(CMat(circuit_unitary(rep, c) - composed_evolution(rep, d, 1.0, r))), 1e-12);
    }
}

TEST(root_gates, compiled_circuits_respect_lower_bound) {
    const AlgebraId a = AlgebraId::su2();
    const auto rep = Representation::defining(a);
    const auto lb = lower_bound(rep, a, 0.1, 1e-3, 400, 0);
    const double t = 1.0;
    const CMat target = exact_evolution(rep, kBench, t);
    const auto d = decompose(kBench);
    const auto n_lower = lb.n_lower(activity_seminorm(rep, kBench), t);
    EXPECT_GT(n_lower, 0);
    for (int r = 1; r <= 40; ++r) {
        const Circuit c = compile_su2_strang(d, t, r, 0.1);
        if (op_norm(CMat(circuit_unitary(rep, c) - target)) <= lb.eps0) {
            EXPECT_GE(static_cast<long long>(c.length()), n_lower) << "r=" << r;
        }
    }
}

TEST(root_gates, degenerate_sampling_fails) {
    const auto trivial = Representation::spin(HalfInt{0});
    EXPECT_THROW(lower_bound(trivial, AlgebraId::su2(), 0.1, 1e-3, 20), EstimationError);
}
