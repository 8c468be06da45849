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

// Spin-chain Hamiltonians on n qubits as Pauli sums, their dense su(2^n)
// generators X = -iH, and the grouped flip-pattern root profile.
//
// Site j (1-based) is the j-th tensor factor from the left, i.e. bit (n - j)
// of the computational-basis index.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rootsim/fit.hpp"
#include "rootsim/functionals.hpp"

namespace rootsim {

struct PauliTerm {
    double coeff = 0.0;
    std::string ops;  // one of I, X, Y, Z per site
};

struct TransverseIsing {
    std::vector<double> J;  // n - 1 bond couplings
    std::vector<double> h;  // n transverse fields
};

struct SparseField {
    std::vector<double> J;       // n - 1 bond couplings
    std::map<int, double> h;     // site (1-based) -> field, keys form the support S
};

struct HeisenbergXXX {
    double J = 1.0;
};

using ChainModel = std::variant<TransverseIsing, SparseField, HeisenbergXXX>;

struct ChainSpec {
    int n = 1;
    ChainModel model;
};

inline void validate(const ChainSpec& spec) {
    if (spec.n < 1) throw InputError("chain needs n >= 1");
    const auto bonds = static_cast<std::size_t>(spec.n - 1);
    if (const auto* m = std::get_if<TransverseIsing>(&spec.model)) {
        if (m->J.size() != bonds) throw InputError("tfim: J must have n - 1 entries");
        if (m->h.size() != static_cast<std::size_t>(spec.n)) throw InputError("tfim: h must have n entries");
    } else if (const auto* m = std::get_if<SparseField>(&spec.model)) {
        if (m->J.size() != bonds) throw InputError("sparse: J must have n - 1 entries");
        for (const auto& [site, field] : m->h)
            if (site < 1 || site > spec.n) throw InputError("sparse: support site out of range");
    }
}

inline void validate(const PauliTerm& term, int n) {
    if (static_cast<int>(term.ops.size()) != n) throw InputError("Pauli string length must equal n");
    if (!std::isfinite(term.coeff)) throw InputError("Pauli coefficient must be finite");
    bool identity = true;
    for (char c : term.ops) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') throw InputError("Pauli string may only contain I, X, Y, Z");
        identity = identity && c == 'I';
    }
    if (identity && term.coeff != 0.0) throw InputError("all-identity term is not traceless");
}

namespace detail {

inline std::string pauli_on(int n, std::initializer_list<std::pair<int, char>> sites) {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (const auto& [site, op] : sites) s[static_cast<std::size_t>(site - 1)] = op;
    return s;
}

}  // namespace detail

/// H = sum_j J_j Z_j Z_{j+1} + sum_j h_j X_j (open boundary), or the XXX chain
/// sum_j J (X_j X_{j+1} + Y_j Y_{j+1} + Z_j Z_{j+1}). Zero coefficients are dropped.
inline std::vector<PauliTerm> build_hamiltonian(const ChainSpec& spec) {
    validate(spec);
    const int n = spec.n;
    std::vector<PauliTerm> terms;
    auto add = [&](double c, std::string ops) {
        if (c != 0.0) terms.push_back({c, std::move(ops)});
    };
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, HeisenbergXXX>) {
                for (int j = 1; j < n; ++j) {
                    add(m.J, detail::pauli_on(n, {{j, 'X'}, {j + 1, 'X'}}));
                    add(m.J, detail::pauli_on(n, {{j, 'Y'}, {j + 1, 'Y'}}));
                    add(m.J, detail::pauli_on(n, {{j, 'Z'}, {j + 1, 'Z'}}));
                }
            } else {
                for (int j = 1; j < n; ++j) add(m.J[static_cast<std::size_t>(j - 1)], detail::pauli_on(n, {{j, 'Z'}, {j + 1, 'Z'}}));
                if constexpr (std::is_same_v<M, TransverseIsing>) {
                    for (int j = 1; j <= n; ++j) add(m.h[static_cast<std::size_t>(j - 1)], detail::pauli_on(n, {{j, 'X'}}));
                } else {
                    for (const auto& [site, field] : m.h) add(field, detail::pauli_on(n, {{site, 'X'}}));
                }
            }
        },
        spec.model);
    return terms;
}

/// Flip mask, phase mask (Z or Y) and Y count of a Pauli string, as bitmasks
/// over the basis index (site j -> bit n - j).
struct PauliMasks {
    std::uint64_t flip = 0;
    std::uint64_t phase = 0;
    int y_count = 0;
};

inline PauliMasks pauli_masks(const std::string& ops) {
    PauliMasks m;
    const int n = static_cast<int>(ops.size());
    if (n > 63) throw SizeCapError("Pauli strings longer than 63 sites are not supported");
    for (int j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
        switch (ops[static_cast<std::size_t>(j)]) {
            case 'X': m.flip |= bit; break;
            case 'Y': m.flip |= bit; m.phase |= bit; ++m.y_count; break;
            case 'Z': m.phase |= bit; break;
            default: break;
        }
    }
    return m;
}

/// Dense Pauli-sum operator sum_k c_k P_k on n qubits. P|z> = phase |z xor flip>
/// with phase = i^{#Y} (-1)^{popcount(z & phase_mask)}.
inline CMat pauli_sum_matrix(const std::vector<PauliTerm>& terms, int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    CMat m = CMat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    static const cplx ipow[4] = {1.0, kI, -1.0, -kI};
    for (const auto& t : terms) {
        validate(t, n);
        const PauliMasks pm = pauli_masks(t.ops);
        for (std::uint64_t z = 0; z < dim; ++z) {
            const int sign = std::popcount(z & pm.phase) & 1;
            const cplx phase = ipow[pm.y_count % 4] * (sign ? -1.0 : 1.0);
            m(static_cast<Eigen::Index>(z ^ pm.flip), static_cast<Eigen::Index>(z)) += t.coeff * phase;
        }
    }
    return m;
}

/// Dense generator X = -i sum_k c_k P_k in su(2^n).
inline AlgebraElement to_algebra_element(const std::vector<PauliTerm>& terms, int n, int cap = kMaxQubits) {
    if (n < 1) throw InputError("chain needs n >= 1");
    if (n > cap)
        throw SizeCapError("dense construction limited to " + std::to_string(cap) +
                           " qubits; use the grouped profile for larger chains");
    return {AlgebraId::su2n(n), CMat(-kI * pauli_sum_matrix(terms, n))};
}

struct GroupedEntry {
    std::vector<int> flip_sites;  // 1-based flipped sites; the flip pattern
    double abs_x = 0.0;
    double op_norm_E = 1.0;
    double alpha_bound = 0.0;

    std::string pattern(int n) const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int j : flip_sites) s[static_cast<std::size_t>(j - 1)] = '1';
        return s;
    }
};

struct GroupedRootProfile {
    int n = 0;
    std::vector<GroupedEntry> entries;
};

namespace detail {

inline constexpr int kLocalSupportCap = 20;

/// Sites (1-based) on which a Pauli string acts non-trivially.
inline std::vector<int> support(const std::string& ops) {
    std::vector<int> s;
    for (std::size_t j = 0; j < ops.size(); ++j)
        if (ops[j] != 'I') s.push_back(static_cast<int>(j) + 1);
    return s;
}

/// Restriction of a Pauli string to the listed sites.
inline std::string restrict_to(const std::string& ops, const std::vector<int>& sites) {
    std::string out;
    for (int j : sites) out.push_back(ops[static_cast<std::size_t>(j - 1)]);
    return out;
}

}  // namespace detail

/// One entry per distinct flip pattern among the off-diagonal terms.
///
/// abs_x is the operator norm of the summed off-diagonal terms sharing the
/// pattern (computed on their joint support), op_norm_E = 1, and alpha_bound
/// is max_z |d_z - d_{z xor f}| for the diagonal part d of H.
inline GroupedRootProfile grouped_profile(const std::vector<PauliTerm>& terms, int n) {
    if (n < 1) throw InputError("chain needs n >= 1");
    std::map<std::vector<int>, std::vector<const PauliTerm*>> groups;
    std::vector<const PauliTerm*> diagonal;
    for (const auto& t : terms) {
        validate(t, n);
        std::vector<int> flips;
        for (int j = 0; j < n; ++j) {
            const char c = t.ops[static_cast<std::size_t>(j)];
            if (c == 'X' || c == 'Y') flips.push_back(j + 1);
        }
        if (flips.empty()) {
            if (t.coeff != 0.0) diagonal.push_back(&t);
        } else if (t.coeff != 0.0) {
            groups[flips].push_back(&t);
        }
    }

    GroupedRootProfile out{n, {}};
    for (const auto& [flips, members] : groups) {
        std::set<int> joint;
        for (const auto* t : members)
            for (int j : detail::support(t->ops)) joint.insert(j);
        const std::vector<int> sites(joint.begin(), joint.end());
        if (static_cast<int>(sites.size()) > detail::kLocalSupportCap)
            throw SizeCapError("grouped profile: term support too large");
        std::vector<PauliTerm> local;
        for (const auto* t : members) local.push_back({t->coeff, detail::restrict_to(t->ops, sites)});
        const double abs_x = op_norm(pauli_sum_matrix(local, static_cast<int>(sites.size())));
        if (abs_x == 0.0) continue;

        // d_z - d_{z xor f} = 2 sum_{m : |m & f| odd} c_m (-1)^{|z & m|}; maximize over
        // the bits touched by those diagonal terms.
        std::set<int> flip_set(flips.begin(), flips.end());
        std::vector<std::pair<double, std::vector<int>>> relevant;
        std::set<int> touched;
        for (const auto* t : diagonal) {
            const auto sup = detail::support(t->ops);
            int overlap = 0;
            for (int j : sup) overlap += flip_set.count(j) ? 1 : 0;
            if (overlap % 2 == 1) {
                relevant.emplace_back(t->coeff, sup);
                touched.insert(sup.begin(), sup.end());
            }
        }
        if (static_cast<int>(touched.size()) > detail::kLocalSupportCap)
            throw SizeCapError("grouped profile: diagonal coupling support too large");
        const std::vector<int> tsites(touched.begin(), touched.end());
        double best = 0.0;
        if (!relevant.empty()) {
            std::vector<std::uint64_t> masks;
            for (const auto& [c, sup] : relevant) {
                std::uint64_t m = 0;
                for (int j : sup) {
                    const auto pos = std::lower_bound(tsites.begin(), tsites.end(), j) - tsites.begin();
                    m |= std::uint64_t{1} << pos;
                }
                masks.push_back(m);
            }
            const std::uint64_t states = std::uint64_t{1} << tsites.size();
            for (std::uint64_t z = 0; z < states; ++z) {
                double acc = 0.0;
                for (std::size_t k = 0; k < masks.size(); ++k)
                    acc += (std::popcount(z & masks[k]) & 1 ? -1.0 : 1.0) * relevant[k].first;
                best = std::max(best, std::abs(2.0 * acc));
            }
        }
        out.entries.push_back({flips, abs_x, 1.0, best});
    }
    return out;
}

inline GroupedRootProfile grouped_profile(const ChainSpec& spec) {
    return grouped_profile(build_hamiltonian(spec), spec.n);
}

inline FunctionalReport grouped_report(const GroupedRootProfile& g, std::span<const double> extra_p = {}) {
    std::vector<double> act, curv;
    double m = 0.0;
    for (const auto& e : g.entries) {
        act.push_back(e.abs_x * e.op_norm_E);
        curv.push_back(e.alpha_bound * e.abs_x * e.op_norm_E);
        m = std::max(m, e.alpha_bound);
    }
    return make_report(act, curv, m, static_cast<long long>(g.entries.size()), "grouped", extra_p);
}

struct ScalingRow {
    int n = 0;
    double a1 = 0.0;
    double a2 = 0.0;
    double c = 0.0;
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    std::optional<double> exponent_a1, exponent_a2, exponent_c;
};

/// Grouped-convention A_1, A_2 and C along a family of chains, with log-log
/// exponents against n (undefined when a column has non-positive entries).
inline ScalingTable scaling_study(const std::function<ChainSpec(int)>& family, const std::vector<int>& n_values) {
    ScalingTable table;
    for (int n : n_values) {
        const auto rep = grouped_report(grouped_profile(family(n)));
        table.rows.push_back({n, rep.a(1.0), rep.a(2.0), rep.curvature});
    }
    auto exponent = [&](auto column) -> std::optional<double> {
        std::vector<double> xs, ys;
        for (const auto& r : table.rows) {
            const double v = column(r);
            if (!(v > 0.0)) return std::nullopt;
            xs.push_back(r.n);
            ys.push_back(v);
        }
        return loglog_slope(xs, ys);
    };
    table.exponent_a1 = exponent([](const ScalingRow& r) { return r.a1; });
    table.exponent_a2 = exponent([](const ScalingRow& r) { return r.a2; });
    table.exponent_c = exponent([](const ScalingRow& r) { return r.c; });
    return table;
}

/// Model family with constant per-site parameters.
struct UniformFamily {
    enum class Kind { Tfim, Xxx, Sparse } kind = Kind::Tfim;
    double J = 1.0;
    double h = 1.0;
    std::vector<int> support;  // sparse model only, 1-based

    ChainSpec operator()(int n) const {
        const auto bonds = static_cast<std::size_t>(std::max(0, n - 1));
        switch (kind) {
            case Kind::Tfim:
                return {n, TransverseIsing{std::vector<double>(bonds, J), std::vector<double>(static_cast<std::size_t>(n), h)}};
            case Kind::Xxx:
                return {n, HeisenbergXXX{J}};
            case Kind::Sparse: {
                SparseField m{std::vector<double>(bonds, J), {}};
                for (int s : support) m.h[s] = h;
                return {n, m};
            }
        }
        throw InputError("unknown model family");
    }
};

struct ConventionCrossCheck {
    int n = 0;
    FunctionalReport matrix_unit;
    FunctionalReport grouped;
    bool pure_transverse = false;     // every off-diagonal term is a single-site X
    double a2_ratio = 0.0;            // A_2(matrix-unit) / A_2(grouped)
    double expected_a2_ratio = 0.0;   // 2^{n/2} for pure transverse-field chains
    double commutator_norm = 0.0;     // ||[A, B]||_op, same matrix for both conventions
    double bound_matrix_unit = 0.0;   // sqrt(active) * C, matrix-unit roots
    double bound_grouped = 0.0;       // sqrt(groups) * C, grouped roots
    bool inequality_matrix_unit = false;
    bool inequality_grouped = false;
};

inline ConventionCrossCheck cross_check_conventions(const std::vector<PauliTerm>& terms, int n) {
    if (n > 6) throw SizeCapError("convention cross-check limited to n <= 6");
    ConventionCrossCheck r;
    r.n = n;
    const AlgebraElement x = to_algebra_element(terms, n);
    const auto rep = Representation::defining(x.algebra);
    const auto d = decompose(x);
    r.matrix_unit = functional_report(root_profile(rep, d));
    const auto g = grouped_profile(terms, n);
    r.grouped = grouped_report(g);

    r.pure_transverse = true;
    for (const auto& t : terms) {
        const auto m = pauli_masks(t.ops);
        if (m.flip != 0 && (m.y_count != 0 || std::popcount(m.flip) != 1 || m.phase != 0)) r.pure_transverse = false;
    }
    r.a2_ratio = r.grouped.a(2.0) > 0.0 ? r.matrix_unit.a(2.0) / r.grouped.a(2.0) : 0.0;
    r.expected_a2_ratio = std::pow(2.0, n / 2.0);

    r.commutator_norm = op_norm(commutator(d.x0, d.root_part()));
    r.bound_matrix_unit = r.matrix_unit.c_struct * r.matrix_unit.curvature;
    r.bound_grouped = r.grouped.c_struct * r.grouped.curvature;
    const double slack = 1e-10 * std::max(1.0, r.commutator_norm);
    r.inequality_matrix_unit = r.commutator_norm <= r.bound_matrix_unit + slack;
    r.inequality_grouped = r.commutator_norm <= r.bound_grouped + slack;
    return r;
}

inline ConventionCrossCheck cross_check_conventions(const ChainSpec& spec) {
    return cross_check_conventions(build_hamiltonian(spec), spec.n);
}

}  // namespace rootsim
