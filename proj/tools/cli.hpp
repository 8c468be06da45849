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

// Command-line front end. Exit codes: 0 success, 1 requested check failed,
// 2 input error, 3 size cap, 4 estimation failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootsim/rootsim.hpp"

namespace rootsim::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kSizeCap = 3;
inline constexpr int kEstimationFailure = 4;

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string csv;
    std::string circuit;
    std::string rep = "defining";
    std::string convention = "matrix-unit";
    double t_max = 0.0625;
    int points = 7;
    double ratio = 0.5;
    std::string scheme = "strang";
    int steps = 1;
    std::optional<double> eps;
    double time = 1.0;
    double s0 = 0.1;
    double eps0 = 1e-3;
    unsigned long long seed = 0;
    int samples = 400;
    std::string order_window;
    std::string n_values = "2-10";
    std::vector<double> extra_p;
};

namespace detail {

inline HalfInt parse_half_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            const int num = std::stoi(s.substr(0, slash), &pos);
            if (pos != slash || s.substr(slash + 1) != "2") throw InputError("");
            return HalfInt{num};
        }
        const double v = std::stod(s, &pos);
        if (pos != s.size() || v * 2.0 != std::floor(v * 2.0)) throw InputError("");
        return HalfInt{static_cast<int>(v * 2.0)};
    } catch (const std::exception&) {
        throw InputError("spin must be a half-integer such as 1, 3/2 or 1.5; got '" + s + "'");
    }
}

inline Representation parse_rep(const std::string& s, const AlgebraId& algebra) {
    if (s == "defining") return Representation::defining(algebra);
    if (s == "tensor-trivial") return Representation::tensor_trivial(Representation::defining(algebra));
    if (s.rfind("spin-j=", 0) == 0) {
        if (!(algebra == AlgebraId::su2())) throw InputError("spin-j representations require an su(2) input");
        return Representation::spin(parse_half_int(s.substr(7)));
    }
    throw InputError("unknown representation '" + s + "' (defining, spin-j=J, tensor-trivial)");
}

inline std::vector<int> parse_n_values(const std::string& s) {
    std::vector<int> out;
    try {
        if (const auto dash = s.find('-'); dash != std::string::npos && s.find(',') == std::string::npos) {
            const int lo = std::stoi(s.substr(0, dash)), hi = std::stoi(s.substr(dash + 1));
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        }
    } catch (const std::exception&) {
        throw InputError("--n-values must look like 2-10 or 2,4,8");
    }
    if (out.size() < 2) throw InputError("--n-values needs at least two chain lengths");
    for (int n : out)
        if (n < 1) throw InputError("chain lengths must be >= 1");
    return out;
}

inline std::pair<double, double> parse_window(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) throw InputError("");
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError("--order-window must look like 2.9,3.1");
    }
}

inline double uniform_value(const std::vector<double>& v, const char* what) {
    if (v.empty()) return 0.0;
    for (double x : v)
        if (x != v.front()) throw InputError(std::string("chain-scaling needs a constant ") + what + " across sites");
    return v.front();
}

/// Constant-parameter family matching a parsed chain spec.
inline UniformFamily family_of(const ChainSpec& spec) {
    UniformFamily f;
    if (const auto* m = std::get_if<TransverseIsing>(&spec.model)) {
        f.kind = UniformFamily::Kind::Tfim;
        f.J = m->J.empty() ? 1.0 : uniform_value(m->J, "J");
        f.h = uniform_value(m->h, "h");
    } else if (const auto* m = std::get_if<HeisenbergXXX>(&spec.model)) {
        f.kind = UniformFamily::Kind::Xxx;
        f.J = m->J;
    } else {
        const auto& s = std::get<SparseField>(spec.model);
        f.kind = UniformFamily::Kind::Sparse;
        f.J = s.J.empty() ? 1.0 : uniform_value(s.J, "J");
        std::vector<double> h;
        for (const auto& [site, field] : s.h) {
            f.support.push_back(site);
            h.push_back(field);
        }
        f.h = h.empty() ? 0.0 : uniform_value(h, "h");
    }
    return f;
}

inline void emit(const RunConfig& cfg, const io::Json& j, std::ostream& out) {
    const std::string text = io::dump(j);
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
    } else {
        io::write_atomic(cfg.output, text);
    }
}

inline io::Json header(const RunConfig& cfg) {
    io::Json j;
    j["command"] = cfg.command;
    return j;
}

}  // namespace detail

inline int cmd_decompose(const RunConfig& cfg, const io::Input& in, std::ostream& out) {
    const AlgebraElement x = io::to_element(in);
    const auto d = decompose(x);
    const double residual = op_norm(CMat(d.reconstruct() - x.mat));
    io::Json j = detail::header(cfg);
    j.update(io::to_json(d, residual));
    detail::emit(cfg, j, out);
    return kOk;
}

inline int cmd_functionals(const RunConfig& cfg, const io::Input& in, std::ostream& out) {
    const std::string& conv = cfg.convention;
    if (conv != "matrix-unit" && conv != "grouped" && conv != "both")
        throw InputError("--convention must be matrix-unit, grouped or both");
    const bool want_mu = conv != "grouped", want_grouped = conv != "matrix-unit";
    io::Json j = detail::header(cfg);
    io::Json blocks = io::Json::array();
    if (want_mu) {
        const AlgebraElement x = io::to_element(in);
        const Representation rep = detail::parse_rep(cfg.rep, x.algebra);
        j["algebra"] = x.algebra.name();
        j["representation"] = rep.name();
        blocks.push_back(io::to_json(functional_report(root_profile(rep, x), cfg.extra_p)));
    }
    if (want_grouped) {
        if (std::holds_alternative<AlgebraElement>(in))
            throw InputError("the grouped convention needs a Pauli-sum or chain input");
        if (cfg.rep != "defining") throw InputError("the grouped convention is defined for the defining representation");
        const int n = io::qubits(in);
        if (!j.contains("algebra")) {
            j["algebra"] = "su(2^" + std::to_string(n) + ")";
            j["representation"] = "defining";
        }
        blocks.push_back(io::to_json(grouped_report(grouped_profile(io::pauli_terms(in), n), cfg.extra_p)));
    }
    j["blocks"] = blocks;
    detail::emit(cfg, j, out);
    return kOk;
}

inline int cmd_split_error(const RunConfig& cfg, const io::Input& in, std::ostream& out) {
    Scheme scheme;
    if (cfg.scheme == "strang") scheme = Scheme::Strang;
    else if (cfg.scheme == "trotter1") scheme = Scheme::Trotter1;
    else throw InputError("--scheme must be strang or trotter1");
    std::optional<std::pair<double, double>> window;
    if (!cfg.order_window.empty()) window = detail::parse_window(cfg.order_window);

    const AlgebraElement x = io::to_element(in);
    const Representation rep = detail::parse_rep(cfg.rep, x.algebra);
    const auto times = geometric_grid(cfg.t_max, cfg.points, cfg.ratio);
    const SplitErrorReport r = error_sweep(rep, x, times, scheme, cfg.steps);

    io::Json j = detail::header(cfg);
    j["algebra"] = x.algebra.name();
    j["representation"] = rep.name();
    j.update(io::to_json(r));
    if (cfg.eps) {
        j["target"] = {{"t", cfg.time},
                       {"eps", *cfg.eps},
                       {"required_steps", required_steps(r.curvature + r.activity1, cfg.time, *cfg.eps, r.c_hat)}};
    }
    int code = kOk;
    if (window) {
        const bool inside = !r.fitted_order || (*r.fitted_order >= window->first && *r.fitted_order <= window->second);
        j["order_window"] = {window->first, window->second};
        j["order_within_window"] = r.fitted_order ? io::Json(inside) : io::Json(nullptr);
        if (!inside) code = kCheckFailed;
    }
    if (!cfg.csv.empty()) io::write_atomic(cfg.csv, io::to_csv(r));
    detail::emit(cfg, j, out);
    return code;
}

inline int cmd_chain_scaling(const RunConfig& cfg, const io::Input& in, std::ostream& out) {
    const auto* spec = std::get_if<ChainSpec>(&in);
    if (!spec) throw InputError("chain-scaling needs a chain shorthand input ({\"model\": ...})");
    const UniformFamily family = detail::family_of(*spec);
    const auto ns = detail::parse_n_values(cfg.n_values);
    for (int s : family.support)
        for (int n : ns)
            if (s > n) throw InputError("support site " + std::to_string(s) + " exceeds chain length " + std::to_string(n));
    const ScalingTable table = scaling_study(family, ns);

    io::Json j = detail::header(cfg);
    j["convention"] = "grouped";
    j.update(io::to_json(table));
    if (!cfg.csv.empty()) io::write_atomic(cfg.csv, io::to_csv(table));
    detail::emit(cfg, j, out);
    return kOk;
}

inline int cmd_lower_bound(const RunConfig& cfg, const io::Input& in, std::ostream& out) {
    const AlgebraElement x = io::to_element(in);
    const Representation rep = detail::parse_rep(cfg.rep, x.algebra);
    const LowerBoundReport lb = lower_bound(rep, x.algebra, cfg.s0, cfg.eps0, cfg.samples, cfg.seed);
    const double act = activity_seminorm(rep, x);

    io::Json j = detail::header(cfg);
    j["algebra"] = x.algebra.name();
    j["representation"] = rep.name();
    j.update(io::to_json(lb));
    j["t"] = cfg.time;
    j["act_seminorm"] = act;
    j["n_lower"] = lb.n_lower(act, cfg.time);

    // Reference circuit: fewest Strang steps whose root-gate circuit is eps0-accurate.
    if (x.algebra == AlgebraId::su2() && rep.kind() == RepKind::Defining) {
        const auto d = decompose(x);
        const CMat target = exact_evolution(rep, x, cfg.time);
        auto error_at = [&](int r) {
            return op_norm(CMat(circuit_unitary(rep, compile_su2_strang(d, cfg.time, r, cfg.s0)) - target));
        };
        int hi = 1;
        while (error_at(hi) > cfg.eps0) {
            if (hi > (1 << 20)) throw EstimationError("reference circuit did not reach eps0");
            hi *= 2;
        }
        int lo = hi / 2;  // error_at(lo) > eps0 unless lo == 0
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            (error_at(mid) <= cfg.eps0 ? hi : lo) = mid;
        }
        const Circuit c = compile_su2_strang(d, cfg.time, hi, cfg.s0);
        j["reference_circuit"] = {{"scheme", "strang"},
                                  {"steps", hi},
                                  {"length", c.length()},
                                  {"error", error_at(hi)},
                                  {"total_size", total_gate_size(c)}};
        if (!cfg.circuit.empty()) io::write_atomic(cfg.circuit, io::dump(io::to_json(c)));
    } else if (!cfg.circuit.empty()) {
        throw InputError("--circuit is only available for su(2) in the defining representation");
    }
    detail::emit(cfg, j, out);
    return kOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input.empty()) throw InputError("--input is required");
    const io::Input in = io::parse_input(io::read_json_file(cfg.input));
    if (cfg.command == "decompose") return cmd_decompose(cfg, in, out);
    if (cfg.command == "functionals") return cmd_functionals(cfg, in, out);
    if (cfg.command == "split-error") return cmd_split_error(cfg, in, out);
    if (cfg.command == "chain-scaling") return cmd_chain_scaling(cfg, in, out);
    if (cfg.command == "lower-bound") return cmd_lower_bound(cfg, in, out);
    throw InputError("unknown command " + cfg.command);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Torus-root decomposition, root functionals, splitting error and root-gate bounds"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "Input JSON (Hamiltonian, chain shorthand or element)")->required();
        sub->add_option("--output,-o", cfg.output, "Output JSON path (stdout if omitted)");
        sub->add_option("--rep", cfg.rep, "Representation: defining | spin-j=J | tensor-trivial");
    };
    auto* decompose_cmd = app.add_subcommand("decompose", "Toral part and root coefficients");
    common(decompose_cmd);

    auto* functionals_cmd = app.add_subcommand("functionals", "Root activity and curvature");
    common(functionals_cmd);
    functionals_cmd->add_option("--convention", cfg.convention, "matrix-unit | grouped | both");
    functionals_cmd->add_option("--p", cfg.extra_p, "Additional activity orders p >= 1");

    auto* split_cmd = app.add_subcommand("split-error", "Splitting error sweep on a geometric time grid");
    common(split_cmd);
    split_cmd->add_option("--t-max", cfg.t_max, "Largest time in the sweep");
    split_cmd->add_option("--points", cfg.points, "Number of grid points (>= 4)");
    split_cmd->add_option("--ratio", cfg.ratio, "Geometric ratio between successive times");
    split_cmd->add_option("--scheme", cfg.scheme, "strang | trotter1");
    split_cmd->add_option("--steps", cfg.steps, "Sub-steps per time point");
    split_cmd->add_option("--eps", cfg.eps, "Target accuracy for the required-steps estimate");
    split_cmd->add_option("--time", cfg.time, "Evolution time for the required-steps estimate");
    split_cmd->add_option("--order-window", cfg.order_window, "lo,hi; exit 1 if the fitted order falls outside");
    split_cmd->add_option("--csv", cfg.csv, "CSV table path (t, error, bound_rhs, ratio)");

    auto* scaling_cmd = app.add_subcommand("chain-scaling", "Grouped A1, A2, C versus chain length");
    common(scaling_cmd);
    scaling_cmd->add_option("--n-values", cfg.n_values, "Chain lengths, e.g. 2-10 or 2,4,8");
    scaling_cmd->add_option("--convention", cfg.convention, "grouped (the only convention without a size cap)");
    scaling_cmd->add_option("--csv", cfg.csv, "CSV table path (n, A1, A2, C)");

    auto* lb_cmd = app.add_subcommand("lower-bound", "Root-gate lower-bound constants");
    common(lb_cmd);
    lb_cmd->add_option("--s0", cfg.s0, "Gate step cap");
    lb_cmd->add_option("--eps0", cfg.eps0, "Accuracy threshold");
    lb_cmd->add_option("--seed", cfg.seed, "Sampling seed");
    lb_cmd->add_option("--samples", cfg.samples, "Sampling budget for m1, M1 and c_rho");
    lb_cmd->add_option("--time", cfg.time, "Evolution time t");
    lb_cmd->add_option("--circuit", cfg.circuit, "Write the reference circuit as a JSON array");
    for (auto* sub : {decompose_cmd, functionals_cmd, split_cmd, scaling_cmd})
        sub->add_option("--seed", cfg.seed, "Seed (accepted for uniformity; these commands are deterministic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "chain-scaling" && cfg.convention != "grouped" && cfg.convention != "matrix-unit")
        return err << "error: --convention must be grouped for chain-scaling\n", kInputError;

    try {
        return dispatch(cfg, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const SizeCapError& e) {
        err << "size cap: " << e.what() << "\n";
        return kSizeCap;
    } catch (const EstimationError& e) {
        err << "estimation failure: " << e.what() << "\n";
        return kEstimationFailure;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kEstimationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace rootsim::cli
