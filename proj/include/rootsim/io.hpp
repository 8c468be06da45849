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

// JSON/CSV input and output. Reports are built as ordered JSON documents and
// written with every float at 17 significant digits.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "rootsim/root_gates.hpp"
#include "rootsim/spin_chain.hpp"

namespace rootsim::io {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // Keep floats recognizable as floats after a round trip.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

namespace detail {

inline void dump(const Json& j, std::string& out, int indent, int depth) {
    const auto newline = [&](int d) {
        out.push_back('\n');
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out.push_back('{');
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                dump(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out.push_back('}');
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Flat numeric arrays stay on one line.
            bool flat = true;
            for (const auto& e : j) flat = flat && (e.is_number() || e.is_null());
            out.push_back('[');
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                dump(e, out, indent, depth + 1);
            }
            if (!flat) newline(depth);
            out.push_back(']');
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace detail

inline std::string dump(const Json& j, int indent = 2) {
    std::string out;
    detail::dump(j, out, indent, 0);
    out.push_back('\n');
    return out;
}

/// Writes via a sibling temporary file and rename, so readers never see a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f.flush()) throw Error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot rename output into place: " + ec.message());
    }
}

inline Json read_json_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read input file " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- input

struct Hamiltonian {
    int n = 0;
    std::vector<PauliTerm> terms;
};

/// A parsed input document: a Pauli-sum Hamiltonian, a chain shorthand, or a
/// raw algebra element.
using Input = std::variant<Hamiltonian, ChainSpec, AlgebraElement>;

namespace detail {

inline double number(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
    return v;
}

inline int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

/// Scalar or list of numbers.
inline std::vector<double> numbers(const Json& j, const char* what) {
    std::vector<double> v;
    if (j.is_array()) {
        for (const auto& e : j) v.push_back(number(e, what));
    } else {
        v.push_back(number(j, what));
    }
    return v;
}

/// A scalar (or length-1 list) broadcast to `count`, or a list of exactly `count`.
inline std::vector<double> broadcast(const Json& j, std::size_t count, const char* what) {
    auto v = numbers(j, what);
    if (v.size() == 1 && count != 1) return std::vector<double>(count, v.front());
    if (v.size() != count) throw InputError(std::string(what) + " has the wrong length for n");
    return v;
}

inline CMat real_matrix(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    CMat m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
            throw InputError(std::string(what) + " must be square");
        for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], what);
    }
    return m;
}

inline AlgebraId parse_algebra(const std::string& s, int dim) {
    if (s == "su2" || s == "su(2)") return AlgebraId::su2();
    if (s == "su(N)" || s == "suN" || s == "su(n)") return AlgebraId::sun(dim);
    if (s == "su(2^n)" || s == "su2n") {
        int q = 0;
        while ((1 << q) < dim) ++q;
        if ((1 << q) != dim) throw InputError("su(2^n) element must have power-of-two dimension");
        return AlgebraId::su2n(q);
    }
    throw InputError("unknown algebra '" + s + "'");
}

}  // namespace detail

inline Hamiltonian parse_hamiltonian(const Json& j) {
    Hamiltonian h;
    h.n = detail::integer(j.at("n"), "n");
    if (h.n < 1) throw InputError("n must be >= 1");
    if (!j.at("terms").is_array()) throw InputError("terms must be an array");
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("ops"))
            throw InputError("each term needs coeff and ops");
        if (!t.at("ops").is_string()) throw InputError("ops must be a string");
        PauliTerm term{detail::number(t.at("coeff"), "coeff"), t.at("ops").get<std::string>()};
        validate(term, h.n);
        h.terms.push_back(std::move(term));
    }
    return h;
}

inline ChainSpec parse_chain_spec(const Json& j) {
    const std::string model = j.at("model").get<std::string>();
    const int n = detail::integer(j.at("n"), "n");
    if (n < 1) throw InputError("n must be >= 1");
    const auto bonds = static_cast<std::size_t>(n - 1);
    ChainSpec spec{n, HeisenbergXXX{}};
    if (model == "tfim") {
        TransverseIsing m;
        m.J = j.contains("J") ? detail::broadcast(j.at("J"), bonds, "J") : std::vector<double>(bonds, 1.0);
        m.h = j.contains("h") ? detail::broadcast(j.at("h"), static_cast<std::size_t>(n), "h")
                              : std::vector<double>(static_cast<std::size_t>(n), 1.0);
        spec.model = m;
    } else if (model == "xxx") {
        const auto J = j.contains("J") ? detail::numbers(j.at("J"), "J") : std::vector<double>{1.0};
        for (double v : J)
            if (v != J.front()) throw InputError("xxx: J must be a single isotropic coupling");
        spec.model = HeisenbergXXX{J.front()};
    } else if (model == "sparse") {
        SparseField m;
        m.J = j.contains("J") ? detail::broadcast(j.at("J"), bonds, "J") : std::vector<double>(bonds, 1.0);
        if (!j.contains("support") || !j.at("support").is_array())
            throw InputError("sparse: support must be a list of sites");
        std::vector<int> sites;
        for (const auto& s : j.at("support")) sites.push_back(detail::integer(s, "support site"));
        const auto h = j.contains("h") ? detail::broadcast(j.at("h"), sites.size(), "h")
                                       : std::vector<double>(sites.size(), 1.0);
        for (std::size_t k = 0; k < sites.size(); ++k) {
            if (m.h.count(sites[k])) throw InputError("sparse: duplicate support site");
            m.h[sites[k]] = h[k];
        }
        spec.model = m;
    } else {
        throw InputError("unknown model '" + model + "' (expected tfim, xxx or sparse)");
    }
    validate(spec);
    return spec;
}

inline AlgebraElement parse_element(const Json& j) {
    const std::string alg = j.at("algebra").get<std::string>();
    if ((alg == "su2" || alg == "su(2)") && j.contains("a")) {
        return su2_element(detail::number(j.at("a"), "a"), detail::number(j.value("b", Json(0.0)), "b"),
                           detail::number(j.value("c", Json(0.0)), "c"));
    }
    CMat re = detail::real_matrix(j.at("re"), "re");
    CMat im = j.contains("im") ? detail::real_matrix(j.at("im"), "im") : CMat::Zero(re.rows(), re.cols());
    if (im.rows() != re.rows()) throw InputError("re and im must have the same shape");
    const AlgebraId a = detail::parse_algebra(alg, static_cast<int>(re.rows()));
    return make_element(a, CMat(re + kI * im));
}

inline Input parse_input(const Json& j) {
    try {
        if (!j.is_object()) throw InputError("input must be a JSON object");
        if (j.contains("terms")) return parse_hamiltonian(j);
        if (j.contains("model")) return parse_chain_spec(j);
        if (j.contains("algebra")) return parse_element(j);
        throw InputError("input must contain 'terms', 'model' or 'algebra'");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("schema violation: ") + e.what());
    }
}

inline int qubits(const Input& in) {
    if (const auto* h = std::get_if<Hamiltonian>(&in)) return h->n;
    if (const auto* c = std::get_if<ChainSpec>(&in)) return c->n;
    return 0;
}

inline std::vector<PauliTerm> pauli_terms(const Input& in) {
    if (const auto* h = std::get_if<Hamiltonian>(&in)) return h->terms;
    if (const auto* c = std::get_if<ChainSpec>(&in)) return build_hamiltonian(*c);
    throw InputError("a Pauli-sum or chain input is required here");
}

/// Dense algebra element for any input kind (subject to the qubit cap).
inline AlgebraElement to_element(const Input& in) {
    if (const auto* x = std::get_if<AlgebraElement>(&in)) return *x;
    return to_algebra_element(pauli_terms(in), qubits(in));
}

// ---------------------------------------------------------------- output

inline Json to_json(const FunctionalReport& r) {
    Json j;
    j["convention"] = r.convention;
    for (const auto& [p, v] : r.a_p) {
        std::string key = p == kInfinity ? "a_inf" : "a_" + format_double(p);
        if (p == std::floor(p) && p != kInfinity) key = "a_" + std::to_string(static_cast<long long>(p));
        j[key] = v;
    }
    j["curvature"] = r.curvature;
    j["act_seminorm"] = r.act_seminorm;
    j["m_x0"] = r.m_x0;
    j["c_struct"] = r.c_struct;
    j["c_struct_full"] = r.c_struct_full;
    return j;
}

inline Json to_json(const TorusRootDecomposition& d, double residual) {
    Json j;
    j["algebra"] = d.algebra.name();
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index k = 0; k < d.x0.rows(); ++k) {
        re.push_back(d.x0(k, k).real());
        im.push_back(d.x0(k, k).imag());
    }
    j["x0_diagonal"] = {{"re", re}, {"im", im}};
    Json coeffs = Json::array();
    for (const auto& [label, v] : d.coeffs) {
        Json e;
        e["root"] = label.str(d.algebra);
        e["z"] = label.z;
        e["w"] = label.w;
        e["re"] = v.real();
        e["im"] = v.imag();
        coeffs.push_back(e);
    }
    j["coefficients"] = coeffs;
    j["root_vector_convention"] = "matrix-unit E_zw; x_alpha is the (z, w) entry";
    j["reconstruction_residual"] = residual;
    return j;
}

inline Json to_json(const SplitErrorReport& r) {
    Json j;
    j["scheme"] = scheme_name(r.scheme);
    j["steps"] = r.steps;
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        Json row;
        row["t"] = r.times[i];
        row["error"] = r.errors[i];
        row["bound_rhs"] = r.bound_rhs[i];
        row["ratio"] = r.ratio(i);
        row["retained"] = static_cast<bool>(r.retained[i]);
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["curvature"] = r.curvature;
    j["activity_1"] = r.activity1;
    j["roundoff_floor"] = r.roundoff_floor;
    j["fitted_order"] = r.fitted_order ? Json(*r.fitted_order) : Json(nullptr);
    j["c_hat"] = r.c_hat;
    j["t0"] = r.t0;
    j["warnings"] = r.warnings;
    return j;
}

/// Columns: t, error, bound_rhs, ratio.
inline std::string to_csv(const SplitErrorReport& r) {
    std::string out = "t,error,bound_rhs,ratio\n";
    for (std::size_t i = 0; i < r.times.size(); ++i)
        out += format_double(r.times[i]) + "," + format_double(r.errors[i]) + "," + format_double(r.bound_rhs[i]) +
               "," + format_double(r.ratio(i)) + "\n";
    return out;
}

inline Json to_json(const LowerBoundReport& r) {
    Json j;
    j["m1"] = r.m1;
    j["M1"] = r.M1;
    j["c_rho"] = r.c_rho;
    j["eps0"] = r.eps0;
    j["s0"] = r.s0;
    j["c1"] = r.c1;
    j["c2"] = r.c2;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["c_rho_samples_used"] = r.c_rho_samples_used;
    return j;
}

/// JSON array of {kind, label, k, s}; toral gates also carry their unit
/// generator's diagonal (imaginary parts) under "diag".
inline Json to_json(const Circuit& c) {
    Json arr = Json::array();
    for (const auto& g : c.gates) {
        Json e;
        if (g.kind == GateKind::Toral) {
            e["kind"] = "toral";
            e["label"] = nullptr;
            e["k"] = nullptr;
            e["s"] = g.s;
            Json diag = Json::array();
            for (Eigen::Index i = 0; i < g.toral.rows(); ++i) diag.push_back(g.toral(i, i).imag());
            e["diag"] = diag;
        } else {
            e["kind"] = "root";
            e["label"] = g.label.str(c.algebra);
            e["k"] = g.k;
            e["s"] = g.s;
        }
        arr.push_back(e);
    }
    return arr;
}

inline Json to_json(const ScalingTable& t) {
    Json j;
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back({{"n", r.n}, {"A1", r.a1}, {"A2", r.a2}, {"C", r.c}});
    j["rows"] = rows;
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    j["exponents"] = {{"A1", opt(t.exponent_a1)}, {"A2", opt(t.exponent_a2)}, {"C", opt(t.exponent_c)}};
    return j;
}

/// Columns: n, A1, A2, C.
inline std::string to_csv(const ScalingTable& t) {
    std::string out = "n,A1,A2,C\n";
    for (const auto& r : t.rows)
        out += std::to_string(r.n) + "," + format_double(r.a1) + "," + format_double(r.a2) + "," +
               format_double(r.c) + "\n";
    return out;
}

}  // namespace rootsim::io
