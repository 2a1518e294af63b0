#pragma once

// JSON views of the library's results. Big integers are written as decimal
// strings; an element of Z[zeta_p] is the array of its p-1 coordinates,
// little-endian in powers of zeta.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "boseck.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "rep.hpp"
#include "structure.hpp"

namespace galois_diff {

using json = nlohmann::json;

inline json to_json_value(const CycNum& z)
{
    json a = json::array();
    for (const auto& x : z.coords()) a.push_back(x.str());
    return a;
}

inline CycNum cycnum_from_json(PrimeP p, const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("CycNum JSON must be an array");
    std::vector<BigInt> coords;
    for (const auto& s : j) coords.emplace_back(s.get<std::string>());
    return CycNum::from_coords(p, std::move(coords));
}

inline json to_json_value(const RepMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json_value(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RepMatrix rep_matrix_from_json(PrimeP p, const json& j)
{
    RepMatrix m(j.size(), CycNum(p));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j.size()) throw std::invalid_argument("matrix JSON is not square");
        for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = cycnum_from_json(p, j[i][k]);
    }
    return m;
}

inline json to_json_value(const BinomMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json_value(const ModPPoly& f)
{
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.residue());
    return a;
}

inline json to_json_value(const BoseckTable& t)
{
    json branches = json::array();
    for (const auto& b : t.branches)
        branches.push_back({{"degree", b.degree},
                            {"exponent", b.exponent},
                            {"inertia", b.inertia},
                            {"places_above", b.places_above},
                            {"count", b.count},
                            {"ramification", b.ramification(t.n)},
                            {"lambda", b.boseck_lambda(t.n)}});
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"mu", r.mu}, {"m", r.m}, {"rho", r.rho}, {"t", r.t}});
    return {{"n", t.n},
            {"branches", std::move(branches)},
            {"rows", std::move(rows)},
            {"basis_size", boseck_basis(t).size()}};
}

inline json to_json_value(const CharPTable& t)
{
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"mu", r.mu}, {"m", r.m}, {"t", r.t}, {"exponent_sum", r.exponent_sum}});
    return {{"multiplicities", t.multiplicities},
            {"rows", std::move(rows)},
            {"t_excluded", t.t_excluded},
            {"basis_size", charp_boseck_basis(t).size()},
            {"exponent_sums_match", t.exponent_sums_match()}};
}

inline json to_json_value(const BlockBasis& b)
{
    json blocks = json::array();
    for (const auto& blk : b.blocks) {
        json fin = json::array();
        for (const auto& e : blk.final_descriptors) fin.push_back({e.N, e.a});
        blocks.push_back({{"nu", blk.nu}, {"generators", blk.generators}, {"final", std::move(fin)}});
    }
    return {{"dims", b.dims()}, {"final_size", b.final_size()}, {"blocks", std::move(blocks)}};
}

inline json to_json_value(const DivisorVector& d)
{
    return {{"mu", d.mu},
            {"P1", d.at_p1},
            {"branches", d.at_branches},
            {"con_inf", d.at_infinity},
            {"con_inf_degree", d.infinity_degree},
            {"div0_coeff", d.div0_coeff},
            {"div0_degree", d.div0_degree},
            {"degree", d.degree()}};
}

inline json to_json_value(const DivisorReport& r)
{
    json xs = json::array();
    for (const auto& d : r.x_mu_dx) xs.push_back(to_json_value(d));
    return {{"dx", to_json_value(r.dx)},
            {"x_mu_dx", std::move(xs)},
            {"genus", r.genus},
            {"degree_matches", r.degree_matches},
            {"l1_equals_l", r.l1_equals_l}};
}

inline json to_json_value(const ConductorReport& r)
{
    return {{"multiplicities", r.multiplicities},
            {"conductors", r.conductors},
            {"different_sum", r.different_sum},
            {"expected", r.expected},
            {"different_matches", r.different_matches},
            {"l1_equals_l", r.l1_equals_l}};
}

inline json to_json_value(const DecompositionReport& r)
{
    json modules = json::array();
    for (const auto& m : r.modules)
        modules.push_back({{"a0", m.a0}, {"a1", m.a1}, {"rank", m.rank()}, {"multiplicity", m.multiplicity}});
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    return {{"p", r.params.pv()},
            {"m", r.params.m},
            {"q", r.params.q},
            {"l", r.params.l},
            {"oss_dim", r.oss_dim},
            {"genus", r.genus},
            {"delta", r.delta},
            {"omega_dims", r.omega_dims},
            {"eigen_dims", r.eigen_dims},
            {"modules", std::move(modules)},
            {"degenerate", r.degenerate},
            {"checks", std::move(checks)}};
}

inline DecompositionReport report_from_json(const json& j)
{
    const PrimeP p(j.at("p").get<std::int64_t>());
    const CurveParams c = make_params(p, j.at("m").get<std::int64_t>());
    if (c.q != j.at("q").get<std::int64_t>() || c.l != j.at("l").get<std::int64_t>())
        throw std::invalid_argument("report (q, l) inconsistent with (p, m)");
    DecompositionReport r(c);
    r.oss_dim = j.at("oss_dim").get<std::int64_t>();
    r.genus = j.at("genus").get<std::int64_t>();
    r.delta = j.at("delta").get<std::vector<std::int64_t>>();
    r.omega_dims = j.at("omega_dims").get<std::vector<std::int64_t>>();
    r.eigen_dims = j.at("eigen_dims").get<std::vector<std::int64_t>>();
    if (j.contains("modules"))
        for (const auto& m : j.at("modules"))
            r.modules.push_back(IndecompModule{m.at("a0").get<std::int64_t>(), m.at("a1").get<std::int64_t>(),
                                               m.at("multiplicity").get<std::int64_t>()});
    r.degenerate = j.value("degenerate", false);
    for (const auto& [k, v] : j.at("checks").items()) r.checks[k] = v.get<bool>();
    return r;
}

} // namespace galois_diff
