#pragma once

// Holomorphic differentials on Kummer covers y^n = f(x) following Boseck.
//
// For f = a * prod p_i^{l_i} with deg p_i = d_i, every branch has
// ramification e_i = n / gcd(n, l_i) and lambda_i = e_i l_i / n. For each
// mu in 1..n-1 write mu * lambda_i = m_i * e_i + rho_i with 0 <= rho_i < e_i
// and t = (1/n) sum d_i f_i g_i rho_i. The differentials
//
//     x^nu g_mu(x) y^{-mu} dx,   g_mu = prod p_i^{m_i},   0 <= nu <= t - 2
//
// form a basis. The characteristic-p table further down is the analogue on
// the Artin-Schreier fiber X^p - X = x^l / a(x)^p.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmath.hpp"
#include "params.hpp"

namespace galois_diff {

class InfinityRamified : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MultiplicityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Branch data for one irreducible factor of f (or `count` identical ones).
struct BranchDatum {
    std::int64_t degree = 1;
    std::int64_t exponent = 1;
    std::int64_t inertia = 1;
    std::int64_t places_above = 1;
    std::int64_t count = 1;

    std::int64_t ramification(std::int64_t n) const { return n / std::gcd(n, exponent); }
    std::int64_t boseck_lambda(std::int64_t n) const { return ramification(n) * exponent / n; }
};

struct BoseckRow {
    std::int64_t mu = 0;
    std::vector<std::int64_t> m;   // per branch
    std::vector<std::int64_t> rho; // per branch
    std::int64_t t = 0;
};

struct BoseckTable {
    std::int64_t n = 0;
    std::vector<BranchDatum> branches;
    std::vector<BoseckRow> rows; // mu = 1..n-1

    std::int64_t t(std::int64_t mu) const { return rows.at(static_cast<std::size_t>(mu - 1)).t; }
};

enum class Fiber { char0, charp };

inline const char* to_string(Fiber f) { return f == Fiber::char0 ? "char0" : "charp"; }

/// One basis differential x^nu g_mu(x) y^{-mu} dx (char 0) or
/// x^nu g_mu(x)^{-1} X^mu dx (char p).
struct DiffDescriptor {
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    std::vector<std::int64_t> gmu_exponents;
    Fiber fiber = Fiber::char0;

    friend bool operator==(const DiffDescriptor&, const DiffDescriptor&) = default;
};

inline BoseckTable build_boseck_table(std::int64_t n, std::vector<BranchDatum> branches)
{
    if (n < 2) throw std::invalid_argument("Kummer degree must be at least 2");
    std::int64_t deg = 0;
    for (const auto& b : branches) {
        if (b.exponent <= 0 || b.exponent >= n)
            throw std::invalid_argument("branch exponent must satisfy 0 < l_i < n");
        if (b.degree < 1 || b.inertia < 1 || b.places_above < 1 || b.count < 1)
            throw std::invalid_argument("branch degree, inertia, place count and multiplicity must be positive");
        deg += b.count * b.degree * b.exponent;
    }
    if (deg % n != 0)
        throw InfinityRamified("deg f = " + std::to_string(deg) + " is not divisible by n = " + std::to_string(n) +
                               "; the place at infinity ramifies");

    BoseckTable table{n, std::move(branches), {}};
    for (std::int64_t mu = 1; mu < n; ++mu) {
        BoseckRow row{mu, {}, {}, 0};
        std::int64_t weighted = 0;
        for (const auto& b : table.branches) {
            const std::int64_t e = b.ramification(n);
            const std::int64_t lam = b.boseck_lambda(n);
            const std::int64_t mi = floor_div(mu * lam, e);
            const std::int64_t rho = mu * lam - mi * e;
            row.m.push_back(mi);
            row.rho.push_back(rho);
            weighted += b.count * b.degree * b.inertia * b.places_above * rho;
        }
        if (weighted % n != 0)
            throw std::invalid_argument("inconsistent branch data: t^(" + std::to_string(mu) +
                                        ") is not an integer");
        row.t = weighted / n;
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::vector<DiffDescriptor> boseck_basis(const BoseckTable& table)
{
    std::vector<DiffDescriptor> out;
    for (const auto& row : table.rows)
        for (std::int64_t nu = 0; nu <= row.t - 2; ++nu) out.push_back({row.mu, nu, row.m, Fiber::char0});
    return out;
}

/// Branch data of the generic fiber y^p = lambda^p x^l + a(x)^p: the point
/// x = 0 with exponent l, plus m simple branches aggregated into one record.
inline std::vector<BranchDatum> family_branches(const CurveParams& c)
{
    return {BranchDatum{1, c.l, 1, 1, 1}, BranchDatum{1, 1, 1, 1, c.m}};
}

inline BoseckTable family_boseck_table(const CurveParams& c)
{
    return build_boseck_table(c.pv(), family_branches(c));
}

// ---------------------------------------------------------------------------
// Characteristic p fiber.
//
// a(x) = prod p_i^{l_i} with linear p_i and sum l_i = q; the first entry of
// `multiplicities` is the designated branch l_1 over x.

struct CharPRow {
    std::int64_t mu = 0;
    std::vector<std::int64_t> m; // m_1 first
    std::int64_t t = 0;          // closed form
    std::int64_t exponent_sum = 0;
};

struct CharPTable {
    CurveParams params;
    std::vector<std::int64_t> multiplicities;
    std::vector<CharPRow> rows; // mu = 0..p-2
    std::int64_t t_excluded = 0; // t at mu = p-1

    /// True when sum_i m_i^(mu) agrees with the closed form for t on every row.
    bool exponent_sums_match() const
    {
        for (const auto& r : rows)
            if (r.exponent_sum != r.t) return false;
        return true;
    }
};

inline void check_multiplicities(const CurveParams& c, const std::vector<std::int64_t>& mult)
{
    if (mult.empty()) throw MultiplicityMismatch("multiplicity profile is empty");
    std::int64_t s = 0;
    for (auto li : mult) {
        if (li < 1) throw MultiplicityMismatch("multiplicities must be positive");
        s += li;
    }
    if (s != c.q)
        throw MultiplicityMismatch("multiplicities sum to " + std::to_string(s) + ", expected q = " +
                                   std::to_string(c.q));
}

inline std::int64_t charp_t(const CurveParams& c, std::int64_t mu)
{
    const std::int64_t p = c.pv();
    return c.q * (p - 1 - mu) - c.l + floor_div(c.l * (1 + mu) + p - 1, p);
}

inline CharPTable asfiber_exponents(const CurveParams& c, const std::vector<std::int64_t>& mult)
{
    check_multiplicities(c, mult);
    const std::int64_t p = c.pv();
    CharPTable table{c, mult, {}, charp_t(c, p - 1)};
    for (std::int64_t mu = 0; mu <= p - 2; ++mu) {
        CharPRow row{mu, {}, charp_t(c, mu), 0};
        const std::int64_t l1 = mult.front();
        row.m.push_back(floor_div((p - 1 - mu) * (l1 * p - c.l) + (p - 1), p));
        for (std::size_t i = 1; i < mult.size(); ++i) row.m.push_back((p - 1 - mu) * mult[i]);
        for (auto v : row.m) row.exponent_sum += v;
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::vector<DiffDescriptor> charp_boseck_basis(const CharPTable& table)
{
    std::vector<DiffDescriptor> out;
    for (const auto& row : table.rows)
        for (std::int64_t nu = 0; nu <= row.t - 2; ++nu) out.push_back({row.mu, nu, row.m, Fiber::charp});
    return out;
}

/// Default profile: a single branch over x carrying all of a(x).
inline std::vector<std::int64_t> default_multiplicities(const CurveParams& c) { return {c.q}; }

} // namespace galois_diff
