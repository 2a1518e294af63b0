#pragma once

// The model y^p = lambda^p x^l + a(x)^p of the OSS family,
// its holomorphic differentials on both fibers, and the reduction to the
// Artin-Schreier equation X^p - X = x^l / a(x)^p.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boseck.hpp"
#include "exactnum.hpp"
#include "intmath.hpp"
#include "params.hpp"
#include "poly.hpp"

namespace galois_diff {

class BadSpecialization : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPolynomial : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ReductionMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Closed-form genus (p-1)(m-1)/2 of the cover.
inline std::int64_t genus(const CurveParams& c) { return (c.pv() - 1) * (c.m - 1) / 2; }

/// One specialization of the family.
///
/// The deformation parameters are x_i = a_coeffs[i-1] / denominator. With
/// denominator c != 1 the stored polynomials are the integral model obtained
/// by x -> x / c: `a` holds c^q a(x/c) and `f` holds c^{pq} f(x/c). For c = 1
/// they are a(x) and f(x) = lambda^p x^l + a(x)^p themselves.
struct FamilyMember {
    CurveParams params;
    std::vector<CycNum> a_coeffs;
    BigInt denominator = 1;
    CycPoly a;
    CycPoly f;

    bool integral() const { return denominator == 1; }
};

inline FamilyMember build_member(const CurveParams& c, std::vector<CycNum> a_coeffs, BigInt denominator = 1)
{
    const PrimeP p = c.p;
    if (a_coeffs.size() != static_cast<std::size_t>(c.q))
        throw BadSpecialization("expected q = " + std::to_string(c.q) + " deformation parameters, got " +
                                std::to_string(a_coeffs.size()));
    if (denominator <= 0) throw BadSpecialization("denominator must be positive");
    for (const auto& x : a_coeffs)
        if (!(x.prime() == p)) throw BadSpecialization("parameter lives in the wrong cyclotomic ring");
    if (c.l != 1 && !a_coeffs.back().is_zero())
        throw BadSpecialization("x_q must vanish when l != 1 (l = " + std::to_string(c.l) + ")");

    const CycNum zero(p);
    // c^q a(x/c) = x^q + sum_i n_i c^{i-1} x^{q-i}
    std::vector<CycNum> ac(static_cast<std::size_t>(c.q + 1), zero);
    ac[static_cast<std::size_t>(c.q)] = CycNum(p, 1);
    BigInt cpow = 1;
    for (std::int64_t i = 1; i <= c.q; ++i) {
        ac[static_cast<std::size_t>(c.q - i)] = a_coeffs[static_cast<std::size_t>(i - 1)] * cpow;
        cpow *= denominator;
    }
    CycPoly a(std::move(ac), zero);

    BigInt scale_l = 1;
    for (std::int64_t i = 0; i < c.pv() * c.q - c.l; ++i) scale_l *= denominator;
    const CycNum lead = pow(lambda(p), static_cast<std::uint64_t>(c.pv())) * scale_l;
    CycPoly f = CycPoly::monomial(lead, static_cast<std::size_t>(c.l), zero) +
                poly_pow(a, static_cast<std::uint64_t>(c.pv()));

    if (f.degree() != c.pv() * c.q) throw std::logic_error("family polynomial has the wrong degree");
    return FamilyMember{c, std::move(a_coeffs), std::move(denominator), std::move(a), std::move(f)};
}

/// Member with all deformation parameters zero: y^p = (lambda^p + x^m) x^l.
inline FamilyMember zero_member(const CurveParams& c)
{
    return build_member(c, std::vector<CycNum>(static_cast<std::size_t>(c.q), CycNum(c.p)));
}

/// Integer parameters drawn uniformly from [lo, hi], x_q forced to 0 when l != 1.
template <class Rng>
FamilyMember random_member(const CurveParams& c, Rng& rng, std::int64_t lo = -3, std::int64_t hi = 3)
{
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<CycNum> coeffs;
    for (std::int64_t i = 0; i < c.q; ++i) coeffs.emplace_back(c.p, dist(rng));
    if (c.l != 1) coeffs.back() = CycNum(c.p);
    return build_member(c, std::move(coeffs));
}

/// Distinct-roots condition on the generic fiber. For l = 1 this is f
/// squarefree; for l > 1 it is h = f / x^l squarefree with h(0) != 0.
inline bool smoothness_check(const FamilyMember& member)
{
    const auto& c = member.params;
    if (c.l == 1) return squarefree_check(member.f);

    const auto& fc = member.f.coeffs();
    for (std::int64_t i = 0; i < c.l; ++i)
        if (!fc[static_cast<std::size_t>(i)].is_zero())
            throw NotPolynomial("x^l does not divide a(x)^p, so f / x^l is not a polynomial");
    CycPoly h(std::vector<CycNum>(fc.begin() + c.l, fc.end()), member.f.zero_element());
    if (h[0].is_zero()) return false;
    return squarefree_check(h);
}

// ---------------------------------------------------------------------------
// Bases of holomorphic differentials.

/// (N, a): the differential x^N a(x)^a (lambda X+1)^a / (a(x)^{p-1} (lambda X+1)^{p-1}) dx
/// on the generic fiber, or x^N a(x)^a X^a / a(x)^{p-1} dx on the special one.
struct ExponentPair {
    std::int64_t N = 0;
    std::int64_t a = 0;

    friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

inline std::int64_t char0_lower(const CurveParams& c, std::int64_t a)
{
    return c.l - ceil_div((1 + a) * c.l, c.pv());
}

inline std::int64_t char0_upper(const CurveParams& c, std::int64_t a) { return (c.pv() - 1 - a) * c.q - 2; }

inline std::int64_t charp_lower(const CurveParams& c, std::int64_t mu)
{
    return c.l - floor_div(c.l * (1 + mu) + (c.pv() - 1), c.pv());
}

inline std::int64_t charp_upper(const CurveParams& c, std::int64_t mu) { return c.q * (c.pv() - 1 - mu) - 2; }

inline std::vector<ExponentPair> char0_basis(const CurveParams& c)
{
    std::vector<ExponentPair> out;
    for (std::int64_t a = 0; a <= c.pv() - 2; ++a)
        for (std::int64_t N = char0_lower(c, a); N <= char0_upper(c, a); ++N) out.push_back({N, a});
    return out;
}

inline std::vector<ExponentPair> charp_basis(const CurveParams& c)
{
    std::vector<ExponentPair> out;
    for (std::int64_t mu = 0; mu <= c.pv() - 2; ++mu)
        for (std::int64_t N = charp_lower(c, mu); N <= charp_upper(c, mu); ++N) out.push_back({N, mu});
    return out;
}

/// ceil((1+a)l/p) - ceil((1+k)l/p) <= a - k
inline bool ceiling_gap_check(std::int64_t p, std::int64_t l, std::int64_t a, std::int64_t k)
{
    if (k < 0 || k > a || a > p - 2 || l < 1 || l > p - 1)
        throw std::invalid_argument("ceiling_gap_check: need 0 <= k <= a <= p-2 and 1 <= l <= p-1");
    return ceil_div((1 + a) * l, p) - ceil_div((1 + k) * l, p) <= a - k;
}

struct Block {
    std::int64_t nu = 0;
    std::vector<std::int64_t> generators;         // N labels of the C_nu generators
    std::vector<ExponentPair> final_descriptors;  // (N, a) with 1 <= a <= nu+1
};

struct BlockBasis {
    CurveParams params;
    std::vector<Block> blocks; // nu = 0..p-2

    std::vector<std::int64_t> dims() const
    {
        std::vector<std::int64_t> d;
        for (const auto& b : blocks) d.push_back(static_cast<std::int64_t>(b.generators.size()));
        return d;
    }

    std::size_t final_size() const
    {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.final_descriptors.size();
        return n;
    }
};

/// Split Omega^a = sum_{nu >= a} L_{nu,a}(C_nu).
///
/// L_{nu,a} sends the block-nu generator x^N to x^N a(x)^{nu-a} in block a,
/// whose leading exponent is N + q(nu-a) since a(x) is monic of degree q.
/// C_a is spanned by the admissible x^N in block a whose exponent is not a
/// leading exponent of an inherited element.
inline BlockBasis block_split(const CurveParams& c)
{
    const std::int64_t top = c.pv() - 2;
    BlockBasis basis{c, std::vector<Block>(static_cast<std::size_t>(top + 1))};

    for (std::int64_t nu = top; nu >= 0; --nu) {
        const std::int64_t lo = char0_lower(c, nu);
        const std::int64_t hi = char0_upper(c, nu);
        std::set<std::int64_t> inherited;
        for (std::int64_t higher = nu + 1; higher <= top; ++higher) {
            for (auto N : basis.blocks[static_cast<std::size_t>(higher)].generators) {
                const std::int64_t lead = N + c.q * (higher - nu);
                if (lead < lo || lead > hi) throw std::logic_error("inherited differential is not admissible");
                if (!inherited.insert(lead).second) throw std::logic_error("inherited leading exponents collide");
            }
        }
        Block& b = basis.blocks[static_cast<std::size_t>(nu)];
        b.nu = nu;
        for (std::int64_t N = lo; N <= hi; ++N)
            if (!inherited.contains(N)) b.generators.push_back(N);
        for (auto N : b.generators)
            for (std::int64_t a = 1; a <= nu + 1; ++a) b.final_descriptors.push_back({N, a});

        const std::int64_t dim_here = std::max<std::int64_t>(hi - lo + 1, 0);
        const std::int64_t dim_above = nu == top ? 0 : std::max<std::int64_t>(char0_upper(c, nu + 1) - char0_lower(c, nu + 1) + 1, 0);
        if (static_cast<std::int64_t>(b.generators.size()) != dim_here - dim_above)
            throw std::logic_error("block dimension does not match the filtration");
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Characteristic p fiber.

struct ASReduction {
    /// ((lambda X + 1)^p - 1) / lambda^p before reduction, over Z[zeta].
    CycPoly divided;
    /// The same polynomial reduced mod lambda; always X^p - X.
    ModPPoly lhs;
    /// x^l and a(x)^p mod lambda.
    ModPPoly rhs_numerator;
    ModPPoly rhs_denominator;
};

/// Derive X^p - X = x^l / a(x)^p from (lambda X a + a)^p = lambda^p x^l + a^p.
inline ASReduction as_reduction(const FamilyMember& member)
{
    const auto& c = member.params;
    const PrimeP p = c.p;
    if (!member.integral())
        throw std::invalid_argument("as_reduction needs integral deformation parameters");

    const CycNum zero(p);
    const CycNum lam = lambda(p);
    const auto pe = static_cast<std::uint64_t>(c.pv());

    // The member satisfies f - a^p = lambda^p x^l, so a^p ((lambda X + 1)^p - 1) = lambda^p x^l.
    const CycPoly a_p = poly_pow(member.a, pe);
    const CycPoly lam_xl = CycPoly::monomial(pow(lam, pe), static_cast<std::size_t>(c.l), zero);
    if (!(member.f - a_p == lam_xl)) throw ReductionMismatch("f - a(x)^p is not lambda^p x^l");

    CycPoly shifted = poly_pow(CycPoly({CycNum(p, 1), lam}, zero), pe) - CycPoly::constant(CycNum(p, 1), zero);
    if (!(shifted.leading() == pow(lam, pe))) throw ReductionMismatch("leading coefficient of (lambda X+1)^p");

    std::vector<CycNum> div;
    for (const auto& coeff : shifted.coeffs())
        div.push_back(coeff.is_zero() ? zero : exact_div_lambda(coeff, c.pv()));
    CycPoly divided(std::move(div), zero);
    if (!(divided.leading() == CycNum(p, 1))) throw ReductionMismatch("X^p coefficient is not 1");

    const ModPNum mzero(p, 0);
    const auto red = [](const CycNum& z) { return reduce_mod_lambda(z); };
    ModPPoly lhs = divided.map(red, mzero);

    std::vector<ModPNum> expected(static_cast<std::size_t>(c.pv() + 1), mzero);
    expected[1] = ModPNum(p, -1);
    expected[static_cast<std::size_t>(c.pv())] = ModPNum(p, 1);
    if (!(lhs == ModPPoly(std::move(expected), mzero)))
        throw ReductionMismatch("reduction of ((lambda X+1)^p - 1)/lambda^p is not X^p - X");

    ModPPoly num = ModPPoly::monomial(ModPNum(p, 1), static_cast<std::size_t>(c.l), mzero);
    ModPPoly den = a_p.map(red, mzero);
    return ASReduction{std::move(divided), std::move(lhs), std::move(num), std::move(den)};
}

struct ConductorReport {
    std::vector<std::int64_t> multiplicities;
    std::vector<std::int64_t> conductors;
    std::int64_t different_sum = 0; // (p-1) sum (m_i + 1)
    std::int64_t expected = 0;      // (p-1)(m+1)
    bool different_matches = false;
    bool l1_equals_l = false;
};

/// Local conductors m_i = p l_i - 1 (i != 1) and m_1 = p l_1 - l_1.
inline ConductorReport conductors(const CurveParams& c, const std::vector<std::int64_t>& mult)
{
    check_multiplicities(c, mult);
    const std::int64_t p = c.pv();
    ConductorReport r;
    r.multiplicities = mult;
    for (std::size_t i = 0; i < mult.size(); ++i)
        r.conductors.push_back(i == 0 ? p * mult[i] - mult[i] : p * mult[i] - 1);
    std::int64_t s = 0;
    for (auto mi : r.conductors) s += mi + 1;
    r.different_sum = (p - 1) * s;
    r.expected = (p - 1) * (c.m + 1);
    r.different_matches = r.different_sum == r.expected;
    r.l1_equals_l = mult.front() == c.l;
    return r;
}

/// Divisor on the special fiber, in terms of P_1 (over x = 0), the other
/// branch places P_i, Con(P_inf) and the zero divisor div_0(X).
struct DivisorVector {
    std::int64_t mu = 0;
    std::int64_t at_p1 = 0;
    std::vector<std::int64_t> at_branches; // P_2, P_3, ...
    std::int64_t at_infinity = -2;
    std::int64_t infinity_degree = 0;      // deg Con(P_inf) = p
    std::int64_t div0_coeff = 0;           // multiple of div_0(X)
    std::int64_t div0_degree = 0;          // deg div_0(X)

    std::int64_t degree() const
    {
        std::int64_t d = at_p1 + at_infinity * infinity_degree + div0_coeff * div0_degree;
        for (auto v : at_branches) d += v;
        return d;
    }
};

struct DivisorReport {
    DivisorVector dx;
    std::vector<DivisorVector> x_mu_dx; // mu = 0..p-2
    std::int64_t genus = 0;
    bool degree_matches = false;
    bool l1_equals_l = false;
};

inline DivisorReport divisors(const CurveParams& c, const std::vector<std::int64_t>& mult)
{
    check_multiplicities(c, mult);
    const std::int64_t p = c.pv();
    const std::int64_t l1 = mult.front();

    // div(X) = div_0(X) - sum_{i>=2} l_i p P_i - (l_1 p - l) P_1 has degree 0.
    std::int64_t pole_degree = l1 * p - c.l;
    for (std::size_t i = 1; i < mult.size(); ++i) pole_degree += mult[i] * p;

    const auto make = [&](std::int64_t mu) {
        DivisorVector d;
        d.mu = mu;
        d.at_p1 = (p - 1 - mu) * (l1 * p - c.l) + (p - 1);
        for (std::size_t i = 1; i < mult.size(); ++i) d.at_branches.push_back((p - 1 - mu) * p * mult[i]);
        d.infinity_degree = p;
        d.div0_coeff = mu;
        d.div0_degree = pole_degree;
        return d;
    };

    DivisorReport r;
    r.dx = make(0);
    for (std::int64_t mu = 0; mu <= p - 2; ++mu) r.x_mu_dx.push_back(make(mu));
    r.genus = genus(c);
    r.degree_matches = r.dx.degree() == 2 * r.genus - 2;
    r.l1_equals_l = l1 == c.l;
    return r;
}

struct BasisMatch {
    bool matched = false;
    std::vector<std::pair<ExponentPair, ExponentPair>> pairing; // (char 0, char p)
    std::vector<std::int64_t> char0_counts;
    std::vector<std::int64_t> charp_counts;
    /// |final basis| from block_split equals the char p basis size.
    bool final_count_matches = false;
};

/// Compare the generic-fiber basis with the special-fiber basis block by block.
inline BasisMatch basis_match(const CurveParams& c)
{
    BasisMatch r;
    const auto zero = char0_basis(c);
    const auto special = charp_basis(c);
    const std::int64_t top = c.pv() - 2;
    r.char0_counts.assign(static_cast<std::size_t>(top + 1), 0);
    r.charp_counts.assign(static_cast<std::size_t>(top + 1), 0);
    for (const auto& e : zero) ++r.char0_counts[static_cast<std::size_t>(e.a)];
    for (const auto& e : special) ++r.charp_counts[static_cast<std::size_t>(e.a)];

    r.matched = zero.size() == special.size();
    if (r.matched) {
        std::set<ExponentPair> sp(special.begin(), special.end());
        for (const auto& e : zero) {
            if (!sp.contains(e)) {
                r.matched = false;
                break;
            }
            r.pairing.emplace_back(e, e);
        }
    }
    if (!r.matched) r.pairing.clear();
    r.final_count_matches = block_split(c).final_size() == special.size();
    return r;
}

} // namespace galois_diff
