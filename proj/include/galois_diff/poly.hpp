#pragma once

// Dense univariate polynomials over the exact rings of exactnum.hpp.
//
// Coefficients are stored lowest degree first and trimmed so that the
// leading coefficient is nonzero. Every polynomial carries a zero element of
// its coefficient ring, which is how ring-dependent data (the prime p for
// F_p and Z[zeta_p]) travels with it.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace galois_diff {

template <class R>
concept ExactRing = requires(const R& a, const R& b, std::int64_t k) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { scale(a, k) } -> std::convertible_to<R>;
    { exact_div(a, b) } -> std::convertible_to<R>;
};

template <ExactRing R>
class UniPoly {
public:
    explicit UniPoly(R zero) : zero_(std::move(zero)) {}

    UniPoly(std::vector<R> coeffs, R zero) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

    /// c * x^deg
    static UniPoly monomial(R c, std::size_t deg, R zero)
    {
        std::vector<R> v(deg + 1, zero);
        v[deg] = std::move(c);
        return UniPoly(std::move(v), std::move(zero));
    }

    static UniPoly constant(R c, R zero) { return monomial(std::move(c), 0, std::move(zero)); }

    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    const R& zero_element() const noexcept { return zero_; }

    const R& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

    const R& leading() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    UniPoly operator+(const UniPoly& o) const
    {
        std::vector<R> v(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
        return UniPoly(std::move(v), zero_);
    }

    UniPoly operator-(const UniPoly& o) const
    {
        std::vector<R> v(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
        return UniPoly(std::move(v), zero_);
    }

    UniPoly operator-() const { return UniPoly(zero_) - *this; }

    UniPoly operator*(const UniPoly& o) const
    {
        if (is_zero() || o.is_zero()) return UniPoly(zero_);
        std::vector<R> v(c_.size() + o.c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (galois_diff::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(std::move(v), zero_);
    }

    UniPoly operator*(const R& k) const
    {
        std::vector<R> v = c_;
        for (auto& x : v) x = x * k;
        return UniPoly(std::move(v), zero_);
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Multiply by x^k.
    UniPoly shift(std::size_t k) const
    {
        if (is_zero()) return *this;
        std::vector<R> v(k, zero_);
        v.insert(v.end(), c_.begin(), c_.end());
        return UniPoly(std::move(v), zero_);
    }

    /// Coefficient-wise image under a ring map.
    template <class F>
    auto map(F&& f, const std::invoke_result_t<F, const R&>& target_zero) const
    {
        using S = std::invoke_result_t<F, const R&>;
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        return UniPoly<S>(std::move(v), target_zero);
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& f)
    {
        if (f.is_zero()) return os << '0';
        bool first = true;
        for (std::size_t i = f.c_.size(); i-- > 0;) {
            if (galois_diff::is_zero(f.c_[i])) continue;
            if (!first) os << " + ";
            os << '(' << f.c_[i] << ')';
            if (i > 0) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os;
    }

private:
    void trim()
    {
        while (!c_.empty() && galois_diff::is_zero(c_.back())) c_.pop_back();
    }

    R zero_;
    std::vector<R> c_;
};

template <ExactRing R>
UniPoly<R> poly_pow(const UniPoly<R>& f, std::uint64_t e)
{
    // 1 in R: the ring's own zero cannot produce it, so take it from a
    // nonzero coefficient when there is one.
    if (e == 0) {
        if (f.is_zero()) throw std::domain_error("poly_pow: 0^0");
        const R& c = f.leading();
        return UniPoly<R>::constant(exact_div(c, c), f.zero_element());
    }
    UniPoly<R> result = f;
    UniPoly<R> base = f;
    --e;
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

template <ExactRing R>
UniPoly<R> formal_derivative(const UniPoly<R>& f)
{
    if (f.degree() <= 0) return UniPoly<R>(f.zero_element());
    std::vector<R> v;
    v.reserve(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        v.push_back(scale(f.coeffs()[i], static_cast<std::int64_t>(i)));
    return UniPoly<R>(std::move(v), f.zero_element());
}

/// Evaluate by Horner's rule.
template <ExactRing R>
R evaluate(const UniPoly<R>& f, const R& x)
{
    R acc = f.zero_element();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f.coeffs()[i];
    return acc;
}

/// Divide every coefficient exactly by c.
template <ExactRing R>
UniPoly<R> exact_div_scalar(const UniPoly<R>& f, const R& c)
{
    std::vector<R> v;
    v.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) v.push_back(exact_div(x, c));
    return UniPoly<R>(std::move(v), f.zero_element());
}

/// Pseudo-remainder: lc(g)^{deg f - deg g + 1} f mod g, computed without division.
template <ExactRing R>
UniPoly<R> pseudo_remainder(const UniPoly<R>& f, const UniPoly<R>& g)
{
    if (g.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
    if (f.degree() < g.degree()) return f;
    const R& lc = g.leading();
    const std::int64_t dg = g.degree();
    std::vector<R> r = f.coeffs();
    std::int64_t steps = f.degree() - dg + 1;
    for (std::int64_t top = f.degree(); top >= dg; --top) {
        const R coef = r[static_cast<std::size_t>(top)];
        for (auto& x : r) x = x * lc;
        if (!is_zero(coef)) {
            const auto off = static_cast<std::size_t>(top - dg);
            for (std::size_t j = 0; j < g.coeffs().size(); ++j) r[off + j] = r[off + j] - coef * g.coeffs()[j];
        }
        r[static_cast<std::size_t>(top)] = f.zero_element();
        --steps;
    }
    if (steps != 0) throw std::logic_error("pseudo_remainder step count");
    return UniPoly<R>(std::move(r), f.zero_element());
}

/// Last nonzero member of the subresultant remainder sequence of f and g.
/// Over the fraction field this is an associate of gcd(f, g).
template <ExactRing R>
UniPoly<R> subresultant_gcd(UniPoly<R> a, UniPoly<R> b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);

    const R& some = a.leading();
    const R one = exact_div(some, some);
    R g = one;
    R h = one;
    while (true) {
        const std::int64_t d = a.degree() - b.degree();
        UniPoly<R> r = pseudo_remainder(a, b);
        if (r.is_zero()) return b;
        if (r.degree() == 0) return r;

        R hd = one;
        for (std::int64_t i = 0; i < d; ++i) hd = hd * h;
        const R divisor = g * hd;

        a = std::move(b);
        b = exact_div_scalar(r, divisor);
        g = a.leading();

        // h <- g^d / h^{d-1}
        R gd = one;
        for (std::int64_t i = 0; i < d; ++i) gd = gd * g;
        R hd1 = one;
        for (std::int64_t i = 1; i < d; ++i) hd1 = hd1 * h;
        h = exact_div(gd, hd1);
    }
}

/// True iff gcd(f, f') over the fraction field is a constant.
template <ExactRing R>
bool squarefree_check(const UniPoly<R>& f)
{
    if (f.is_zero()) throw std::invalid_argument("squarefree_check of the zero polynomial");
    if (f.degree() <= 0) return true;
    return subresultant_gcd(f, formal_derivative(f)).degree() == 0;
}

using CycPoly = UniPoly<CycNum>;
using ModPPoly = UniPoly<ModPNum>;
using IntPoly = UniPoly<BigInt>;

} // namespace galois_diff
