#pragma once

// Exact arithmetic in Z, F_p and the cyclotomic ring Z[zeta_p].
//
// Elements of Z[zeta_p] are stored in the power basis 1, zeta, ..., zeta^{p-2}.
// The relation 1 + zeta + ... + zeta^{p-1} = 0 is applied after every
// operation, so two elements are equal iff their coordinates are equal.
// lambda = zeta - 1 generates the unique prime above p, and reduction
// modulo lambda is the ring map zeta -> 1 onto F_p.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "intmath.hpp"

namespace galois_diff {

using BigInt = boost::multiprecision::cpp_int;

class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline BigInt scale(const BigInt& x, std::int64_t k) { return x * k; }

/// An odd prime. Construction fails for anything else.
class PrimeP {
public:
    explicit PrimeP(std::int64_t value) : value_(value)
    {
        if (value < 3 || !is_prime(value))
            throw std::invalid_argument("p must be an odd prime, got " + std::to_string(value));
    }

    std::int64_t value() const noexcept { return value_; }
    operator std::int64_t() const noexcept { return value_; }

    friend bool operator==(PrimeP a, PrimeP b) noexcept { return a.value_ == b.value_; }

private:
    std::int64_t value_;
};

/// Residue class in F_p.
class ModPNum {
public:
    ModPNum(PrimeP p, std::int64_t v) : p_(p), r_(mod_floor(v, p.value())) {}
    ModPNum(PrimeP p, const BigInt& v) : p_(p)
    {
        BigInt r = v % p.value();
        if (r < 0) r += p.value();
        r_ = static_cast<std::int64_t>(r);
    }

    PrimeP prime() const noexcept { return p_; }
    std::int64_t residue() const noexcept { return r_; }
    bool is_zero() const noexcept { return r_ == 0; }

    ModPNum operator+(const ModPNum& o) const { check(o); return {p_, r_ + o.r_}; }
    ModPNum operator-(const ModPNum& o) const { check(o); return {p_, r_ - o.r_}; }
    ModPNum operator*(const ModPNum& o) const { check(o); return {p_, r_ * o.r_}; }
    ModPNum operator-() const { return {p_, -r_}; }
    ModPNum& operator+=(const ModPNum& o) { return *this = *this + o; }
    ModPNum& operator-=(const ModPNum& o) { return *this = *this - o; }
    ModPNum& operator*=(const ModPNum& o) { return *this = *this * o; }

    ModPNum pow(std::uint64_t e) const
    {
        ModPNum result(p_, 1), base = *this;
        while (e > 0) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    ModPNum inverse() const
    {
        if (r_ == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(static_cast<std::uint64_t>(p_.value() - 2));
    }

    ModPNum operator/(const ModPNum& o) const { check(o); return *this * o.inverse(); }

    friend bool operator==(const ModPNum& a, const ModPNum& b) noexcept
    {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ModPNum& x) { return os << x.r_; }

private:
    void check(const ModPNum& o) const
    {
        if (!(o.p_ == p_)) throw std::invalid_argument("F_p arithmetic across different primes");
    }

    PrimeP p_;
    std::int64_t r_;
};

inline bool is_zero(const ModPNum& x) { return x.is_zero(); }
inline ModPNum scale(const ModPNum& x, std::int64_t k) { return x * ModPNum(x.prime(), k); }
inline ModPNum exact_div(const ModPNum& a, const ModPNum& b) { return a / b; }

/// Element of Z[zeta_p], coordinates little-endian in powers of zeta.
class CycNum {
public:
    explicit CycNum(PrimeP p) : p_(p), c_(static_cast<std::size_t>(p.value() - 1)) {}

    CycNum(PrimeP p, const BigInt& n) : CycNum(p) { c_[0] = n; }
    CycNum(PrimeP p, std::int64_t n) : CycNum(p, BigInt(n)) {}

    static CycNum from_coords(PrimeP p, std::vector<BigInt> coords)
    {
        if (coords.size() != static_cast<std::size_t>(p.value() - 1))
            throw std::invalid_argument("CycNum needs exactly p-1 coordinates");
        CycNum z(p);
        z.c_ = std::move(coords);
        return z;
    }

    /// zeta^k for any integer k.
    static CycNum zeta_power(PrimeP p, std::int64_t k)
    {
        std::vector<BigInt> wide(static_cast<std::size_t>(p.value()));
        wide[static_cast<std::size_t>(mod_floor(k, p.value()))] = 1;
        return from_wide(p, std::move(wide));
    }

    PrimeP prime() const noexcept { return p_; }
    const std::vector<BigInt>& coords() const noexcept { return c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// True when the element lies in Z.
    bool is_integer() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    CycNum operator+(const CycNum& o) const
    {
        check(o);
        CycNum r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    CycNum operator-(const CycNum& o) const
    {
        check(o);
        CycNum r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }

    CycNum operator-() const
    {
        CycNum r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    CycNum operator*(const CycNum& o) const
    {
        check(o);
        const auto p = static_cast<std::size_t>(p_.value());
        std::vector<BigInt> wide(p);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                wide[(i + j) % p] += c_[i] * o.c_[j];
            }
        }
        return from_wide(p_, std::move(wide));
    }

    CycNum operator*(const BigInt& k) const
    {
        CycNum r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    /// Galois conjugate sigma_j : zeta -> zeta^j, gcd(j, p) = 1.
    CycNum conjugate(std::int64_t j) const
    {
        const auto p = p_.value();
        if (mod_floor(j, p) == 0) throw std::invalid_argument("conjugate: exponent divisible by p");
        std::vector<BigInt> wide(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < c_.size(); ++i)
            wide[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * j, p))] += c_[i];
        return from_wide(p_, std::move(wide));
    }

    /// Product of all conjugates other than the identity.
    CycNum conjugate_cofactor() const
    {
        CycNum r(p_, 1);
        for (std::int64_t j = 2; j < p_.value(); ++j) r *= conjugate(j);
        return r;
    }

    /// Field norm to Q; always a rational integer.
    BigInt norm() const
    {
        CycNum n = *this * conjugate_cofactor();
        if (!n.is_integer()) throw std::logic_error("norm did not land in Z");
        return n.c_[0];
    }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycNum& z)
    {
        bool first = true;
        for (std::size_t i = 0; i < z.c_.size(); ++i) {
            const BigInt& x = z.c_[i];
            if (x.is_zero()) continue;
            BigInt mag = x < 0 ? BigInt(-x) : x;
            if (first) {
                if (x < 0) os << '-';
            } else {
                os << (x < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << mag;
            } else {
                if (mag != 1) os << mag << '*';
                os << 'z';
                if (i > 1) os << '^' << i;
            }
            first = false;
        }
        if (first) os << '0';
        return os;
    }

private:
    // Reduce a length-p vector in Z[x]/(x^p - 1) onto the power basis.
    static CycNum from_wide(PrimeP p, std::vector<BigInt> wide)
    {
        CycNum r(p);
        const BigInt top = wide.back();
        for (std::size_t i = 0; i + 1 < wide.size(); ++i) r.c_[i] = wide[i] - top;
        return r;
    }

    void check(const CycNum& o) const
    {
        if (!(o.p_ == p_)) throw std::invalid_argument("Z[zeta] arithmetic across different primes");
    }

    PrimeP p_;
    std::vector<BigInt> c_;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum scale(const CycNum& x, std::int64_t k) { return x * BigInt(k); }

inline CycNum zeta(PrimeP p) { return CycNum::zeta_power(p, 1); }
inline CycNum lambda(PrimeP p) { return zeta(p) - CycNum(p, 1); }

inline CycNum pow(const CycNum& base, std::uint64_t e)
{
    CycNum result(base.prime(), 1), b = base;
    while (e > 0) {
        if (e & 1U) result *= b;
        b *= b;
        e >>= 1U;
    }
    return result;
}

/// Ring map Z[zeta_p] -> F_p with zeta -> 1.
inline ModPNum reduce_mod_lambda(const CycNum& z)
{
    BigInt s = 0;
    for (const auto& x : z.coords()) s += x;
    return ModPNum(z.prime(), s);
}

namespace detail {

// One exact division by lambda, or nullopt when lambda does not divide z.
inline std::optional<CycNum> div_lambda_once(const CycNum& z)
{
    const PrimeP p = z.prime();
    const auto& c = z.coords();
    BigInt s = 0;
    for (const auto& x : c) s += x;
    if (s % p.value() != 0) return std::nullopt;

    // Z'(x) = Z(x) + k * Phi_p(x) vanishes at x = 1; divide it by (x - 1).
    const BigInt k = -s / p.value();
    const auto n = static_cast<std::size_t>(p.value());
    std::vector<BigInt> zp(n, k);
    for (std::size_t i = 0; i < c.size(); ++i) zp[i] += c[i];

    std::vector<BigInt> w(n - 1);
    w[n - 2] = zp[n - 1];
    for (std::size_t i = n - 2; i >= 1; --i) w[i - 1] = zp[i] + w[i];
    if (zp[0] != -w[0]) throw std::logic_error("synthetic division by lambda left a remainder");
    return CycNum::from_coords(p, std::move(w));
}

} // namespace detail

/// Largest k with lambda^k | z; empty for z = 0 (infinite valuation).
inline std::optional<std::int64_t> lambda_valuation(const CycNum& z)
{
    if (z.is_zero()) return std::nullopt;
    std::int64_t k = 0;
    CycNum cur = z;
    while (auto next = detail::div_lambda_once(cur)) {
        cur = std::move(*next);
        ++k;
    }
    return k;
}

/// w with w * lambda^k = z.
inline CycNum exact_div_lambda(const CycNum& z, std::int64_t k)
{
    if (k < 0) throw std::invalid_argument("exact_div_lambda: negative exponent");
    CycNum cur = z;
    for (std::int64_t i = 0; i < k; ++i) {
        auto next = detail::div_lambda_once(cur);
        if (!next)
            throw NotDivisible("lambda^" + std::to_string(k) + " does not divide the element");
        cur = std::move(*next);
    }
    return cur;
}

/// Exact quotient a / b in Z[zeta_p]. Uses a/b = a * prod_{j>1} sigma_j(b) / N(b).
inline CycNum exact_div(const CycNum& a, const CycNum& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero in Z[zeta]");
    CycNum num = a;
    BigInt den;
    if (b.is_integer()) {
        den = b.coords()[0];
    } else {
        const CycNum cof = b.conjugate_cofactor();
        num = a * cof;
        const CycNum n = b * cof;
        den = n.coords()[0];
    }
    std::vector<BigInt> out(num.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        BigInt q, r;
        boost::multiprecision::divide_qr(num.coords()[i], den, q, r);
        if (!r.is_zero()) throw NotDivisible("quotient is not in Z[zeta]");
        out[i] = std::move(q);
    }
    return CycNum::from_coords(a.prime(), std::move(out));
}

inline BigInt exact_div(const BigInt& a, const BigInt& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero in Z");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (!r.is_zero()) throw NotDivisible("integer quotient is not exact");
    return q;
}

} // namespace galois_diff
