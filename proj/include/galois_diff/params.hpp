#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "exactnum.hpp"
#include "intmath.hpp"

namespace galois_diff {

class ConductorDivisible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadConductor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The cover data (p, m, q, l) with m = p*q - l, 1 <= l <= p-1.
struct CurveParams {
    PrimeP p;
    std::int64_t m;
    std::int64_t q;
    std::int64_t l;

    std::int64_t pv() const noexcept { return p.value(); }

    friend bool operator==(const CurveParams& a, const CurveParams& b) noexcept
    {
        return a.p == b.p && a.m == b.m && a.q == b.q && a.l == b.l;
    }
};

/// Split the conductor as m = p*q - l.
inline CurveParams make_params(PrimeP p, std::int64_t m)
{
    if (m < 1) throw BadConductor("conductor must be positive, got " + std::to_string(m));
    if (m % p.value() == 0)
        throw ConductorDivisible("conductor " + std::to_string(m) + " is divisible by p = " +
                                 std::to_string(p.value()));
    const std::int64_t q = ceil_div(m, p.value());
    return CurveParams{p, m, q, p.value() * q - m};
}

/// Parameters from (p, q, l) directly; used by grid sweeps.
inline CurveParams params_from_ql(PrimeP p, std::int64_t q, std::int64_t l)
{
    if (q < 1 || l < 1 || l > p.value() - 1)
        throw std::invalid_argument("need q >= 1 and 1 <= l <= p-1");
    return make_params(p, p.value() * q - l);
}

/// Number of free deformation parameters of the OSS factor.
inline std::int64_t oss_dim(const CurveParams& c) { return c.l == 1 ? c.q : c.q - 1; }

} // namespace galois_diff
