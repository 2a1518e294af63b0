#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace galois_diff {

// Floor and ceiling of n / d for d > 0, correct for negative n.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d)
{
    if (d <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    std::int64_t q = n / d;
    if ((n % d) != 0 && n < 0) --q;
    return q;
}

constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d)
{
    return -floor_div(-n, d);
}

constexpr std::int64_t mod_floor(std::int64_t n, std::int64_t d)
{
    return n - d * floor_div(n, d);
}

constexpr bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace galois_diff
