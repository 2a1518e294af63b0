#pragma once

// Integral representations of a cyclic group of order p.
//
// A_a is the a x a lower-triangular matrix of binomial coefficients
// C(i-1, j-1). V_{a0,a1} is spanned by (lambda X + 1)^i for a0 <= i <= a0+a1,
// with sigma acting by zeta^i on the i-th generator; in the X^k basis it acts
// through X -> zeta X + 1. Both descriptions reduce mod lambda to a single
// Jordan block, which is what makes V_{a0,a1} indecomposable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactnum.hpp"
#include "intmath.hpp"
#include "poly.hpp"

namespace galois_diff {

class NotUnipotent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense square matrix over an exact ring.
template <ExactRing R>
class Matrix {
public:
    Matrix(std::size_t n, R zero) : n_(n), zero_(zero), a_(n * n, std::move(zero)) {}

    static Matrix identity(std::size_t n, R zero, R one)
    {
        Matrix m(n, std::move(zero));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    const R& zero_element() const noexcept { return zero_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Matrix operator*(const Matrix& o) const
    {
        if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(n_, zero_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const R& x = (*this)(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < n_; ++j) r(i, j) = r(i, j) + x * o(k, j);
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    R trace() const
    {
        R t = zero_;
        for (std::size_t i = 0; i < n_; ++i) t = t + (*this)(i, i);
        return t;
    }

    template <class F>
    auto map(F&& f, const std::invoke_result_t<F, const R&>& target_zero) const
    {
        Matrix<std::invoke_result_t<F, const R&>> r(n_, target_zero);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_;
    R zero_;
    std::vector<R> a_;
};

using BinomMatrix = Matrix<BigInt>;
using RepMatrix = Matrix<CycNum>;
using ModPMatrix = Matrix<ModPNum>;

template <ExactRing R>
Matrix<R> matrix_pow(const Matrix<R>& m, std::uint64_t e, const R& one)
{
    Matrix<R> result = Matrix<R>::identity(m.size(), m.zero_element(), one);
    Matrix<R> base = m;
    while (e > 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank(ModPMatrix m)
{
    const std::size_t n = m.size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(piv, j));
        const ModPNum inv = m(r, col).inverse();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m(i, col).is_zero()) continue;
            const ModPNum factor = m(i, col) * inv;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

/// det(T I - M) by Berkowitz's division-free recurrence; coefficients lowest first.
template <ExactRing R>
UniPoly<R> characteristic_polynomial(const Matrix<R>& m, const R& one)
{
    const std::size_t n = m.size();
    const R& zero = m.zero_element();
    if (n == 0) return UniPoly<R>::constant(one, zero);

    // Coefficients of the leading r x r block, highest degree first.
    std::vector<R> poly{one, zero - m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -S C, -S M C, ..., -S M^{r-1} C
        std::vector<R> col{one, zero - m(r, r)};
        std::vector<R> v(r, zero); // M^k C, starting from C
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            R s = zero;
            for (std::size_t i = 0; i < r; ++i) s = s + m(r, i) * v[i];
            col.push_back(zero - s);
            std::vector<R> next(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + m(i, j) * v[j];
            v = std::move(next);
        }
        std::vector<R> out(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= r && j <= i; ++j) out[i] = out[i] + col[i - j] * poly[j];
        poly = std::move(out);
    }
    return UniPoly<R>(std::vector<R>(poly.rbegin(), poly.rend()), zero);
}

/// a_{ij} = C(i-1, j-1), zero above the diagonal.
inline BinomMatrix binom_matrix(std::int64_t a)
{
    if (a < 1) throw std::invalid_argument("binom_matrix needs a >= 1");
    const auto n = static_cast<std::size_t>(a);
    BinomMatrix m(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m(i, j) = BigInt(binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)));
    return m;
}

inline ModPMatrix reduce_mod_p(const BinomMatrix& m, PrimeP p)
{
    return m.map([p](const BigInt& x) { return ModPNum(p, x); }, ModPNum(p, 0));
}

struct OrderReport {
    bool power_is_identity = false; // A^p = I mod p
    bool nontrivial = false;        // A != I mod p
    std::size_t rank_minus_identity = 0;

    /// A^p = I and, for a >= 2, A has exact order p.
    bool holds(std::int64_t a) const { return power_is_identity && (a < 2 || nontrivial); }
};

inline OrderReport order_check(std::int64_t a, PrimeP p)
{
    if (a < 1 || a > p.value()) throw std::invalid_argument("order_check needs 1 <= a <= p");
    const ModPMatrix m = reduce_mod_p(binom_matrix(a), p);
    const ModPNum one(p, 1);
    const ModPMatrix id = ModPMatrix::identity(m.size(), ModPNum(p, 0), one);
    OrderReport r;
    r.power_is_identity = matrix_pow(m, static_cast<std::uint64_t>(p.value()), one) == id;
    r.nontrivial = !(m == id);
    r.rank_minus_identity = rank(m - id);
    return r;
}

/// diag(zeta^{a0}, ..., zeta^{a0+a1}) A_{a1+1}
inline RepMatrix rep_matrix(std::int64_t a0, std::int64_t a1, PrimeP p)
{
    if (a1 < 0 || a1 > p.value() - 2) throw std::invalid_argument("rep_matrix needs 0 <= a1 <= p-2");
    const BinomMatrix A = binom_matrix(a1 + 1);
    RepMatrix m(A.size(), CycNum(p));
    for (std::size_t i = 0; i < A.size(); ++i) {
        const CycNum d = CycNum::zeta_power(p, a0 + static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = d * A(i, j);
    }
    return m;
}

/// Matrix of sigma on (lambda X+1)^{a0} X^k, 0 <= k <= a1; column k is the
/// image of the k-th basis vector. Built by expanding (zeta X + 1)^k.
inline RepMatrix sigma_action_matrix(std::int64_t a0, std::int64_t a1, PrimeP p)
{
    if (a1 < 0 || a1 > p.value() - 2) throw std::invalid_argument("sigma_action_matrix needs 0 <= a1 <= p-2");
    const CycNum zero(p);
    const CycNum one(p, 1);
    const CycNum prefactor = CycNum::zeta_power(p, a0); // sigma (lambda X+1)^{a0}
    const CycPoly image_of_x({one, zeta(p)}, zero);
    const auto n = static_cast<std::size_t>(a1 + 1);
    RepMatrix m(n, zero);
    CycPoly power = CycPoly::constant(one, zero);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) m(j, k) = prefactor * power[j];
        power = power * image_of_x;
    }
    return m;
}

/// Entrywise reduction Z[zeta] -> F_p.
inline ModPMatrix reduce_mod_lambda(const RepMatrix& m)
{
    const PrimeP p = m.zero_element().prime();
    return m.map([](const CycNum& z) { return galois_diff::reduce_mod_lambda(z); }, ModPNum(p, 0));
}

/// Single Jordan block mod lambda: rank(M - I) = size - 1 over F_p.
inline bool indecomposable_check(const RepMatrix& m)
{
    const PrimeP p = m.zero_element().prime();
    const ModPMatrix red = reduce_mod_lambda(m);
    const ModPNum one(p, 1);
    const ModPMatrix id = ModPMatrix::identity(m.size(), ModPNum(p, 0), one);
    const ModPMatrix nil = red - id;
    if (!(matrix_pow(nil, m.size(), one) == ModPMatrix(m.size(), ModPNum(p, 0))))
        throw NotUnipotent("matrix does not reduce to a unipotent matrix mod lambda");
    return rank(nil) + 1 == m.size();
}

/// prod_{j=0}^{a1} (T - zeta^{a0+j})
inline CycPoly expected_charpoly(std::int64_t a0, std::int64_t a1, PrimeP p)
{
    const CycNum zero(p);
    CycPoly r = CycPoly::constant(CycNum(p, 1), zero);
    for (std::int64_t j = 0; j <= a1; ++j)
        r = r * CycPoly({-CycNum::zeta_power(p, a0 + j), CycNum(p, 1)}, zero);
    return r;
}

/// Evidence that two sigma-matrices are equivalent over Quot(Z[zeta]).
struct EquivalenceCertificate {
    bool same_charpoly = false;
    bool first_indecomposable = false;
    bool second_indecomposable = false;
    bool same_power_traces = false;

    bool holds() const { return same_charpoly && first_indecomposable && second_indecomposable && same_power_traces; }
};

inline EquivalenceCertificate certify_equivalence(const RepMatrix& x, const RepMatrix& y)
{
    EquivalenceCertificate c;
    if (x.size() != y.size()) return c;
    const PrimeP p = x.zero_element().prime();
    const CycNum one(p, 1);
    c.same_charpoly = characteristic_polynomial(x, one) == characteristic_polynomial(y, one);
    c.first_indecomposable = indecomposable_check(x);
    c.second_indecomposable = indecomposable_check(y);
    c.same_power_traces = true;
    RepMatrix xp = x, yp = y;
    for (std::size_t k = 1; k <= x.size(); ++k) {
        if (!(xp.trace() == yp.trace())) {
            c.same_power_traces = false;
            break;
        }
        xp = xp * x;
        yp = yp * y;
    }
    return c;
}

/// V_{a0,a1} up to isomorphism: a0 mod p and the length a1. Rank a1 + 1.
struct IndecompModule {
    std::int64_t a0 = 1;
    std::int64_t a1 = 0;
    std::int64_t multiplicity = 0;

    std::int64_t rank() const { return a1 + 1; }
};

} // namespace galois_diff
