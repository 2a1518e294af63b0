#include <gtest/gtest.h>

#include "generators.hpp"

using namespace galois_diff;

namespace {

const PrimeP P3(3);
const PrimeP P5(5);

BinomMatrix bm(std::vector<std::vector<std::int64_t>> rows)
{
    BinomMatrix m(rows.size(), BigInt(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

RepMatrix block_diag(const RepMatrix& a, const RepMatrix& b)
{
    RepMatrix m(a.size() + b.size(), a.zero_element());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b(i, j);
    return m;
}

// Oracle: naive repeated multiplication.
BinomMatrix naive_pow(const BinomMatrix& m, std::int64_t e)
{
    BinomMatrix r = BinomMatrix::identity(m.size(), BigInt(0), BigInt(1));
    for (std::int64_t i = 0; i < e; ++i) r = r * m;
    return r;
}

} // namespace

TEST(BinomMatrix, Examples)
{
    EXPECT_EQ(binom_matrix(1), bm({{1}}));
    EXPECT_EQ(binom_matrix(3), bm({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
    EXPECT_EQ(naive_pow(binom_matrix(3), 2), bm({{1, 0, 0}, {2, 1, 0}, {4, 4, 1}}));
    EXPECT_EQ(naive_pow(binom_matrix(3), 3), bm({{1, 0, 0}, {3, 1, 0}, {9, 6, 1}}));
    EXPECT_THROW(binom_matrix(0), std::invalid_argument);
}

TEST(BinomMatrix, PowerIsBinomialWithWeights)
{
    // A^k has entries C(i, j) k^{i-j}.
    for (std::int64_t k = 0; k <= 6; ++k) {
        const BinomMatrix ak = matrix_pow(binom_matrix(5), static_cast<std::uint64_t>(k), BigInt(1));
        EXPECT_EQ(ak, naive_pow(binom_matrix(5), k));
        for (std::int64_t i = 0; i < 5; ++i)
            for (std::int64_t j = 0; j <= i; ++j) {
                BigInt w = binomial(i, j);
                for (std::int64_t t = 0; t < i - j; ++t) w *= k;
                EXPECT_EQ(ak(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), w);
            }
    }
}

TEST(OrderCheck, Examples)
{
    const OrderReport one = order_check(1, P5);
    EXPECT_TRUE(one.power_is_identity);
    EXPECT_FALSE(one.nontrivial);
    EXPECT_EQ(one.rank_minus_identity, 0u);
    EXPECT_TRUE(order_check(3, P3).holds(3));
    EXPECT_THROW(order_check(0, P5), std::invalid_argument);
    EXPECT_THROW(order_check(6, P5), std::invalid_argument);
}

TEST(OrderCheck, ExactOrderPUpToThirteen)
{
    for (auto p : gd_test::kPrimes)
        for (std::int64_t a = 1; a <= p; ++a) {
            const OrderReport r = order_check(a, PrimeP(p));
            EXPECT_TRUE(r.holds(a)) << p << ' ' << a;
            EXPECT_EQ(r.rank_minus_identity, static_cast<std::size_t>(a - 1));
        }
}

TEST(OrderCheck, NotOfFiniteOrderOverIntegers)
{
    for (auto p : gd_test::kPrimes)
        for (std::int64_t a = 2; a <= p; ++a) {
            const BinomMatrix id = BinomMatrix::identity(static_cast<std::size_t>(a), BigInt(0), BigInt(1));
            EXPECT_FALSE(matrix_pow(binom_matrix(a), static_cast<std::uint64_t>(p), BigInt(1)) == id);
        }
}

TEST(RepMatrix, Examples)
{
    const RepMatrix triv = rep_matrix(0, 0, P5);
    ASSERT_EQ(triv.size(), 1u);
    EXPECT_EQ(triv(0, 0), CycNum(P5, 1));

    const RepMatrix m = rep_matrix(1, 1, P3);
    const CycNum z = zeta(P3), z2 = CycNum::zeta_power(P3, 2);
    EXPECT_EQ(m(0, 0), z);
    EXPECT_TRUE(m(0, 1).is_zero());
    EXPECT_EQ(m(1, 0), z2);
    EXPECT_EQ(m(1, 1), z2);

    const CycNum one(P5, 1);
    EXPECT_EQ(characteristic_polynomial(rep_matrix(1, 2, P5), one), expected_charpoly(1, 2, P5));
    EXPECT_THROW(rep_matrix(1, 4, P5), std::invalid_argument);
    EXPECT_THROW(rep_matrix(1, -1, P5), std::invalid_argument);
}

TEST(RepMatrix, EigenvaluesAreRoots)
{
    // Evaluate the characteristic polynomial at each expected eigenvalue.
    const RepMatrix m = rep_matrix(1, 2, P5);
    const CycPoly chi = characteristic_polynomial(m, CycNum(P5, 1));
    EXPECT_EQ(chi.degree(), 3);
    for (std::int64_t k : {1, 2, 3}) EXPECT_TRUE(evaluate(chi, CycNum::zeta_power(P5, k)).is_zero());
    EXPECT_FALSE(evaluate(chi, CycNum::zeta_power(P5, 4)).is_zero());
}

TEST(SigmaAction, Examples)
{
    const RepMatrix a = sigma_action_matrix(3, 0, P5);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a(0, 0), CycNum::zeta_power(P5, 3));

    const RepMatrix b = sigma_action_matrix(0, 1, P3);
    EXPECT_EQ(b(0, 0), CycNum(P3, 1));
    EXPECT_EQ(b(0, 1), CycNum(P3, 1));
    EXPECT_TRUE(b(1, 0).is_zero());
    EXPECT_EQ(b(1, 1), zeta(P3));

    const RepMatrix c = sigma_action_matrix(2, 2, P5);
    EXPECT_EQ(characteristic_polynomial(c, CycNum(P5, 1)), expected_charpoly(2, 2, P5));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(c(k, k), CycNum::zeta_power(P5, 2 + static_cast<std::int64_t>(k)));
}

TEST(SigmaAction, HasOrderP)
{
    for (std::int64_t a1 = 0; a1 <= 3; ++a1) {
        const RepMatrix m = sigma_action_matrix(1, a1, P5);
        const CycNum one(P5, 1);
        const RepMatrix id = RepMatrix::identity(m.size(), CycNum(P5), one);
        EXPECT_EQ(matrix_pow(m, 5, one), id);
    }
}

TEST(Indecomposable, Examples)
{
    for (auto p : gd_test::kPrimes)
        for (std::int64_t a1 = 0; a1 <= p - 2; ++a1) EXPECT_TRUE(indecomposable_check(rep_matrix(1, a1, PrimeP(p))));
    EXPECT_FALSE(indecomposable_check(block_diag(rep_matrix(1, 1, P5), rep_matrix(2, 1, P5))));
    EXPECT_TRUE(indecomposable_check(RepMatrix::identity(1, CycNum(P5), CycNum(P5, 1))));
}

TEST(Indecomposable, NotUnipotent)
{
    RepMatrix m(1, CycNum(P5));
    m(0, 0) = CycNum(P5, 2);
    EXPECT_THROW(indecomposable_check(m), NotUnipotent);
}

TEST(Charpoly, BerkowitzAgreesWithTriangularDiagonal)
{
    gd_test::Gen g(501);
    for (int i = 0; i < 40; ++i) {
        const PrimeP p = g.prime();
        const auto n = static_cast<std::size_t>(g.integer(1, 4));
        RepMatrix m(n, CycNum(p));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c <= r; ++c) m(r, c) = g.cyc(p, 4);
        CycPoly expected = CycPoly::constant(CycNum(p, 1), CycNum(p));
        for (std::size_t k = 0; k < n; ++k) expected = expected * CycPoly({-m(k, k), CycNum(p, 1)}, CycNum(p));
        EXPECT_EQ(characteristic_polynomial(m, CycNum(p, 1)), expected);
    }
}

TEST(Charpoly, TraceAndDeterminantOfGeneralMatrix)
{
    gd_test::Gen g(502);
    for (int i = 0; i < 50; ++i) {
        BinomMatrix m(3, BigInt(0));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m(r, c) = g.integer(-9, 9);
        const IntPoly chi = characteristic_polynomial(m, BigInt(1));
        const BigInt det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        EXPECT_EQ(chi[3], 1);
        EXPECT_EQ(chi[2], -m.trace());
        EXPECT_EQ(chi[0], -det);
    }
}

TEST(RepProperty, RepAndSigmaMatricesAreEquivalent)
{
    for (auto p : gd_test::kPrimes) {
        const PrimeP pp(p);
        for (std::int64_t a0 = 0; a0 < p; a0 += 3)
            for (std::int64_t a1 = 0; a1 <= p - 2; ++a1) {
                const RepMatrix x = rep_matrix(a0, a1, pp), y = sigma_action_matrix(a0, a1, pp);
                const EquivalenceCertificate cert = certify_equivalence(x, y);
                EXPECT_TRUE(cert.holds()) << p << ' ' << a0 << ' ' << a1;
                EXPECT_EQ(characteristic_polynomial(x, CycNum(pp, 1)), expected_charpoly(a0, a1, pp));
            }
    }
}

TEST(RepProperty, ReductionIndependentOfStartingExponent)
{
    // zeta^{a0} reduces to 1, so the reduction mod lambda forgets a0.
    for (auto p : {3, 5, 7}) {
        const PrimeP pp(p);
        for (std::int64_t a1 = 0; a1 <= p - 2; ++a1) {
            const ModPMatrix base = reduce_mod_lambda(rep_matrix(0, a1, pp));
            EXPECT_EQ(base, reduce_mod_p(binom_matrix(a1 + 1), pp));
            for (std::int64_t a0 = 1; a0 < p; ++a0) {
                EXPECT_EQ(reduce_mod_lambda(rep_matrix(a0, a1, pp)), base);
                EXPECT_EQ(reduce_mod_lambda(sigma_action_matrix(a0, a1, pp)),
                          reduce_mod_lambda(sigma_action_matrix(0, a1, pp)));
            }
        }
    }
}

TEST(RepProperty, DifferentSizesNotEquivalent)
{
    EXPECT_FALSE(certify_equivalence(rep_matrix(1, 1, P5), rep_matrix(1, 2, P5)).holds());
    EXPECT_FALSE(certify_equivalence(rep_matrix(1, 1, P5), rep_matrix(2, 1, P5)).same_charpoly);
}

TEST(IndecompModule, Rank)
{
    EXPECT_EQ((IndecompModule{1, 3, 2}).rank(), 4);
}
