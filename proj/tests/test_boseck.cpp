#include <gtest/gtest.h>

#include "generators.hpp"

using namespace galois_diff;

namespace {

std::vector<BranchDatum> hyperelliptic(std::int64_t g) { return {BranchDatum{1, 1, 1, 1, 2 * g + 2}}; }

// Oracle: the closed form for the family, written out independently.
std::int64_t family_t(std::int64_t p, std::int64_t q, std::int64_t l, std::int64_t mu)
{
    std::int64_t fl = 0;
    while ((fl + 1) * p <= mu * l) ++fl;
    return mu * q - fl;
}

} // namespace

TEST(BoseckTable, HyperellipticGenusTwo)
{
    const BoseckTable t = build_boseck_table(2, hyperelliptic(2));
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.t(1), 3);
    const auto basis = boseck_basis(t);
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0].nu, 0);
    EXPECT_EQ(basis[1].nu, 1);
    EXPECT_EQ(basis[0].mu, 1);
    EXPECT_EQ(basis[0].fiber, Fiber::char0);
}

TEST(BoseckTable, FamilyFiveSevenExponents)
{
    const BoseckTable t = family_boseck_table(make_params(PrimeP(5), 7));
    std::vector<std::int64_t> ts;
    for (std::int64_t mu = 1; mu <= 4; ++mu) ts.push_back(t.t(mu));
    EXPECT_EQ(ts, (std::vector<std::int64_t>{2, 3, 5, 6}));
    EXPECT_EQ(boseck_basis(t).size(), 12u);
}

TEST(BoseckTable, SmallestFamilyHasOneDescriptor)
{
    const BoseckTable t = family_boseck_table(make_params(PrimeP(3), 2));
    EXPECT_EQ(t.t(1), 1);
    EXPECT_EQ(t.t(2), 2);
    const auto basis = boseck_basis(t);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0].mu, 2);
    EXPECT_EQ(basis[0].nu, 0);
}

TEST(BoseckTable, GenusZeroGivesEmptyBasis)
{
    const BoseckTable t = build_boseck_table(2, {BranchDatum{1, 1, 1, 1, 2}});
    EXPECT_EQ(t.t(1), 1);
    EXPECT_TRUE(boseck_basis(t).empty());
}

TEST(BoseckTable, RamifiedInfinityRejected)
{
    EXPECT_THROW(build_boseck_table(3, {BranchDatum{1, 1, 1, 1, 1}}), InfinityRamified);
    EXPECT_THROW(build_boseck_table(2, {BranchDatum{1, 1, 1, 1, 5}}), InfinityRamified);
}

TEST(BoseckTable, BadBranchDataRejected)
{
    EXPECT_THROW(build_boseck_table(1, {}), std::invalid_argument);
    EXPECT_THROW(build_boseck_table(3, {BranchDatum{1, 3, 1, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(build_boseck_table(3, {BranchDatum{1, 0, 1, 1, 3}}), std::invalid_argument);
    EXPECT_THROW(build_boseck_table(3, {BranchDatum{1, 1, 1, 1, 0}}), std::invalid_argument);
}

TEST(BoseckTable, NonPrimeDegreeWithPartialRamification)
{
    // y^4 = x^2 (x-1)^2 (x-2)^2 (x-3)^2: every branch has e = 2.
    const BoseckTable t = build_boseck_table(4, {BranchDatum{1, 2, 1, 2, 4}});
    EXPECT_EQ(t.branches.front().ramification(4), 2);
    EXPECT_EQ(t.branches.front().boseck_lambda(4), 1);
    EXPECT_EQ(t.t(2), 0);
}

TEST(BoseckTable, FiberNames)
{
    EXPECT_STREQ(to_string(Fiber::char0), "char0");
    EXPECT_STREQ(to_string(Fiber::charp), "charp");
}

TEST(AsFiber, TwoSimpleBranchesExponents)
{
    const CurveParams c = make_params(PrimeP(5), 7);
    const CharPTable t = asfiber_exponents(c, {1, 1});
    ASSERT_EQ(t.rows.size(), 4u);
    for (const auto& r : t.rows) EXPECT_EQ(r.m.at(1), 4 - r.mu);
}

TEST(AsFiber, ClosedFormExponents)
{
    const CurveParams c = make_params(PrimeP(5), 7);
    const CharPTable t = asfiber_exponents(c, default_multiplicities(c));
    std::vector<std::int64_t> ts, counts;
    for (const auto& r : t.rows) {
        ts.push_back(r.t);
        counts.push_back(r.t - 1);
    }
    // q(p-1-mu) - l + floor((l(1+mu)+p-1)/p)
    EXPECT_EQ(ts, (std::vector<std::int64_t>{6, 5, 3, 2}));
    EXPECT_EQ(counts, (std::vector<std::int64_t>{5, 4, 2, 1}));
    EXPECT_EQ(t.t_excluded, 0);
    EXPECT_EQ(charp_boseck_basis(t).size(), 12u);
    EXPECT_EQ(charp_boseck_basis(t).front().fiber, Fiber::charp);
}

TEST(AsFiber, MultiplicityMismatch)
{
    const CurveParams c = make_params(PrimeP(5), 7);
    EXPECT_THROW(asfiber_exponents(c, {3}), MultiplicityMismatch);
    EXPECT_THROW(asfiber_exponents(c, {}), MultiplicityMismatch);
    EXPECT_THROW(asfiber_exponents(c, {3, -1}), MultiplicityMismatch);
}

TEST(BoseckProperty, FamilyExponentsMatchClosedForm)
{
    for (const auto& c : gd_test::grid()) {
        const BoseckTable t = family_boseck_table(c);
        for (std::int64_t mu = 1; mu < c.pv(); ++mu) EXPECT_EQ(t.t(mu), family_t(c.pv(), c.q, c.l, mu));
        EXPECT_EQ(static_cast<std::int64_t>(boseck_basis(t).size()), genus(c));
    }
}

TEST(BoseckProperty, HyperellipticCountIsGenus)
{
    for (std::int64_t g = 0; g <= 10; ++g) {
        const auto basis = boseck_basis(build_boseck_table(2, hyperelliptic(g)));
        ASSERT_EQ(static_cast<std::int64_t>(basis.size()), g);
        for (std::int64_t nu = 0; nu < g; ++nu) EXPECT_EQ(basis[static_cast<std::size_t>(nu)].nu, nu);
    }
}

TEST(BoseckProperty, SpecialFiberMirrorsGenericFiber)
{
    // t on the special fiber at mu equals t on the generic fiber at p-1-mu.
    for (const auto& c : gd_test::grid()) {
        const BoseckTable t0 = family_boseck_table(c);
        const CharPTable tp = asfiber_exponents(c, default_multiplicities(c));
        for (const auto& r : tp.rows) EXPECT_EQ(r.t, t0.t(c.pv() - 1 - r.mu));
        EXPECT_EQ(charp_boseck_basis(tp).size(), boseck_basis(t0).size());
        EXPECT_EQ(tp.t_excluded, 0);
    }
}

TEST(BoseckProperty, ExponentSumsMatchForEveryProfile)
{
    gd_test::Gen g(301);
    for (int i = 0; i < 300; ++i) {
        const CurveParams c = g.params();
        std::vector<std::int64_t> mult;
        std::int64_t left = c.q;
        while (left > 0) {
            const auto take = g.integer(1, left);
            mult.push_back(take);
            left -= take;
        }
        EXPECT_TRUE(asfiber_exponents(c, mult).exponent_sums_match());
    }
}
