#include <gtest/gtest.h>

#include <zsuper/degree.hpp>
#include <zsuper/errors.hpp>

#include "oracles.hpp"

using namespace zsuper;

TEST(Degree, DigitsPrintAndParse)
{
    const degree d{1, 0, 1};
    EXPECT_EQ(d.arity(), 3u);
    EXPECT_TRUE(d.digit(0));
    EXPECT_FALSE(d.digit(1));
    EXPECT_TRUE(d.digit(2));
    EXPECT_EQ(d.to_string(), "(1,0,1)");
    EXPECT_EQ(degree::parse("(1,0,1)"), d);
    EXPECT_EQ(degree::parse(d.to_string()), d);
}

TEST(Degree, AdditionIsComponentwiseMod2)
{
    EXPECT_EQ((degree{1, 1, 0} + degree{0, 1, 1}), (degree{1, 0, 1}));
    EXPECT_TRUE((degree{1, 1} + degree{1, 1}).is_zero());
}

TEST(Degree, EnumerationIsLexicographic)
{
    const auto all = enumerate_nonzero_degrees(2);
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0], (degree{0, 1}));
    EXPECT_EQ(all[1], (degree{1, 0}));
    EXPECT_EQ(all[2], (degree{1, 1}));
    EXPECT_EQ(enumerate_nonzero_degrees(4).size(), 15u);
    EXPECT_THROW(enumerate_nonzero_degrees(0), error);
}

TEST(Degree, SignsAgreeWithDigitOracle)
{
    for (unsigned n = 1; n <= 4; ++n) {
        auto all = enumerate_nonzero_degrees(n);
        all.push_back(degree::zero(n));
        for (const auto &a : all) {
            for (const auto &b : all) {
                const auto da = oracle::digits_of(a);
                const auto db = oracle::digits_of(b);
                EXPECT_EQ(koszul_sign(a, b), oracle::digit_sign_zsp(da, db));
                EXPECT_EQ(commutation_sign(sign_rule::scalar_product, a, b), oracle::digit_sign_zsp(da, db));
                EXPECT_EQ(commutation_sign(sign_rule::total_parity, a, b), oracle::digit_sign_parity(da, db));
                EXPECT_EQ(commutation_sign(sign_rule::commutative, a, b), 1);
                EXPECT_EQ(koszul_sign(a, b), koszul_sign(b, a));
            }
            EXPECT_EQ(parity(a), scalar_product(a, a));
        }
    }
}

TEST(Degree, SignIsBilinear)
{
    const auto all = enumerate_nonzero_degrees(3);
    for (const auto &a : all) {
        for (const auto &b : all) {
            for (const auto &c : all) {
                EXPECT_EQ(koszul_sign(a + b, c), koszul_sign(a, c) * koszul_sign(b, c));
            }
        }
    }
}

TEST(Degree, DegreesOfTheCubeExample)
{
    // (0,1,0) and (0,0,1) commute under the scalar product, anticommute by
    // total parity.
    const degree a{0, 1, 0};
    const degree b{0, 0, 1};
    EXPECT_EQ(koszul_sign(a, b), 1);
    EXPECT_EQ(commutation_sign(sign_rule::total_parity, a, b), -1);
}

TEST(Degree, SignRuleNames)
{
    EXPECT_EQ(parse_sign_rule("zsp"), sign_rule::scalar_product);
    EXPECT_EQ(parse_sign_rule("parity"), sign_rule::total_parity);
    EXPECT_EQ(parse_sign_rule("comm"), sign_rule::commutative);
    EXPECT_EQ(to_string(sign_rule::total_parity), "parity");
    EXPECT_THROW(parse_sign_rule("super"), error);
}
