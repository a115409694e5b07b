#include <gtest/gtest.h>

#include <random>

#include <zsuper/errors.hpp>
#include <zsuper/morphism.hpp>
#include <zsuper/text_format.hpp>

#include "random_objects.hpp"

using namespace zsuper;

namespace
{

table_ptr square_table()
{
    return make_table(2, {"x"}, {{"xi", {0, 1}}, {"eta", {1, 0}}, {"theta", {1, 1}}});
}

graded_series expr(const table_ptr &t, const std::string &s)
{
    return text::parse_expression(s, t);
}

} // namespace

TEST(Morphism, PullbackSubstitutesImages)
{
    const auto t = square_table();
    const morphism m(t, t, {expr(t, "x + theta^2"), expr(t, "xi"), expr(t, "eta"), expr(t, "theta + xi*eta")});
    EXPECT_EQ(m.pullback(expr(t, "x^2")), expr(t, "x^2 + 2*x*theta^2 + theta^4"));
    EXPECT_EQ(m.pullback(expr(t, "theta^2")), expr(t, "theta^2 + 2*xi*eta*theta"));
    EXPECT_EQ(m.pullback(expr(t, "theta^2"), 2u), expr(t, "theta^2"));
}

TEST(Morphism, ImagesMustRespectDegrees)
{
    const auto t = square_table();
    EXPECT_THROW(morphism(t, t, {expr(t, "x + xi"), expr(t, "xi"), expr(t, "eta"), expr(t, "theta")}),
                 degree_mismatch);
    EXPECT_THROW(morphism(t, t, {expr(t, "x"), expr(t, "eta"), expr(t, "eta"), expr(t, "theta")}), grading_violation);
    EXPECT_THROW(morphism(t, t, {expr(t, "x")}), arity_mismatch);
}

TEST(Morphism, BaseMapAndLinearBlocks)
{
    const auto t = make_table(1, {"x"}, {{"a", {1}}, {"b", {1}}});
    const morphism m(t, t, {expr(t, "2*x + 1 + a*b"), expr(t, "a + x*b"), expr(t, "b")});
    const auto base = m.base_map();
    ASSERT_EQ(base.size(), 1u);
    EXPECT_EQ(base[0].to_string(t->base_names()), "2*x + 1");
    const auto blocks = m.linear_blocks();
    const auto &blk = blocks.at(degree{1});
    EXPECT_EQ(blk(0, 1).to_string(t->base_names()), "x");
    EXPECT_TRUE(blk.has_polynomial_inverse());
}

TEST(Morphism, RandomizedCalculus)
{
    std::mt19937_64 rng(3);
    const unsigned k = 6;
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = testgen::random_table(rng, 1 + trial % 3, 1 + trial % 2, 3 + trial % 3, sign_rule::scalar_product);
        const auto a = testgen::random_morphism(t, rng, 3);
        const auto b = testgen::random_morphism(t, rng, 3);
        const auto f = testgen::random_homogeneous(t, rng, 3);
        const auto h = testgen::random_homogeneous(t, rng, 3);

        EXPECT_TRUE(a.pullback(f * h, k).equal_mod(a.pullback(f, k) * a.pullback(h, k), k));
        if (const auto d = f.homogeneous_degree()) {
            EXPECT_TRUE(a.pullback(f, k).is_homogeneous_of(*d));
        }
        // J-continuity: order never drops.
        const auto pf = a.pullback(f, k);
        if (!f.order().is_infinite() && !pf.order().is_infinite()) {
            EXPECT_GE(pf.order().value(), f.order().value());
        }
        // compose(a, b) pulls back through b then ... a first.
        EXPECT_TRUE(compose(a, b).pullback(f, k).equal_mod(b.pullback(a.pullback(f, k), k), k));

        const auto inv = invert_mod_order(a, k);
        EXPECT_TRUE(compose(inv, a).equal_mod(morphism::identity(t), k));
        EXPECT_TRUE(compose(a, inv).equal_mod(morphism::identity(t), k));
    }
}

TEST(Morphism, SameImagesSamePullbacks)
{
    std::mt19937_64 rng(5);
    const auto t = testgen::random_table(rng, 2, 1, 4, sign_rule::scalar_product);
    const auto a = testgen::random_morphism(t, rng, 3);
    const morphism b(t, t, a.images());
    for (int i = 0; i < 20; ++i) {
        const auto f = testgen::random_series(t, rng, 3);
        EXPECT_EQ(a.pullback(f, 6u), b.pullback(f, 6u));
    }
}

TEST(Morphism, InversionNeedsInvertibleLinearPart)
{
    const auto t = square_table();
    const morphism degenerate(t, t, {expr(t, "x"), expr(t, "x*xi"), expr(t, "eta"), expr(t, "theta")});
    EXPECT_THROW(invert_mod_order(degenerate, 3), non_invertible_linear_part);
    const morphism squashed(t, t, {expr(t, "x^2"), expr(t, "xi"), expr(t, "eta"), expr(t, "theta")});
    EXPECT_THROW(invert_mod_order(squashed, 3), base_map_not_supported);
}

TEST(Morphism, InverseOfTheThetaTwist)
{
    const auto t = square_table();
    const morphism m(t, t, {expr(t, "x + theta^2"), expr(t, "xi"), expr(t, "eta"), expr(t, "theta + xi*eta")});
    const auto inv = invert_mod_order(m, 4);
    // x = x' - theta^2 with theta = theta' - xi eta: x' - theta'^2 + 2 xi eta theta'
    EXPECT_EQ(inv.base_image(0), expr(t, "x - theta^2 + 2*xi*eta*theta"));
    EXPECT_EQ(inv.formal_image(2), expr(t, "theta - xi*eta"));
}
