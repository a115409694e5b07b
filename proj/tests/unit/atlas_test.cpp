#include <gtest/gtest.h>

#include <zsuper/atlas.hpp>
#include <zsuper/errors.hpp>
#include <zsuper/text_format.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace zsuper;

namespace
{

atlas load(const std::string &name)
{
    return text::parse_atlas(read_fixture(name));
}

std::string xi111_of_composite(const atlas &a)
{
    const auto composite = compose(a.transition("C1", "C2", std::nullopt), a.transition("C0", "C1", std::nullopt));
    return composite.formal_image(0).to_string();
}

// Hand substitution with commuting variables, in the order xi111, xi110,
// xi101, xi100, xi011, xi010, xi001 of the fixture.
std::map<std::vector<unsigned>, rational> commuting_composite()
{
    using namespace oracle;
    const std::size_t n = 7;
    // second step: xi111'' = xi111' + xi101' xi010'
    const auto outer = cpoly_add(cpoly_var(n, 0), cpoly_mul(cpoly_var(n, 2), cpoly_var(n, 5)));
    std::vector<cpoly> first;
    for (std::size_t i = 0; i < n; ++i) {
        first.push_back(cpoly_var(n, i));
    }
    first[0] = cpoly_mul(cpoly_var(n, 2, 2), cpoly_var(n, 5));
    first[2] = cpoly_mul(cpoly_var(n, 3, 3), cpoly_var(n, 6));
    return cpoly_subst(outer, first);
}

} // namespace

TEST(Atlas, CommutingOracleForTheCubeComposite)
{
    const auto c = commuting_composite();
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.at({0, 0, 1, 0, 0, 1, 0}), 2);
    EXPECT_EQ(c.at({0, 0, 0, 1, 0, 1, 1}), 3);
}

TEST(Atlas, CubeCompositeUnderTheScalarProduct)
{
    const auto a = load("cube_zsp.atl");
    EXPECT_EQ(xi111_of_composite(a), "2*xi101*xi010 + 3*xi100*xi010*xi001");
    EXPECT_TRUE(check_cocycle(a, 6).passed());
}

TEST(Atlas, CubeCompositeUnderTotalParity)
{
    const auto plain = load("cube_zsp.atl").with_convention(sign_rule::total_parity);
    EXPECT_EQ(xi111_of_composite(plain), "2*xi101*xi010 - 3*xi100*xi010*xi001");
    const auto r = check_cocycle(plain, 6);
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.failures(), 1u);
    for (const auto &line : r.lines()) {
        if (!line.pass) {
            EXPECT_EQ(line.check, "cocycle C0 C1 C2 xi111'");
            EXPECT_EQ(line.detail, "-6*xi100*xi010*xi001");
        }
    }

    const auto signed_atlas = load("cube_parity.atl");
    EXPECT_EQ(xi111_of_composite(signed_atlas), "-2*xi101*xi010 + 3*xi100*xi010*xi001");
    EXPECT_TRUE(check_cocycle(signed_atlas, 6).passed());
}

TEST(Atlas, MissingReverseTransitionIsComputed)
{
    const auto a = load("three_chart.atl");
    const auto back = a.transition("V", "U", 4u);
    const auto there = a.transition("U", "V", 4u);
    EXPECT_TRUE(compose(back, there).equal_mod(morphism::identity(a.table()), 4));
    EXPECT_EQ(a.transition("U", "U", 4u), morphism::identity(a.table()));
}

TEST(Atlas, InverseChecksBothWays)
{
    auto d = text::parse_atlas_data(read_fixture("tangent_base.atl"));
    EXPECT_TRUE(check_cocycle(atlas(d), 4).passed());
    auto &back = d.transitions.at({"V", "U"});
    back[0] = text::parse_expression("x + xi1*xi2", d.table);
    const auto r = check_cocycle(atlas(d), 4);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.lines()[3].check, "inverse U V x'");
    EXPECT_EQ(r.lines()[3].detail, "2*xi1*xi2");
}

TEST(Atlas, MalformedNerves)
{
    auto d = text::parse_atlas_data(read_fixture("three_chart.atl"));
    auto bad = d;
    bad.triples.push_back({"U", "V", "X"});
    EXPECT_THROW(atlas{bad}, malformed_atlas);
    bad = d;
    bad.overlaps.pop_back();
    EXPECT_THROW(atlas{bad}, malformed_atlas);
    bad = d;
    bad.charts.push_back("U");
    EXPECT_THROW(atlas{bad}, malformed_atlas);
}

TEST(Atlas, SuperizeReinterpretsWithoutSigns)
{
    const auto d = text::parse_atlas_data(read_fixture("double_bundle_comm.atl"));
    for (auto rule : {sign_rule::scalar_product, sign_rule::total_parity}) {
        const auto a = superize(d, rule);
        EXPECT_EQ(a.convention(), rule);
        EXPECT_TRUE(check_cocycle(a, 4).passed());
        EXPECT_EQ(a.declared().at({"U", "W"}).formal_image(2).to_string(), "theta + x*xi*eta + 2*xi*eta");
    }
    auto bad = d;
    bad.transitions.at({"U", "V"})[1] = text::parse_expression("xi + x*eta", bad.table);
    EXPECT_THROW(superize(bad, sign_rule::scalar_product), grading_violation);
}

TEST(Atlas, TangentLift)
{
    const auto lifted = tangent_lift(load("tangent_base.atl"));
    EXPECT_EQ(lifted.arity(), 2u);
    const auto &t = *lifted.table();
    ASSERT_EQ(t.formal_count(), 5u);
    EXPECT_EQ(t.formal()[0].deg, (degree{0, 1}));
    EXPECT_EQ(t.formal()[2].deg, (degree{1, 0}));
    EXPECT_EQ(t.formal()[2].name, "dx");
    EXPECT_EQ(t.formal()[3].deg, (degree{1, 1}));
    EXPECT_EQ(t.formal()[3].name, "dxi1");
    EXPECT_TRUE(check_cocycle(lifted, 4).passed());
    EXPECT_EQ(lifted.declared().at({"U", "V"}).formal_image(2).to_string(), "dx + xi1*dxi2 - xi2*dxi1");
    EXPECT_THROW(tangent_lift(load("twist_theta.atl")), arity_mismatch);
}

TEST(Atlas, DerivationLeibniz)
{
    const auto lifted_table = tangent_table(*load("tangent_base.atl").table());
    const auto d = tangent_differential(lifted_table, 1, 2);
    const auto xi1 = graded_series::generator(lifted_table, 0);
    const auto xi2 = graded_series::generator(lifted_table, 1);
    EXPECT_EQ(d.apply(xi1 * xi2), d.apply(xi1) * xi2 + xi1 * d.apply(xi2));
    EXPECT_TRUE(d.apply(d.apply(xi1 * xi2)).is_zero());
}
