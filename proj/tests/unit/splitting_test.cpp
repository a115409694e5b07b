#include <gtest/gtest.h>

#include <zsuper/errors.hpp>
#include <zsuper/split_model.hpp>
#include <zsuper/splitting.hpp>
#include <zsuper/text_format.hpp>

#include "fixtures.hpp"

using namespace zsuper;

namespace
{

atlas load(const std::string &name)
{
    return text::parse_atlas(read_fixture(name));
}

graded_series expr(const atlas &a, const std::string &s)
{
    return text::parse_expression(s, a.table());
}

bool all_pass(const report &r)
{
    if (!r.passed()) {
        ADD_FAILURE() << r.to_text();
    }
    return r.passed();
}

} // namespace

TEST(Embedding, RawIdentityMismatchOnTheTwist)
{
    const auto a = load("twist_theta.atl");
    auto raw = identity_embedding(a);
    raw = extend_phi(extend_phi(raw));
    const auto w = mismatch_cocycle(raw, a);
    EXPECT_EQ(w.order, 2u);
    EXPECT_EQ(w.components.at({"U", "V"})[0], expr(a, "-theta^2"));
}

TEST(Embedding, CoboundarySolvesTheMismatch)
{
    const auto a = load("twist_theta.atl");
    const auto raw = extend_phi(extend_phi(identity_embedding(a)));
    const auto w = mismatch_cocycle(raw, a);
    const auto eta = coboundary_solve(a, w, {});
    EXPECT_EQ(eta.cech_degree, 0u);
    EXPECT_EQ(eta.components.at({"U"})[0], expr(a, "theta^2"));
    EXPECT_TRUE(eta.components.at({"V"})[0].is_zero());
    const auto fixed = apply_correction(raw, eta);
    EXPECT_TRUE(mismatch_cocycle(fixed, a).is_zero());

    // With V first the other valid coboundary comes out.
    solver_options other;
    other.chart_order = {"V", "U"};
    const auto eta2 = coboundary_solve(a, w, other);
    EXPECT_EQ(eta2.components.at({"V"})[0], expr(a, "-theta^2"));
    EXPECT_TRUE(mismatch_cocycle(apply_correction(raw, eta2), a).is_zero());
}

TEST(Embedding, DerivationOfACochain)
{
    const auto a = load("three_chart.atl");
    cech_cochain c;
    c.cech_degree = 1;
    c.order = 2;
    c.components[{"V", "W"}] = {expr(a, "theta^2")};
    // d/dx_W of x_W^2, along x_W = 2 x_V: 2 * (2x) = 4x.
    const auto f = base_polynomial::variable(1, 0).pow(2);
    EXPECT_EQ(c.apply(a, {"V", "W"}, f), expr(a, "4*x*theta^2"));
}

TEST(Embedding, BuildPhiOnEveryFixture)
{
    for (const auto *name : {"twist_theta.atl", "theta_shift.atl", "three_chart.atl"}) {
        const auto a = load(name);
        const auto phi = build_phi(a, 6, {});
        EXPECT_EQ(phi.order, 6u);
        for (const auto &c : a.charts()) {
            EXPECT_EQ(phi.images.at(c)[0].epsilon(), base_polynomial::variable(1, 0)) << name << " " << c;
        }
        EXPECT_TRUE(all_pass(check_embedding(a, phi))) << name;
    }
    const auto twist = build_phi(load("twist_theta.atl"), 4, {});
    EXPECT_EQ(twist.images.at("U")[0], expr(load("twist_theta.atl"), "x + theta^2"));
}

TEST(Embedding, RefusesCocycleFailures)
{
    const auto a = load("cube_zsp.atl").with_convention(sign_rule::total_parity);
    EXPECT_THROW(build_phi(a, 3, {}), cocycle_failure);
}

TEST(Embedding, DegreeBoundCanBeTooSmall)
{
    auto d = text::parse_atlas_data(read_fixture("twist_theta.atl"));
    d.transitions.at({"U", "V"})[0] = text::parse_expression("x + x^2*theta^2", d.table);
    const atlas a(d);
    solver_options tight;
    tight.degree_bound = 1;
    EXPECT_THROW(build_phi(a, 3, tight), unsolvable_at_bound);
    try {
        build_phi(a, 3, tight);
    } catch (const unsolvable_at_bound &e) {
        EXPECT_EQ(e.bound(), 1u);
    }
    solver_options enough;
    enough.degree_bound = 2;
    EXPECT_TRUE(all_pass(check_embedding(a, build_phi(a, 3, enough))));
}

TEST(Embedding, ChartOrderMustBeAPermutation)
{
    const auto a = load("twist_theta.atl");
    solver_options bad;
    bad.chart_order = {"U"};
    EXPECT_THROW(build_phi(a, 3, bad), malformed_atlas);
}

TEST(Splitting, TwistAtlas)
{
    const auto a = load("twist_theta.atl");
    const auto iso = build_splitting_iso(a, 6, {});
    EXPECT_TRUE(all_pass(verify_splitting(a, iso, 6)));
    EXPECT_EQ(iso.maps.at("U").base_image(0), expr(a, "x + theta^2"));
    EXPECT_EQ(iso.maps.at("V"), morphism::identity(a.table()));
    // The linearization is the trivial bundle.
    for (const auto &[key, tr] : linearize(a).transitions) {
        EXPECT_EQ(tr.base_map[0], base_polynomial::variable(1, 0));
        for (const auto &[deg, m] : tr.blocks) {
            EXPECT_EQ(m, poly_matrix::identity(1, 1));
        }
    }
}

TEST(Splitting, ShiftAtlasAndTheIdentity)
{
    const auto a = load("theta_shift.atl");
    const auto iso = build_splitting_iso(a, 6, {});
    EXPECT_TRUE(all_pass(verify_splitting(a, iso, 6)));
    EXPECT_EQ(iso.maps.at("U").formal_image(2), expr(a, "theta + xi*eta"));

    const auto r = verify_splitting(a, identity_splitting(a, 6), 6);
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.failures(), 1u);
    for (const auto &line : r.lines()) {
        if (!line.pass) {
            EXPECT_EQ(line.check, "intertwining U V theta'");
            EXPECT_EQ(line.detail, "xi*eta");
        }
    }
}

TEST(Splitting, PermutedUnknownsGiveAnotherSplitting)
{
    const auto a = load("theta_shift.atl");
    const auto first = build_splitting_iso(a, 6, {});
    solver_options reversed;
    reversed.chart_order = {"V", "U"};
    const auto second = build_splitting_iso(a, 6, reversed);
    EXPECT_TRUE(all_pass(verify_splitting(a, second, 6)));
    EXPECT_NE(first.maps.at("U"), second.maps.at("U"));
    EXPECT_EQ(second.maps.at("V").formal_image(2), expr(a, "theta - xi*eta"));
}

TEST(Splitting, ThreeCharts)
{
    const auto a = load("three_chart.atl");
    const auto iso = build_splitting_iso(a, 5, {});
    EXPECT_TRUE(all_pass(verify_splitting(a, iso, 5)));
}

TEST(Splitting, NontrivialLinearPart)
{
    // Fiber block [[1, x], [0, 1]] and a quadratic correction.
    const auto a = text::parse_atlas(R"(atlas frame n=2 convention=zsp
vars x : (0,0), xi1 : (0,1), xi2 : (0,1), eta : (1,0), theta : (1,1)
chart U V
overlap U V
transition U -> V {
  x' = x + 1 + theta^2
  xi1' = xi1 + x*xi2 + eta*theta
  eta' = 2*eta + xi1*theta
  theta' = -theta + xi1*eta
}
)");
    const auto iso = build_splitting_iso(a, 4, {});
    EXPECT_TRUE(all_pass(verify_splitting(a, iso, 4)));
}

TEST(Splitting, VerifyAtLowerOrder)
{
    const auto a = load("theta_shift.atl");
    const auto iso = build_splitting_iso(a, 6, {});
    EXPECT_TRUE(all_pass(verify_splitting(a, iso, 3)));
    // The identity is a valid splitting mod J^2.
    EXPECT_TRUE(all_pass(verify_splitting(a, identity_splitting(a, 1), 1)));
}
