#include <gtest/gtest.h>

#include <zsuper/errors.hpp>
#include <zsuper/text_format.hpp>

#include "fixtures.hpp"

using namespace zsuper;

namespace
{

const char *const square_header = "series s n=2 convention=zsp\nvars x : (0,0), xi : (0,1), eta : (1,0), theta : (1,1)\n";

} // namespace

TEST(TextFormat, ThetaSquaredIsEven)
{
    const auto s = text::parse_series(std::string(square_header) + "value theta^2\n");
    EXPECT_EQ(s.value.homogeneous_degree(), degree::zero(2));
    EXPECT_EQ(s.value.to_string(), "theta^2");
}

TEST(TextFormat, ExpressionGrammar)
{
    const auto t = make_table(2, {"x", "y"}, {{"xi", {0, 1}}, {"theta", {1, 1}}});
    auto e = [&](const char *s) { return text::parse_expression(s, t).to_string(); };
    EXPECT_EQ(e("2x y"), "2*x*y");
    EXPECT_EQ(e("-(x - 1/2)^2"), "-x^2 + x - 1/4");
    EXPECT_EQ(e("3/6*theta*xi"), "-1/2*xi*theta");
    EXPECT_EQ(e("xi*xi + theta"), "theta");
    EXPECT_EQ(e("+x - x"), "0");
    EXPECT_EQ(text::parse_expression("theta^3", t, 2u).to_string(), "0");
}

TEST(TextFormat, InhomogeneousAssignmentIsAGradingViolation)
{
    const auto src = std::string("morphism m n=2 convention=zsp\n"
                                 "vars x : (0,0), xi : (0,1)\n"
                                 "map { x' = x + xi }\n");
    EXPECT_THROW(text::parse_morphism(src), grading_violation);
}

TEST(TextFormat, SyntaxErrorsCarryPositions)
{
    try {
        text::parse_series(std::string(square_header) + "value x + * theta\n");
        FAIL() << "no error";
    } catch (const syntax_error &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 11u);
        EXPECT_EQ(e.token(), "*");
    }
    try {
        text::parse_series(std::string(square_header) + "value x + zeta\n");
        FAIL() << "no error";
    } catch (const syntax_error &e) {
        EXPECT_EQ(e.token(), "zeta");
    }
    EXPECT_THROW(text::parse_series("series s n=2\nvars x : (0,0), xi : (0,1,1)\nvalue x\n"), arity_mismatch);
    EXPECT_THROW(text::parse_series("series s n=2 convention=weird\n"), syntax_error);
    EXPECT_THROW(text::parse_atlas(read_fixture("frame_bundle.bun")), syntax_error);
    EXPECT_THROW(text::parse_series(std::string(square_header) + "value x $ y\n"), syntax_error);
}

TEST(TextFormat, OmittedCoordinatesAreIdentity)
{
    const auto a = text::parse_atlas(read_fixture("theta_shift.atl"));
    const auto &t = a.declared().at({"U", "V"});
    EXPECT_EQ(t.base_image(0).to_string(), "x");
    EXPECT_EQ(t.formal_image(0).to_string(), "xi");
    EXPECT_EQ(t.formal_image(2).to_string(), "theta + xi*eta");
}

TEST(TextFormat, BlocksAreRowMajor)
{
    const auto b = text::parse_bundle(read_fixture("frame_bundle.bun"));
    const auto &m = b.transitions.at({"U", "V"}).blocks.at(degree{0, 1});
    EXPECT_TRUE(m(0, 0).is_constant());
    EXPECT_EQ(m(0, 1), base_polynomial::variable(1, 0));
    EXPECT_TRUE(m(1, 0).is_zero());
}

TEST(TextFormat, BadBlocks)
{
    const std::string head = "bundle b n=1 convention=zsp\nvars x : (0), a : (1), c : (1)\nchart U V\noverlap U V\n";
    EXPECT_THROW(text::parse_bundle(head + "transition U -> V { block (1) [ 1, 0 ; 0 ] }\n"), syntax_error);
    EXPECT_THROW(text::parse_bundle(head + "transition U -> V { block (1) [ 1, a ; 0, 1 ] }\n"), grading_violation);
    EXPECT_THROW(text::parse_bundle(head + "transition U -> V { a' = a }\n"), malformed_atlas);
}

TEST(TextFormat, RoundTripsEveryKind)
{
    for (const auto *name : {"cube_zsp.atl", "cube_parity.atl", "twist_theta.atl", "theta_shift.atl",
                             "three_chart.atl", "tangent_base.atl", "double_bundle_comm.atl", "frame_bundle.bun"}) {
        const auto first = text::print(text::parse(read_fixture(name)));
        const auto second = text::print(text::parse(first));
        EXPECT_EQ(first, second) << name;
    }
    const auto m = text::parse_morphism("morphism m n=1 convention=parity\nvars x : (0), a : (1), b : (1)\n"
                                        "map { x' = 2*x + 1 + a*b; a' = a + x^2*b }\n");
    EXPECT_EQ(text::print(text::parse_morphism(text::print(m))), text::print(m));
    EXPECT_EQ(text::parse_morphism(text::print(m)).map, m.map);

    const auto s = text::parse_series(std::string(square_header) + "value 1/3*x^2*xi*eta - theta^2 + 7\n");
    EXPECT_EQ(text::parse_series(text::print(s)).value, s.value);

    const auto a = text::parse_atlas(read_fixture("three_chart.atl"));
    const auto back = text::parse_atlas(text::print(a));
    EXPECT_EQ(back.declared(), a.declared());
    EXPECT_EQ(*back.table(), *a.table());

    const auto b = text::parse_bundle(read_fixture("frame_bundle.bun"));
    EXPECT_TRUE(blocks_equal(text::parse_bundle(text::print(b)), b));
}

TEST(TextFormat, SplittingDocuments)
{
    const auto src = std::string("splitting s n=2 convention=zsp k=3\n"
                                 "vars x : (0,0), xi : (0,1), eta : (1,0), theta : (1,1)\n"
                                 "morphism U { theta' = theta + xi*eta }\nmorphism V { }\n");
    const auto d = text::parse_splitting(src);
    EXPECT_EQ(d.iso.order, 3u);
    EXPECT_EQ(d.iso.maps.size(), 2u);
    EXPECT_EQ(text::print(text::parse_splitting(text::print(d))), text::print(d));
    EXPECT_EQ(text::detect_kind(src), text::document_kind::splitting);
    EXPECT_THROW(text::parse_splitting("splitting s n=2 convention=zsp\n"), syntax_error);
}
