#include <gtest/gtest.h>

#include "critlab/bounds.hpp"

using namespace critlab;

namespace {

std::optional<bound_row> row(const std::vector<bound_row>& rows, const std::string& name)
{
    for (const auto& r : rows)
        if (r.name == name)
            return r;
    return std::nullopt;
}

double approx(const bound_row& r) { return r.approx.convert_to<double>(); }

} // namespace

TEST(Theorem1, PublishedValues)
{
    EXPECT_EQ(bound_theorem1(66).value.to_decimal(5), "45.54248");
    EXPECT_EQ(bound_theorem1(65).value.to_decimal(5), "44.89838");
    EXPECT_EQ(bound_theorem1(56).value.to_decimal(5), "38.67351");
    EXPECT_EQ(bound_theorem1(66).regime, "delta>=66");
    EXPECT_EQ(bound_theorem1(65).regime, "delta=65");
    EXPECT_EQ(bound_theorem1(60).regime, "56<=delta<=64");
    EXPECT_TRUE(bound_theorem1(56).beats_two_thirds);
    EXPECT_GT(bound_theorem1(56).value, exact_real::fraction(2 * 58, 3));
    EXPECT_THROW(bound_theorem1(55), precondition_error);
}

TEST(Theorem1, BeatsTwoThirdsEverywhere)
{
    for (long long d = 56; d <= 10000; ++d)
        ASSERT_TRUE(bound_theorem1(d).beats_two_thirds) << d;
}

TEST(Chain, RouteChoice)
{
    auto r66 = bound_chain(66, 18);
    EXPECT_EQ(r66.route, chain_route::first);
    EXPECT_EQ(r66.slack.sign(), 1);
    auto r64 = bound_chain(64, 18);
    EXPECT_EQ(r64.q.q, exact_real(46));
    EXPECT_EQ(r64.slack.sign(), 0);
    EXPECT_EQ(r64.route, chain_route::second);
    EXPECT_FALSE(r64.error.has_value());
}

TEST(Chain, IntermediatesAt66And65)
{
    auto r66 = bound_chain(66);
    EXPECT_EQ(r66.f2.to_decimal(5), "-244.43905");
    auto r65 = bound_chain(65);
    EXPECT_EQ(r65.f2.to_decimal(5), "-1.15068");
    EXPECT_EQ(r65.a, exact_real(2));
    EXPECT_EQ(r65.q_star, exact_real::fraction(3 * 65, 4));
    const auto r2 = exact_real::sqrt2();
    EXPECT_EQ(r66.q_star, 2 * r2 * 66 / (2 * r2 + 1));
    EXPECT_EQ(r66.a, 1 + 1 / (2 * r2 + 1));
}

TEST(Chain, NeverBelowPublishedLines)
{
    for (long long d = 56; d <= 70; ++d) {
        auto r = bound_chain(d, 18);
        ASSERT_FALSE(r.error.has_value()) << d;
        EXPECT_GE(r.bound, bound_theorem1(d).value - exact_real::fraction(1, 1000)) << d;
    }
}

TEST(Chain, DivisionGuard)
{
    // Delta = 56 has q = 40, so c = 16 makes Delta - q - c vanish; the second
    // route still evaluates.
    auto r = bound_chain(56, 16);
    EXPECT_EQ(r.slack.sign(), 0);
    EXPECT_FALSE(r.error.has_value());
    EXPECT_THROW(bound_chain(56, 0), precondition_error);
}

TEST(Table, SpecExamples)
{
    auto t15 = bound_table(15);
    auto h = row(t15, "haile");
    ASSERT_TRUE(h);
    EXPECT_FALSE(h->exact.has_value());
    EXPECT_NEAR(approx(*h), 10.19258, 1e-5);
    auto t8 = bound_table(8);
    auto w = row(t8, "woodall-2/3D+1");
    ASSERT_TRUE(w && w->exact);
    EXPECT_EQ(*w->exact, exact_real::fraction(19, 3));
    EXPECT_FALSE(row(t8, "woodall-2/3(D+2)"));
    EXPECT_FALSE(row(t8, "theorem1"));
}

TEST(Table, Theorem1RowLeadsAt56)
{
    auto t = bound_table(56);
    auto th = row(t, "theorem1");
    ASSERT_TRUE(th);
    for (const auto& r : t)
        if (r.name != "theorem1")
            EXPECT_GT(th->approx, r.approx) << r.name;
}

TEST(Table, SandersZhaoExactWhenSquare)
{
    // 2 * 13 - 1 = 25.
    auto r = row(bound_table(13), "sanders-zhao");
    ASSERT_TRUE(r && r->exact);
    EXPECT_EQ(*r->exact, exact_real(9));
}

TEST(Table, ConjectureRowNeedsN)
{
    EXPECT_FALSE(row(bound_table(10), "conjecture"));
    auto r = row(bound_table(10, 12), "conjecture");
    ASSERT_TRUE(r && r->exact);
    EXPECT_EQ(*r->exact, exact_real::fraction(37, 4));
    EXPECT_THROW(bound_table(1), precondition_error);
}

TEST(Table, HaileRanges)
{
    EXPECT_TRUE(row(bound_table(9), "haile"));
    EXPECT_TRUE(row(bound_table(10), "haile"));
    EXPECT_FALSE(row(bound_table(8), "haile"));
    EXPECT_EQ(*row(bound_table(9), "haile")->exact, exact_real::fraction(33, 5));
}
