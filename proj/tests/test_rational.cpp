#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "slopelab/rational.hpp"

using slopelab::Rat;

TEST(Rat, LowestTermsAndSign) {
    Rat r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rat(0, -7), Rat(0));
    EXPECT_EQ(Rat(0, -7).den(), 1);
}

TEST(Rat, FloorAndFrac) {
    EXPECT_EQ(Rat(-1, 3).floor(), -1);
    EXPECT_EQ(Rat(7, 2).floor(), 3);
    EXPECT_EQ(Rat(-1, 3).frac(), Rat(2, 3));
    EXPECT_EQ(Rat(5).frac(), Rat(0));
}

TEST(Rat, ParseAndPrint) {
    EXPECT_EQ(Rat::parse(" -3/6 "), Rat(-1, 2));
    EXPECT_EQ(Rat::parse("12"), Rat(12));
    EXPECT_EQ(Rat(3, 2).str(), "3/2");
    EXPECT_EQ(Rat(3).str(), "3");
    EXPECT_EQ(Rat(3).fraction_str(), "3/1");
    EXPECT_THROW(Rat::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rat::parse("x"), std::invalid_argument);
}

TEST(Rat, OverflowIsReportedNotWrapped) {
    Rat big(std::numeric_limits<std::int64_t>::max() / 2);
    EXPECT_THROW(big * Rat(4), std::overflow_error);
}

TEST(Rat, FieldAxiomsRandomized) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rat(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rat(1));
        EXPECT_EQ(a < b, (a - b).sign() < 0);
    }
}
