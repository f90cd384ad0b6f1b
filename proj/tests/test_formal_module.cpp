#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slopelab/generators.hpp"
#include "slopelab/nearby.hpp"

using namespace testutil;
using slopelab::SlopeMultiset;

namespace {
const CycloRat one(1);
}

TEST(Slope, Examples) {
    EXPECT_EQ(slopelab::slope(El(1, {{-3, one}}).factors()[0]), Rat(3));
    EXPECT_EQ(slopelab::slope(El(2, {{-3, one}}).factors()[0]), Rat(3, 2));
    EXPECT_EQ(slopelab::slope(Reg(2).factors()[0]), Rat(0));
}

TEST(Slopes, Examples) {
    EXPECT_EQ(slopelab::slopes(El(1, {{-3, one}}) + Reg(2)), (SlopeMultiset{{Rat(3), 1}, {Rat(0), 2}}));
    EXPECT_EQ(slopelab::slopes(El(2, {{-1, one}})), (SlopeMultiset{{Rat(1, 2), 2}}));
    EXPECT_TRUE(slopelab::slopes(FormalModule()).empty());
}

TEST(Irregularity, Examples) {
    EXPECT_EQ(slopelab::irregularity(El(1, {{-3, one}})), Rat(3));
    EXPECT_EQ(slopelab::irregularity(El(2, {{-3, one}})), Rat(3));
    EXPECT_EQ(slopelab::irregularity(Reg(5)), Rat(0));
}

TEST(Canonical, GaloisConjugatesAreEqual) {
    // El(2, u^-1) and El(2, -u^-1) are the same module
    EXPECT_EQ(El(2, {{-1, one}}), El(2, {{-1, CycloRat(-1)}}));
    EXPECT_EQ(El(3, {{-2, one}, {-1, CycloRat(2)}}),
              El(3, {{-2, CycloRat::zeta(3, 2 * 2)}, {-1, CycloRat(2) * CycloRat::zeta(3, 2)}}));
    EXPECT_NE(El(1, {{-1, one}}), El(1, {{-1, CycloRat(-1)}}));
}

TEST(Canonical, RamificationReduction) {
    // El(2, u^-2) = El(1, u^-1) (x) Reg{0, 1/2}
    EXPECT_EQ(El(2, {{-2, one}}), El(1, {{-1, one}}, {Rat(0), Rat(1, 2)}));
    EXPECT_EQ(El(2, {}, 1), Reg({Rat(0), Rat(1, 2)}));
}

TEST(Canonical, IsomorphicFactorsMerge) {
    auto m = El(1, {{-2, one}}) + El(1, {{-2, one}}, {Rat(1, 3)});
    ASSERT_EQ(m.factors().size(), 1u);
    EXPECT_EQ(m.factors()[0].reg().rank(), 2);
    EXPECT_EQ((Reg(1) + Reg(0)).factors().size(), 1u);
}

TEST(Dual, Examples) {
    EXPECT_EQ(slopelab::dual(El(1, {{-2, one}})), El(1, {{-2, CycloRat(-1)}}));
    EXPECT_EQ(slopelab::dual(Reg({Rat(1, 3)})), Reg({Rat(2, 3)}));
    slopelab::Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        auto m = slopelab::random_module(rng);
        EXPECT_EQ(slopelab::dual(slopelab::dual(m)), m) << m.str();
    }
}

TEST(Pullback, Examples) {
    EXPECT_EQ(slopelab::pullback(2, El(1, {{-1, one}})), El(1, {{-2, one}}));
    EXPECT_EQ(slopelab::pullback(2, El(2, {{-1, one}})), El(1, {{-1, one}}) + El(1, {{-1, CycloRat(-1)}}));
    EXPECT_EQ(slopelab::pullback(3, Reg({Rat(1, 3), Rat(1, 2)})), Reg({Rat(0), Rat(1, 2)}));
}

TEST(Pushforward, Examples) {
    EXPECT_EQ(slopelab::pushforward(2, El(3, {{-1, one}})), El(6, {{-1, one}}));
    auto m = El(2, {{-3, one}}) + Reg(1);
    EXPECT_EQ(slopelab::pushforward(1, m), m);
    EXPECT_EQ(slopelab::pushforward(2, Reg({Rat(0)})), Reg({Rat(0), Rat(1, 2)}));
}

TEST(Tensor, Examples) {
    EXPECT_EQ(slopelab::tensor(El(1, {{-2, one}}), El(1, {{-2, CycloRat(-1)}})), Reg(1));
    auto t = slopelab::tensor(El(1, {{-2, one}}), El(1, {{-3, one}}));
    EXPECT_EQ(t, El(1, {{-3, one}, {-2, one}}));
    EXPECT_EQ(slopelab::max_slope(t), Rat(3));
    // El(2,u^-1)^(x)2 = El(2, 2u^-1) + Reg{0,1/2}
    EXPECT_EQ(slopelab::tensor(El(2, {{-1, one}}), El(2, {{-1, one}})),
              El(2, {{-1, CycloRat(2)}}) + Reg({Rat(0), Rat(1, 2)}));
}

TEST(Tensor, Properties) {
    slopelab::Rng rng(2);
    slopelab::ModuleShape small{4, 4, 2, 2};
    for (int i = 0; i < 60; ++i) {
        auto a = slopelab::random_module(rng, small), b = slopelab::random_module(rng, small),
             c = slopelab::random_module(rng, small);
        auto ab = slopelab::tensor(a, b);
        EXPECT_EQ(ab, slopelab::tensor(b, a));
        EXPECT_EQ(slopelab::tensor(ab, c), slopelab::tensor(a, slopelab::tensor(b, c)));
        EXPECT_EQ(ab.rank(), a.rank() * b.rank());
        EXPECT_EQ(slopelab::tensor(a, slopelab::unit_module()), a);
    }
}

TEST(PullPush, SlopeScaling) {
    slopelab::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto m = slopelab::random_module(rng);
        std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 6);
        auto pb = slopelab::pullback(q, m);
        auto pf = slopelab::pushforward(q, m);
        EXPECT_EQ(pb.rank(), m.rank());
        EXPECT_EQ(pf.rank(), q * m.rank());
        SlopeMultiset up, down;
        for (const auto& [r, mult] : slopelab::slopes(m)) {
            up[r * Rat(q)] += mult;
            down[r / Rat(q)] += q * mult;
        }
        EXPECT_EQ(slopelab::slopes(pb), up);
        EXPECT_EQ(slopelab::slopes(pf), down);
        EXPECT_EQ(slopelab::slopes(slopelab::dual(m)), slopelab::slopes(m));
    }
}

TEST(PullPush, PullbackComposes) {
    slopelab::Rng rng(4);
    slopelab::ModuleShape small{4, 4, 2, 2};
    for (int i = 0; i < 40; ++i) {
        auto m = slopelab::random_module(rng, small);
        EXPECT_EQ(slopelab::pullback(2, slopelab::pullback(3, m)), slopelab::pullback(6, m));
        // projection formula: push(p, M (x) pull(p, N)) = push(p, M) (x) N
        auto n = slopelab::random_module(rng, small);
        EXPECT_EQ(slopelab::pushforward(2, slopelab::tensor(m, slopelab::pullback(2, n))),
                  slopelab::tensor(slopelab::pushforward(2, m), n));
    }
}
