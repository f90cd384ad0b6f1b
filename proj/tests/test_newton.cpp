#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "slopelab/fixtures.hpp"
#include "slopelab/newton.hpp"

using namespace testutil;
using slopelab::Laurent;
using slopelab::OperatorTerm;
using slopelab::SlopeMultiset;

namespace {

Laurent<Rat> x(std::int64_t k, Rat c = Rat(1)) { return Laurent<Rat>::monomial(k, c); }

// Independent oracle: lower convex hull of the points by brute force. For
// each abscissa u in [i*, order] the polygon height is the minimum over
// pairs of points of the chord through them, or a point's own height.
SlopeMultiset hull_oracle(const std::vector<OperatorTerm>& op) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (const auto& [i, a] : op) pts.emplace_back(i, *a.valuation() - i);
    std::int64_t order = 0, hmin = pts[0].second;
    for (auto& [i, h] : pts) {
        order = std::max(order, i);
        hmin = std::min(hmin, h);
    }
    std::int64_t istar = 0;
    for (auto& [i, h] : pts)
        if (h == hmin) istar = std::max(istar, i);
    auto height = [&](std::int64_t u) {
        // min over points with i >= u and chords spanning u
        Rat best(1 << 30);
        for (auto& [i, h] : pts)
            if (i == u) best = std::min(best, Rat(h));
        for (auto& [i, h] : pts)
            for (auto& [j, k] : pts)
                if (i < u && u < j) best = std::min(best, Rat(h) + Rat(k - h) * Rat(u - i, j - i));
        return best;
    };
    SlopeMultiset out;
    if (istar > 0) out[Rat(0)] += istar;
    for (std::int64_t u = istar; u < order; ++u) out[height(u + 1) - height(u)] += 1;
    return out;
}

}  // namespace

TEST(Newton, SpecExamples) {
    EXPECT_EQ(slopelab::slopes_from_operator({{1, x(2)}, {0, x(0)}}), (SlopeMultiset{{Rat(1), 1}}));
    EXPECT_EQ(slopelab::slopes_from_operator({{1, x(1)}, {0, x(0, Rat(-5, 2))}}), (SlopeMultiset{{Rat(0), 1}}));
}

TEST(Newton, RejectsBadOperators) {
    EXPECT_THROW(slopelab::slopes_from_operator({}), std::invalid_argument);
    EXPECT_THROW(slopelab::slopes_from_operator({{2, Laurent<Rat>()}}), std::invalid_argument);
    EXPECT_THROW(slopelab::slopes_from_operator({{-1, x(0)}}), std::invalid_argument);
}

TEST(Newton, RankOneFixtures) {
    auto fx = slopelab::rank_one_newton_fixtures();
    ASSERT_EQ(fx.size(), 100u);
    for (const auto& f : fx) {
        EXPECT_EQ(slopelab::slopes_from_operator(f.op), slopelab::slopes(f.decomposition)) << f.name;
        EXPECT_EQ(slopelab::slopes_from_operator(f.op), hull_oracle(f.op)) << f.name;
        EXPECT_EQ(f.decomposition.rank(), 1);
    }
}

TEST(Newton, GoldenFixtures) {
    auto golden = slopelab::golden_newton_fixtures();
    EXPECT_GE(golden.size(), 10u);
    for (const auto& g : golden) {
        auto s = slopelab::slopes_from_operator(g.op);
        EXPECT_EQ(s, slopelab::slopes(g.decomposition)) << g.name;
        EXPECT_EQ(s, hull_oracle(g.op)) << g.name;
        std::int64_t order = 0;
        for (const auto& [i, a] : g.op) order = std::max(order, i);
        EXPECT_EQ(g.decomposition.rank(), order) << g.name;
    }
}

TEST(Newton, RandomOperatorsMatchHullOracle) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        std::vector<OperatorTerm> op;
        std::int64_t order = 1 + static_cast<std::int64_t>(rng() % 6);
        for (std::int64_t i = 0; i <= order; ++i)
            if (i == order || rng() % 3)
                op.emplace_back(i, x(static_cast<std::int64_t>(rng() % 12) - 2, Rat(1 + static_cast<std::int64_t>(rng() % 5))));
        auto s = slopelab::slopes_from_operator(op);
        EXPECT_EQ(s, hull_oracle(op));
        std::int64_t total = 0;
        for (const auto& [r, m] : s) total += m;
        EXPECT_EQ(total, order);
    }
}
