#include <gtest/gtest.h>

#include "slopelab/checks.hpp"

using slopelab::Execution;
using slopelab::SweepResult;

namespace {

void same(const SweepResult& a, const SweepResult& b) {
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.checks, b.checks);
    EXPECT_EQ(a.failure_count, b.failure_count);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.notes, b.notes);
}

}  // namespace

TEST(Checks, CorpusIsSeedDeterministic) {
    auto a = slopelab::make_corpus(7, {20, 10, 20, 20});
    auto b = slopelab::make_corpus(7, {20, 10, 20, 20});
    EXPECT_EQ(a.modules, b.modules);
    for (std::size_t i = 0; i < a.exprs.size(); ++i)
        EXPECT_EQ(slopelab::print_expr(a.exprs[i]), slopelab::print_expr(b.exprs[i]));
    auto c = slopelab::make_corpus(8, {20, 10, 20, 20});
    EXPECT_NE(a.modules, c.modules);
}

TEST(Checks, SerialAndParallelSweepsAgree) {
    auto c = slopelab::make_corpus(3, {12, 4, 30, 30});
    slopelab::ExhaustionBounds small{6, 8};
    same(slopelab::witness_sweep(c.modules, 3, Execution::serial), slopelab::witness_sweep(c.modules, 3, Execution::parallel));
    same(slopelab::exhaustion_sweep(c.modules, 2, small, Execution::serial),
         slopelab::exhaustion_sweep(c.modules, 2, small, Execution::parallel));
    same(slopelab::duality_sweep(c.modules, 3, Execution::serial), slopelab::duality_sweep(c.modules, 3, Execution::parallel));
    same(slopelab::pushforward_sweep(c.modules, 3, Execution::serial),
         slopelab::pushforward_sweep(c.modules, 3, Execution::parallel));
    same(slopelab::regularity_sweep(c.modules, 3, Execution::serial),
         slopelab::regularity_sweep(c.modules, 3, Execution::parallel));
    same(slopelab::calculus_laws_sweep(c.modules, Execution::serial),
         slopelab::calculus_laws_sweep(c.modules, Execution::parallel));
    same(slopelab::monomial_sweep(c.models, 2, 2, Execution::serial),
         slopelab::monomial_sweep(c.models, 2, 2, Execution::parallel));
    same(slopelab::monomial_laws_sweep(5, 50, Execution::serial), slopelab::monomial_laws_sweep(5, 50, Execution::parallel));
    same(slopelab::blowup_sweep(c.chains, Execution::serial), slopelab::blowup_sweep(c.chains, Execution::parallel));
    same(slopelab::roundtrip_sweep(c.exprs, Execution::serial), slopelab::roundtrip_sweep(c.exprs, Execution::parallel));
}

TEST(Checks, SmallSweepsPass) {
    auto c = slopelab::make_corpus(4, {15, 6, 40, 40});
    for (const auto& r : {slopelab::witness_sweep(c.modules, 4, Execution::parallel),
                          slopelab::exhaustion_sweep(c.modules, 2, {6, 10}, Execution::parallel),
                          slopelab::duality_sweep(c.modules, 4, Execution::parallel),
                          slopelab::pushforward_sweep(c.modules, 4, Execution::parallel),
                          slopelab::regularity_sweep(c.modules, 4, Execution::parallel),
                          slopelab::calculus_laws_sweep(c.modules, Execution::parallel),
                          slopelab::monomial_sweep(c.models, 3, 2, Execution::parallel),
                          slopelab::monomial_laws_sweep(4, 200, Execution::parallel),
                          slopelab::blowup_sweep(c.chains, Execution::parallel), slopelab::newton_sweep(),
                          slopelab::roundtrip_sweep(c.exprs, Execution::parallel)}) {
        EXPECT_TRUE(r.ok()) << r.name << ": " << (r.failures.empty() ? "no checks" : r.failures.front());
    }
}
