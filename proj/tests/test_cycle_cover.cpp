#include "ellipstab/cycle_cover.hpp"

#include <gtest/gtest.h>

using namespace ellipstab;
using namespace ellipstab::cyclecover;

namespace {
MultiDegree md(std::vector<int> v) { return MultiDegree(std::move(v)); }
} // namespace

TEST(CycleCover, SemistabilityCriterion) {
    EXPECT_TRUE(is_semistable(md({1, -1, 0, 0})));
    EXPECT_FALSE(is_semistable(md({1, 0, 1, -1, -1})));
    EXPECT_TRUE(is_semistable(md({0, 0, 0})));
    EXPECT_TRUE(is_semistable(md({1, -1, 1, -1})));
    EXPECT_THROW(is_semistable(md({2, -2})), Error);
    EXPECT_THROW(is_semistable(md({1, 0})), Error);
    EXPECT_THROW(MultiDegree({0}), Error);
}

TEST(CycleCover, StrongIndecomposability) {
    EXPECT_TRUE(is_strongly_indecomposable(md({1, -1, 0})));
    EXPECT_FALSE(is_strongly_indecomposable(md({1, -1, 1, -1})));
    EXPECT_FALSE(is_strongly_indecomposable(md({0, 0})));
}

TEST(CycleCover, WedgeCyclesExamples) {
    const auto cycles = wedge_cycles(md({1, -1, 0, 0}), 2);
    ASSERT_EQ(cycles.size(), 2u);
    EXPECT_EQ(cycles[0].degrees, (std::vector<int>{0, -1, 0, 1}));
    EXPECT_EQ(cycles[1].degrees, (std::vector<int>{1, -1}));
    EXPECT_TRUE(wedge_is_semistable(md({1, -1, 0, 0}), 2));
    const auto bad = wedge_cycles(md({1, 0, -1, 0}), 2);
    EXPECT_EQ(bad[0].degrees, (std::vector<int>{1, -1, -1, 1}));
    EXPECT_FALSE(wedge_is_semistable(md({1, 0, -1, 0}), 2));
    EXPECT_THROW(wedge_cycles(md({1, -1}), 2), Error);
}

TEST(CycleCover, WedgeCyclesPartitionSubsets) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& d : unit_multidegrees(n))
            for (int k = 1; k < static_cast<int>(n); ++k) {
                std::size_t total = 0;
                long degsum = 0;
                for (const auto& c : wedge_cycles(d, k)) {
                    EXPECT_EQ(n % c.length(), 0u);
                    total += c.length();
                    for (int x : c.degrees)
                        degsum += x;
                }
                std::size_t binom = 1;
                for (int i = 1; i <= k; ++i)
                    binom = binom * (n - k + i) / i;
                EXPECT_EQ(total, binom);
                EXPECT_EQ(degsum, 0);
            }
}

TEST(CycleCover, KEqualsOneMatchesCriterionAndDuality) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& d : unit_multidegrees(n)) {
            EXPECT_EQ(wedge_is_semistable(d, 1), is_semistable(d));
            for (int k = 1; k < static_cast<int>(n); ++k) {
                EXPECT_EQ(wedge_is_semistable(d, k), wedge_is_semistable(d, static_cast<int>(n) - k));
                EXPECT_EQ(wedge_is_semistable(d, k), wedge_is_semistable(reflect(negate(d)), static_cast<int>(n) - k));
            }
        }
}

TEST(CycleCover, ShiftAndReflectionInvariance) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& d : unit_multidegrees(n)) {
            const bool s = is_semistable(d);
            const bool si = is_strongly_indecomposable(d);
            for (std::size_t r = 0; r < n; ++r) {
                EXPECT_EQ(is_semistable(rotate(d, r)), s);
                EXPECT_EQ(is_strongly_indecomposable(rotate(d, r)), si);
            }
            EXPECT_EQ(is_semistable(reflect(d)), s);
            for (int k = 1; k < static_cast<int>(n); ++k)
                EXPECT_EQ(wedge_is_semistable(rotate(d, 1), k), wedge_is_semistable(d, k));
        }
}

TEST(CycleCover, PushforwardOracle) {
    std::mt19937_64 rng(4);
    const auto zero = pushforward_bundle(md({0, 0, 0}), {1, 1, 1});
    EXPECT_EQ(h0(zero), 1);
    EXPECT_FALSE(is_unstable_deg0(pushforward_bundle(md({1, -1, 0}), random_gluings(rng, 3))));
    EXPECT_TRUE(is_unstable_deg0(pushforward_bundle(md({1, 0, 1, -1, -1}), random_gluings(rng, 5))));
    EXPECT_TRUE(is_unstable_deg0(pushforward_bundle(md({2, -1, -1}), random_gluings(rng, 3))));
    EXPECT_THROW(pushforward_bundle(md({1, -1}), {1, 0}), Error);
    const auto cmp = compare_with_oracle(5, 2, 17);
    EXPECT_EQ(cmp.agreements, cmp.checked);
    EXPECT_TRUE(cmp.disagreements.empty());
}

TEST(CycleCover, SlnWedgeDichotomy) {
    for (int a = 1; a < 8; ++a)
        for (int b = 1; a + b <= 8; ++b) {
            const auto rep = sln_wedge_report(a, b);
            EXPECT_TRUE(rep.consistent()) << a << "," << b;
            EXPECT_FALSE(rep.needs_review());
        }
    const auto r14 = sln_wedge_report(1, 4);
    EXPECT_EQ(r14.semistable, (std::vector<bool>{true, true}));
    const auto r22 = sln_wedge_report(2, 2);
    EXPECT_EQ(r22.semistable, (std::vector<bool>{false}));
    const auto r23 = sln_wedge_report(2, 3, true);
    EXPECT_EQ(r23.semistable, (std::vector<bool>{false, false}));
    EXPECT_TRUE(r23.consistent());
    EXPECT_THROW(sln_wedge_report(0, 3), Error);
}

TEST(CycleCover, WedgeOracleSmallCases) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {1, 5}, {3, 3}}) {
        const auto rep = sln_wedge_report(a, b, true, 99);
        EXPECT_TRUE(rep.consistent()) << a << "," << b;
    }
}
