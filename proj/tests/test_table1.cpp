#include "ellipstab/table1.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ellipstab;
using namespace ellipstab::rootsys;

TEST(Table1, RowCountAndCoverage) {
    EXPECT_EQ(table1::row_labels().size(), 24u);
    std::set<std::pair<std::string, int>> covered;
    for (const auto& inst : table1::sweep_instances()) {
        const auto rs = build_root_system(inst.group);
        for (int k = 1; k <= static_cast<int>(max_level(rs, inst.alpha)); ++k) {
            const auto l = table1::label_of(inst.group, k);
            covered.insert({l.group, l.k});
        }
    }
    for (const auto& l : table1::row_labels())
        EXPECT_TRUE(covered.count({l.group, l.k})) << l.group << " " << l.k;
    EXPECT_EQ(covered.size(), 24u);
}

TEST(Table1, SpotValues) {
    const GroupId e8{Series::E, 8}, e7{Series::E, 7}, g2{Series::G, 2};
    EXPECT_EQ(table1::table1_bundle(e8, 3, 1, CurveKind::Nodal).rank(), 30u);
    EXPECT_EQ(table1::table1_bundle(e7, 3, 2, CurveKind::Nodal).degree(), -3);
    for (auto c : {CurveKind::Nodal, CurveKind::Cuspidal})
        EXPECT_EQ(h0(table1::table1_bundle(g2, 1, 1, c)), 0);
    EXPECT_EQ(table1::expression(e8, 3, 3), "wedge(W5,2)*Wd2");
    EXPECT_EQ(table1::expression({Series::A, 5}, 1, 1), "Wd2*Wd4");
    EXPECT_THROW(table1::expression(e8, 3, 7), Error);
}

TEST(Table1, SweepBothCurves) {
    for (auto c : {CurveKind::Nodal, CurveKind::Cuspidal}) {
        const auto rep = table1::verify_table1(c);
        for (const auto& r : rep.rows) {
            EXPECT_TRUE(r.rank_ok()) << r.group.name() << " k=" << r.k;
            EXPECT_TRUE(r.degree_ok()) << r.group.name() << " k=" << r.k;
            EXPECT_TRUE(r.twists_ok()) << r.group.name() << " k=" << r.k;
            EXPECT_TRUE(r.h0_ok()) << r.group.name() << " k=" << r.k << " " << to_string(c);
        }
        for (const auto& s : rep.sums)
            EXPECT_EQ(s.sum_h1, s.expected) << s.group.name();
    }
}

TEST(Table1, E8CuspidalException) {
    const auto rep = table1::verify_table1(CurveKind::Cuspidal, GroupId{Series::E, 8});
    ASSERT_EQ(rep.rows.size(), 6u);
    EXPECT_EQ(rep.rows[0].h0, 1);
    for (std::size_t i = 1; i < 6; ++i)
        EXPECT_EQ(rep.rows[i].h0, 0);
    ASSERT_EQ(rep.sums.size(), 1u);
    EXPECT_EQ(rep.sums[0].sum_h1, 10);
    const auto nodal = table1::verify_table1(CurveKind::Nodal, GroupId{Series::E, 8});
    EXPECT_EQ(nodal.sums[0].sum_h1, 9);
}
