#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ktri/bijection.hpp"
#include "ktri/errors.hpp"

using namespace ktri;

namespace {

struct Step {
    int r;
    Diagonal blue, red;
};

}  // namespace

TEST(BlockState, MergesAndRemovals) {
    BlockState b(8);
    EXPECT_EQ(b.count(), 5);
    EXPECT_TRUE(b.contains(1, 4));
    EXPECT_TRUE(b.contains(5, 8));
    b.merge_with_next(2);
    EXPECT_EQ(b.count(), 4);
    EXPECT_TRUE(b.contains(2, 5));
    EXPECT_TRUE(b.contains(2, 6));
    b.merge_with_next(0);
    EXPECT_EQ(b.count(), 3);
    EXPECT_TRUE(b.contains(1, 6));
}

TEST(Coloring, FourteenGonTrace) {
    const ColoredDiagram c = color_diagram(fixture::fourteen_gon());
    const std::vector<Step> want{{10, {10, 13}, {7, 12}}, {10, {10, 14}, {2, 13}}, {9, {9, 14}, {6, 13}},
                                 {7, {8, 11}, {1, 9}},    {6, {8, 12}, {2, 9}},    {4, {5, 8}, {1, 6}},
                                 {2, {3, 6}, {1, 4}},     {2, {4, 8}, {2, 6}},     {2, {7, 13}, {4, 9}}};
    ASSERT_EQ(c.steps.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(c.steps[i].iteration, static_cast<int>(i + 1));
        EXPECT_EQ(c.steps[i].r, want[i].r) << "iteration " << i + 1;
        EXPECT_EQ(c.steps[i].blue, want[i].blue) << "iteration " << i + 1;
        EXPECT_EQ(c.steps[i].red, want[i].red) << "iteration " << i + 1;
    }
    int blue = 0, red = 0;
    for (const auto& [d, color] : c.color) {
        blue += color == CrossColor::blue;
        red += color == CrossColor::red;
    }
    EXPECT_EQ(blue, 9);
    EXPECT_EQ(red, 9);
}

TEST(Psi, FourteenGon) {
    const PathPair pp = psi(fixture::fourteen_gon());
    EXPECT_EQ(pp.upper.steps(), fixture::fourteen_gon_P);
    EXPECT_EQ(pp.lower.steps(), fixture::fourteen_gon_Q);
    EXPECT_EQ(psi_tree(fixture::fourteen_gon()), pp);
    EXPECT_EQ(psi_inverse(pp.upper, pp.lower), fixture::fourteen_gon());
}

TEST(Psi, AncestorLabelChain) {
    const std::vector<std::vector<int>> chain{{1, 2, 4}, {2, 3},       {0, 4},    {2, 3, 3}, {0, 4, 2},
                                              {0, 3, 3, 1}, {0, 1, 2, 2, 1}, {0, 1, 2, 1}, {0, 1, 1}, {0, 0}};
    std::vector<std::vector<int>> got;
    for (const auto& l : ancestor_labels(fixture::fourteen_gon())) got.push_back(l.d);
    EXPECT_EQ(got, chain);
    got.clear();
    const auto e = PairEncoding::from_paths(DyckPath::parse(fixture::fourteen_gon_P),
                                            DyckPath::parse(fixture::fourteen_gon_Q));
    for (const auto& l : ancestor_labels(e)) got.push_back(l.d);
    EXPECT_EQ(got, chain);
}

TEST(Psi, SmallCases) {
    const PathPair pent = psi(KTriangulation::empty_polygon(2));
    EXPECT_EQ(pent.upper.steps(), "NE");
    EXPECT_EQ(pent.lower.steps(), "NE");
    const PathPair hex = psi(fixture::tri(6, 2, {{1, 4}, {3, 6}}));
    EXPECT_EQ(hex.upper.steps(), "NNEE");
    EXPECT_EQ(hex.lower.steps(), "NENE");
}

TEST(Psi, ExhaustiveBijection) {
    for (int n = 5; n <= 9; ++n) {
        std::set<PathPair> image;
        for (const auto& t : enumerate_brute(PolygonContext(n, 2))) {
            const PathPair pp = psi(t);
            EXPECT_TRUE(dominates(pp.upper, pp.lower));
            EXPECT_TRUE(image.insert(pp).second);
            EXPECT_EQ(psi_tree(t), pp);
            EXPECT_EQ(psi_inverse(pp.upper, pp.lower), t);
        }
        std::set<PathPair> all;
        for (const auto& tuple : enumerate_tuples(n - 4, 2)) all.insert({tuple.paths[0], tuple.paths[1]});
        EXPECT_EQ(image, all) << "n=" << n;
    }
}

TEST(Psi, TieBreakDoesNotChangeColumnCounts) {
    for (int n = 6; n <= 8; ++n) {
        for (const auto& t : enumerate_brute(PolygonContext(n, 2))) {
            const auto x = color_diagram(t, TieBreak::lowest_blue_highest_red);
            const auto y = color_diagram(t, TieBreak::highest_blue_lowest_red);
            for (int j = 4; j <= n; ++j) {
                EXPECT_EQ(x.alpha(j), y.alpha(j));
                EXPECT_EQ(x.beta(j), y.beta(j));
            }
            EXPECT_EQ(psi_from_coloring(x), psi_from_coloring(y));
        }
    }
}

TEST(PsiInverse, RejectsNonDominatingPairs) {
    EXPECT_THROW(psi_inverse(DyckPath::parse("NENE"), DyckPath::parse("NNEE")), DomainError);
    EXPECT_THROW(psi_inverse(DyckPath::parse("NE"), DyckPath::parse("NNEE")), DomainError);
}
