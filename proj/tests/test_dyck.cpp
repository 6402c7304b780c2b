#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ktri/dyck.hpp"
#include "ktri/errors.hpp"
#include "oracles.hpp"

using namespace ktri;

namespace {

std::vector<std::vector<int>> fig3_matrix() {
    return {{0, 0, 0, 1, 0, 2, 0, 0, 1, 1, 2, 2}, {0, 1, 0, 2, 0, 0, 3, 0, 0, 1, 2, 0}};
}

}  // namespace

TEST(DyckPath, ParseRejectsBadWords) {
    EXPECT_THROW(DyckPath::parse("NEX"), DomainError);
    EXPECT_THROW(DyckPath::parse("NNE"), DomainError);
    EXPECT_THROW(DyckPath::parse("ENNE"), DomainError);
    EXPECT_THROW(DyckPath::parse(""), DomainError);
    EXPECT_EQ(DyckPath::parse("NNEE").semilength(), 2);
}

TEST(DyckPath, EnumerationMatchesWordFilter) {
    for (int m = 1; m <= 9; ++m) {
        std::vector<std::string> got;
        for (const auto& p : enumerate_dyck_paths(m)) got.push_back(p.steps());
        EXPECT_EQ(got, oracle::dyck_words(m)) << "m=" << m;
        EXPECT_EQ(BigInt(got.size()), catalan(m));
    }
}

TEST(DyckPath, ExponentFormRoundTrip) {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& p : enumerate_dyck_paths(m)) {
            const ExponentForm e = to_exponents(p);
            EXPECT_TRUE(e.valid());
            EXPECT_EQ(e.semilength(), m);
            EXPECT_EQ(from_exponents(e), p);
        }
    }
    // P = N E^{p_3} N E^{p_2} N E^{p_1} E
    EXPECT_EQ(to_exponents(DyckPath::parse("NNENEE")).p, (std::vector<int>{0, 1, 1, 0}));
    EXPECT_TRUE((ExponentForm{{0, 2, 0, 0}}).valid());   // NNNEEE
    EXPECT_FALSE((ExponentForm{{0, 0, 0, 2}}).valid());  // dips below after two runs
}

TEST(DyckPath, DominationMatchesHeightComparison) {
    for (int m = 1; m <= 6; ++m) {
        const auto paths = enumerate_dyck_paths(m);
        for (const auto& p : paths)
            for (const auto& q : paths) {
                const bool want = oracle::above(p.steps(), q.steps());
                EXPECT_EQ(dominates(p, q), want);
                EXPECT_EQ(dominates(to_exponents(p), to_exponents(q)), want);
            }
    }
    EXPECT_THROW(dominates(DyckPath::parse("NE"), DyckPath::parse("NNEE")), DomainError);
}

TEST(Catalan, SmallValues) {
    for (int m = 0; m <= 40; ++m) EXPECT_EQ(catalan(m), oracle::catalan(m));
    EXPECT_EQ(catalan(10), 16796);
}

TEST(JonssonCount, MatchesPermutationExpansion) {
    for (int k = 1; k <= 5; ++k)
        for (int n = 2 * k + 1; n <= 40; ++n)
            EXPECT_EQ(jonsson_count(n, k), oracle::catalan_determinant(n, k)) << "n=" << n << " k=" << k;
}

TEST(JonssonCount, KnownValues) {
    const std::vector<int> k2{1, 3, 14, 84, 594, 4719};
    for (int n = 5; n <= 10; ++n) EXPECT_EQ(jonsson_count(n, 2), k2[n - 5]);
    const std::vector<int> k3{1, 4, 30, 330, 4719};
    for (int n = 7; n <= 11; ++n) EXPECT_EQ(jonsson_count(n, 3), k3[n - 7]);
    for (int n = 3; n <= 20; ++n) EXPECT_EQ(jonsson_count(n, 1), catalan(n - 2));
    EXPECT_EQ(jonsson_count(2 * 7 + 1, 7), 1);
    EXPECT_THROW(jonsson_count(4, 2), DomainError);
    EXPECT_THROW(jonsson_count(5, 0), DomainError);
}

TEST(JonssonCount, LargeValuesAreExact) {
    // C_98 C_96 - C_97^2 exceeds 64 bits many times over.
    const BigInt want = oracle::catalan(98) * oracle::catalan(96) - oracle::catalan(97) * oracle::catalan(97);
    EXPECT_EQ(jonsson_count(100, 2), want);
    EXPECT_GT(want, BigInt(1) << 200);
}

TEST(Tuples, MatchOracleAndDeterminant) {
    for (int k = 1; k <= 3; ++k) {
        for (int m = 1; m <= 5; ++m) {
            const auto tuples = enumerate_tuples(m, k);
            std::vector<std::vector<std::string>> got;
            for (const auto& t : tuples) {
                std::vector<std::string> words;
                for (const auto& p : t.paths) words.push_back(p.steps());
                got.push_back(words);
            }
            EXPECT_EQ(got, oracle::dyck_tuples(m, k)) << "m=" << m << " k=" << k;
            EXPECT_EQ(BigInt(tuples.size()), jonsson_count(m + 2 * k, k));
        }
    }
}

TEST(Tuples, GuardThrows) {
    EnumerationLimits small;
    small.max_tuple_cells = 8;
    EXPECT_THROW(enumerate_tuples(5, 2, small), DomainError);
    EXPECT_NO_THROW(enumerate_tuples(4, 2, small));
}

TEST(PairEncoding, FourteenGonPair) {
    const auto e = PairEncoding::from_paths(DyckPath::parse(fixture::fourteen_gon_P),
                                            DyckPath::parse(fixture::fourteen_gon_Q));
    EXPECT_EQ(e.semilength(), 10);
    EXPECT_EQ(e.matrix(), fig3_matrix());
    EXPECT_EQ(s_param(e), 3);
    const PathPair back = e.paths();
    EXPECT_EQ(back.upper.steps(), fixture::fourteen_gon_P);
    EXPECT_EQ(back.lower.steps(), fixture::fourteen_gon_Q);
}

TEST(PairEncoding, RootAndValidation) {
    const auto root = PairEncoding::root();
    EXPECT_EQ(root.semilength(), 1);
    EXPECT_EQ(root.paths().upper.steps(), "NE");
    EXPECT_EQ(s_param(root), 2);
    EXPECT_THROW(PairEncoding::from_paths(DyckPath::parse("NENE"), DyckPath::parse("NNEE")), DomainError);
}

TEST(PairEncoding, RoundTripAndSRange) {
    for (int m = 1; m <= 6; ++m) {
        for (const auto& t : enumerate_tuples(m, 2)) {
            const auto e = PairEncoding::from_paths(t.paths[0], t.paths[1]);
            const PathPair back = e.paths();
            EXPECT_EQ(back.upper, t.paths[0]);
            EXPECT_EQ(back.lower, t.paths[1]);
            const int s = s_param(e);
            EXPECT_GE(s, 2);
            EXPECT_LE(s, m + 1);
            EXPECT_EQ(e.p(s) * e.q(s), 0);
            for (int j = 2; j < s; ++j) EXPECT_GT(e.p(j) * e.q(j), 0);
        }
    }
}
