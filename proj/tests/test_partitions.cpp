#include <set>

#include <gtest/gtest.h>

#include "qtkern/partitions.hpp"

using namespace qtkern;

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long power(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(Partition::parse("3,1,1"), (Partition{3, 1, 1}));
    EXPECT_EQ(Partition::parse("").length(), 0);
    EXPECT_EQ((Partition{4, 2}).to_string(), "4,2");
    EXPECT_EQ((Partition{2, 0, 0}), (Partition{2}));
    EXPECT_THROW(Partition::parse("1,2"), MalformedInput);
    EXPECT_THROW(Partition::parse("2,,1"), MalformedInput);
    EXPECT_THROW(Partition::parse("2,x"), MalformedInput);
    EXPECT_THROW((Partition{2, -1}), MalformedInput);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
    EXPECT_EQ((Partition{2, 2}).conjugate(), (Partition{2, 2}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& l : partitions_of(n)) EXPECT_EQ(l.conjugate().conjugate(), l);
}

TEST(Partition, Counts) {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), p[n]);
    auto four = partitions_of(4);
    EXPECT_EQ(four.front(), (Partition{4}));
    EXPECT_EQ(four[1], (Partition{3, 1}));
    EXPECT_EQ(four.back(), (Partition{1, 1, 1, 1}));
}

TEST(Partition, Dominance) {
    EXPECT_TRUE(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    EXPECT_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    EXPECT_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    EXPECT_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    EXPECT_FALSE(dominance_leq(Partition{2}, Partition{3}));
    // reverses under conjugation
    for (const auto& a : partitions_of(6))
        for (const auto& b : partitions_of(6))
            EXPECT_EQ(dominance_leq(a, b), dominance_leq(b.conjugate(), a.conjugate()));
}

TEST(Partition, ArmLeg) {
    Partition l{4, 2, 1};
    EXPECT_EQ(arm_leg(l, 1, 1), std::make_pair(3, 2));
    EXPECT_EQ(arm_leg(l, 1, 2), std::make_pair(2, 1));
    EXPECT_EQ(arm_leg(l, 2, 2), std::make_pair(0, 0));
    EXPECT_EQ(arm_leg(l, 3, 1), std::make_pair(0, 0));
    EXPECT_THROW(arm_leg(l, 2, 3), DomainError);
}

TEST(Partition, ZFactor) {
    EXPECT_EQ(z_factor(Partition{1, 1, 1}), 6);
    EXPECT_EQ(z_factor(Partition{2, 1}), 2);
    EXPECT_EQ(z_factor(Partition{2, 2, 1}), 8);
    // sum of n!/z_lambda is n!
    for (int n = 1; n <= 6; ++n) {
        long s = 0;
        for (const auto& l : partitions_of(n)) s += factorial(n) / z_factor(l);
        EXPECT_EQ(s, factorial(n));
    }
}

TEST(Fillings, SmallExamples) {
    EXPECT_EQ(enumerate_fillings(Partition{1}, 3, FillingFamily::SSTb).size(), 3u);
    EXPECT_EQ(enumerate_fillings(Partition{2}, 2, FillingFamily::Tbr).size(), 3u);
    EXPECT_EQ(enumerate_fillings(Partition{2}, 2, FillingFamily::Tb).size(), 4u);
    // s_{2,1}(1,1,1) = 8 and s_{2,2}(1,1,1) = 6
    EXPECT_EQ(enumerate_fillings(Partition{2, 1}, 3, FillingFamily::SSTb).size(), 8u);
    EXPECT_EQ(enumerate_fillings(Partition{2, 2}, 3, FillingFamily::SSTb).size(), 6u);
    EXPECT_TRUE(enumerate_fillings(Partition{1, 1, 1}, 2, FillingFamily::SSTb).empty());
    EXPECT_THROW(enumerate_fillings(Partition{1}, 0, FillingFamily::Tb), DomainError);
}

TEST(Fillings, CountsAndNesting) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = 1; m <= 4; ++m) {
                auto tb = enumerate_fillings(l, m, FillingFamily::Tb);
                auto tbr = enumerate_fillings(l, m, FillingFamily::Tbr);
                auto ss = enumerate_fillings(l, m, FillingFamily::SSTb);
                EXPECT_EQ(static_cast<long>(tb.size()), power(m, n));
                long rows = 1;
                for (int i = 1; i <= l.length(); ++i) rows *= binomial(l[i] + m - 1, l[i]);
                EXPECT_EQ(static_cast<long>(tbr.size()), rows);
                std::set<std::vector<int>> words_tb, words_tbr;
                for (const auto& f : tb) words_tb.insert(f.word);
                for (const auto& f : tbr) {
                    words_tbr.insert(f.word);
                    EXPECT_TRUE(f.rows_weakly_increasing());
                }
                EXPECT_EQ(words_tb.size(), tb.size());
                EXPECT_EQ(words_tbr.size(), tbr.size());
                for (const auto& f : tbr) EXPECT_TRUE(words_tb.count(f.word));
                for (const auto& f : ss) {
                    EXPECT_TRUE(words_tbr.count(f.word));
                    EXPECT_TRUE(f.columns_strictly_increasing());
                    for (std::size_t i = 0; i < f.theta.size(); ++i)
                        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(f.theta[i][j], 0);
                }
            }
}

TEST(Fillings, SemistandardMeansHorizontalStrips) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = 1; m <= 3; ++m) {
                std::set<std::vector<int>> ss;
                for (const auto& f : enumerate_fillings(l, m, FillingFamily::SSTb)) ss.insert(f.word);
                for (const auto& f : enumerate_fillings(l, m, FillingFamily::Tbr)) {
                    auto c = filling_to_chain(f);
                    bool strips = true;
                    for (bool b : c.horizontal_strip) strips = strips && b;
                    EXPECT_EQ(strips, ss.count(f.word) == 1) << l.to_string() << " " << f.theta_string();
                }
            }
}

TEST(Fillings, ReadingOrderIsLexicographic) {
    auto tb = enumerate_fillings(Partition{2, 1}, 2, FillingFamily::Tb);
    ASSERT_EQ(tb.size(), 8u);
    EXPECT_EQ(tb.front().word, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(tb[1].word, (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(tb.back().word, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(tb[1].entry(2, 1), 2);
}

TEST(Chain, Diagonal) {
    auto d = diagonal_filling(Partition{2, 1}, 2);
    EXPECT_EQ(d.theta_string(), "[[2,0],[0,1]]");
    auto c = filling_to_chain(d);
    ASSERT_EQ(c.shapes.size(), 3u);
    EXPECT_EQ(c.shapes[0], (std::vector<int>{0, 0}));
    EXPECT_EQ(c.shapes[1], (std::vector<int>{2, 0}));
    EXPECT_EQ(c.shapes[2], (std::vector<int>{2, 1}));
    EXPECT_TRUE(c.horizontal_strip[0] && c.horizontal_strip[1]);
    EXPECT_THROW(diagonal_filling(Partition{2, 1}, 1), DomainError);
}

TEST(Chain, NonPartitionStepFlagged) {
    auto f = make_filling(Partition{1, 1}, 2, {1, 1});
    auto c = filling_to_chain(f);
    EXPECT_EQ(c.shapes[1], (std::vector<int>{1, 1}));
    EXPECT_TRUE(c.is_partition[1]);
    EXPECT_FALSE(c.horizontal_strip[0]);
    auto g = make_filling(Partition{1, 1}, 2, {2, 1});
    auto cg = filling_to_chain(g);
    EXPECT_FALSE(cg.is_partition[1]);
    EXPECT_EQ(cg.shapes[1], (std::vector<int>{0, 1}));
}
