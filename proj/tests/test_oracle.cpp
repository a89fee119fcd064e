#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "cyclenum/oracle.hpp"

using namespace cyclenum;

namespace {

BigCount factorial(int n) {
    BigCount f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST(Oracle, EnumeratesAllOrders) {
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(BigCount(static_cast<unsigned long>(oracle::enumerate_cyclic_orders(n).size())), factorial(n - 1));
    }
}

TEST(Oracle, GroundSetGuard) {
    EXPECT_THROW(oracle::enumerate_cyclic_orders(13), std::invalid_argument);
    EXPECT_THROW(oracle::enumerate_cyclic_orders(2), std::invalid_argument);
    EXPECT_THROW(oracle::enumerate_cyclic_orders(6, 5), std::invalid_argument);
}

TEST(Oracle, ClassifyFourElements) {
    const auto counts = oracle::classify_all(4);
    ASSERT_EQ(counts.by_word.size(), 4u);
    const auto& pp = counts.by_word.at(SignWord::parse("++"));
    EXPECT_EQ(pp.p, 2);
    EXPECT_EQ(pp.r[0], 1);
    EXPECT_EQ(pp.r[4], 1);
    EXPECT_EQ(pp.r[1] + pp.r[2] + pp.r[3] + pp.r[5], 0);
    EXPECT_EQ(counts.by_word.at(SignWord::parse("-+")).p, 1);
}

TEST(Oracle, ClassesPartitionEveryGroundSet) {
    for (int n = 4; n <= 8; ++n) {
        const auto counts = oracle::classify_all(n);
        EXPECT_EQ(counts.by_word.size(), std::size_t{1} << (n - 2));
        BigCount total = 0;
        for (const auto& [w, rec] : counts.by_word) {
            BigCount r_total = 0;
            for (const auto& v : rec.r) r_total += v;
            EXPECT_EQ(rec.q_plus + rec.q_minus, rec.p) << w.str();
            EXPECT_EQ(r_total, rec.p) << w.str();
            EXPECT_EQ(rec.r[0] + rec.r[1] + rec.r[2], rec.q_plus) << w.str();
            total += rec.p;
        }
        EXPECT_EQ(total, factorial(n - 1));
    }
}

TEST(Oracle, ChainTypeIsDefinedForEveryOrder) {
    oracle::for_each_cyclic_order(6, [](const CyclicOrder& z) {
        const int alpha = oracle::chain_type(z);
        ASSERT_GE(alpha, 1);
        ASSERT_LE(alpha, 6);
    });
}

TEST(Oracle, RefinedCounts) {
    const auto f = oracle::refined_f_brute(SignWord::parse("++"), Sign::Plus);
    EXPECT_EQ(f.coefficient({0, 0, 1, 0}), 1);
    EXPECT_EQ(f.sum(), 1);
    EXPECT_EQ(oracle::refined_f_brute(SignWord::parse("++++"), Sign::Plus).sum(), 11);

    EXPECT_EQ(oracle::refined_g_brute(SignWord::parse("++"), 1).sum(), 1);
    EXPECT_TRUE(oracle::refined_g_brute(SignWord::parse("++"), 3).is_zero());
    BigCount total = 0;
    for (int alpha = 1; alpha <= 6; ++alpha) total += oracle::refined_g_brute(SignWord::parse("++++"), alpha).sum();
    EXPECT_EQ(total, 16);

    const auto e = oracle::refined_e_brute(SignWord::parse("+"));
    EXPECT_EQ(e.degree(), 1);
    EXPECT_EQ(e.coefficient({1, 0, 0, 0}), 1);
    EXPECT_EQ(e.sum(), 1);
}

TEST(Oracle, DescentClasses) {
    EXPECT_EQ(oracle::count_descent_class_brute(SignWord::parse("+-")), 2);
    EXPECT_EQ(oracle::count_descent_class_brute(SignWord::parse("+++")), 1);
    BigCount total = 0;
    for (const auto& w : all_words(5)) total += oracle::count_descent_class_brute(w);
    EXPECT_EQ(total, factorial(6));
}

TEST(Oracle, SingleLetterSignCounts) {
    EXPECT_EQ(oracle::count_r_signs_brute(SignWord::parse("+"), Sign::Plus, Sign::Plus), 1);
}

TEST(Oracle, EnvironmentRaisesTheLimit) {
    ::setenv("CYCLENUM_MAX_ORACLE_N", "11", 1);
    EXPECT_EQ(oracle::max_ground_set(), 11);
    ::setenv("CYCLENUM_MAX_ORACLE_N", "99", 1);
    EXPECT_EQ(oracle::max_ground_set(), oracle::kHardMaxN);
    ::unsetenv("CYCLENUM_MAX_ORACLE_N");
    EXPECT_EQ(oracle::max_ground_set(), oracle::kDefaultMaxN);
}
