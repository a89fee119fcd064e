#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclenum/boustrophedon.hpp"
#include "cyclenum/density.hpp"

using namespace cyclenum;

TEST(Density, RowsAreExactPartitions) {
    const auto rows = densities(20);
    ASSERT_EQ(rows.size(), 19u);
    EXPECT_EQ(rows.front().n, 2);
    for (const auto& row : rows) {
        BigRatio sum = 0;
        BigCount count_sum = 0;
        for (int alpha = 0; alpha < 6; ++alpha) {
            sum += row.p[alpha];
            count_sum += row.counts[alpha];
        }
        EXPECT_EQ(sum, 1) << row.n;
        EXPECT_EQ(count_sum, row.total) << row.n;
        EXPECT_EQ(row.total, count_P(SignWord::all_plus(static_cast<std::size_t>(row.n))));
        EXPECT_EQ(row.r_plus_plus_density, row.p[0] + row.p[1]);
    }
}

TEST(Density, FourLetters) {
    const auto row = density_at(4);
    EXPECT_EQ(row.total, 16);
    EXPECT_EQ(row.q_plus, 11);
    EXPECT_EQ(row.r_plus_plus_density, BigRatio(9, 16));
    EXPECT_EQ(row.p[0], BigRatio(count_R_alpha(SignWord::all_plus(4), 1), 16));
}

TEST(Density, DecimalExpansionRoundsCorrectly) {
    EXPECT_EQ(decimal_expansion(BigRatio(1, 3), 5), "0.33333");
    EXPECT_EQ(decimal_expansion(BigRatio(2, 3), 5), "0.66667");
    EXPECT_EQ(decimal_expansion(BigRatio(1, 8), 2), "0.13");
    EXPECT_EQ(decimal_expansion(BigRatio(1), 3), "1.000");
    EXPECT_EQ(decimal_expansion(BigRatio(9999, 10000), 3), "1.000");
    EXPECT_THROW(decimal_expansion(BigRatio(-1, 3), 4), std::invalid_argument);
    EXPECT_EQ(decimal_expansion(BigRatio(1, 2), 0), "1");
    EXPECT_THROW(decimal_expansion(BigRatio(1, 2), -1), std::invalid_argument);
}

TEST(Density, LimitConstants) {
    const auto limits = conjectured_limits();
    EXPECT_NEAR(static_cast<double>(limits[0]), 0.318309886184, 1e-12);
    EXPECT_EQ(limits[1], limits[4]);
    EXPECT_EQ(limits[2], limits[3]);
    long double total = 0;
    for (auto v : limits) total += v;
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(conjectured_q_plus_limit()), 2 / std::numbers::pi, 1e-15);
}

TEST(Density, ConjectureAtFifty) {
    const auto report = conjecture_report(50);
    for (int alpha = 0; alpha < 6; ++alpha) EXPECT_LE(report.deviations[alpha], 1e-7L) << "alpha " << alpha + 1;
    EXPECT_LE(report.q_plus_deviation, 1e-7L);
    EXPECT_LE(report.r_plus_plus_deviation, 1e-7L);
    EXPECT_LE(report.max_deviation(), 1e-7L);
}

TEST(Density, DeviationShrinksBetweenTwentyAndFifty) {
    // observed behaviour only; the per-step trend is not asserted
    EXPECT_LT(conjecture_report(50).deviations[0], conjecture_report(20).deviations[0]);
}

TEST(Density, ToLongDouble) {
    EXPECT_NEAR(static_cast<double>(to_long_double(BigRatio(1, 7))), 1.0 / 7, 1e-17);
}
