#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stern3/series.hpp"

using namespace stern3;

TEST(IntSeries, TruncatedArithmetic) {
    IntSeries one_plus_x(4);
    one_plus_x.add_term(0, 1);
    one_plus_x.add_term(1, 1);
    one_plus_x.add_term(9, 1);  // beyond the order, dropped
    const auto cube = one_plus_x * one_plus_x * one_plus_x;
    EXPECT_EQ(cube.coefficients(), (std::vector<BigInt>{1, 3, 3, 1}));
    const auto fourth = cube * one_plus_x;
    EXPECT_EQ(fourth.coefficients(), (std::vector<BigInt>{1, 4, 6, 4}));  // x^4 discarded

    EXPECT_EQ(one_plus_x.substitute_power(2).coefficients(), (std::vector<BigInt>{1, 0, 1, 0}));
    EXPECT_EQ(one_plus_x.shifted(3).coefficients(), (std::vector<BigInt>{0, 0, 0, 1}));
    EXPECT_TRUE(one_plus_x.shifted(4).is_zero());
    EXPECT_EQ(one_plus_x[100], 0);
}

TEST(IntSeries, RejectsBadOrders) {
    EXPECT_THROW(IntSeries(0), std::invalid_argument);
    EXPECT_THROW(IntSeries(3) + IntSeries(4), std::invalid_argument);
    EXPECT_THROW(IntSeries(3).substitute_power(0), std::invalid_argument);
    EXPECT_THROW(series_coefficients(0), std::invalid_argument);
}

TEST(IntSeries, ProductMatchesNaiveConvolution) {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = static_cast<std::size_t>(oracle::uniform(1, 30));
        IntSeries a(order), b(order);
        std::vector<std::int64_t> ra(order), rb(order);
        for (std::size_t i = 0; i < order; ++i) {
            ra[i] = oracle::uniform(0, 3) == 0 ? oracle::uniform(1, 1000) : 0;
            rb[i] = oracle::uniform(0, 9);
            a.add_term(i, ra[i]);
            b.add_term(i, rb[i]);
        }
        const auto c = a * b;
        for (std::size_t k = 0; k < order; ++k) {
            std::int64_t want = 0;
            for (std::size_t i = 0; i <= k; ++i)
                want += ra[i] * rb[k - i];
            ASSERT_EQ(c[k], want);
        }
    }
}

TEST(GeneratingSeries, Examples) {
    const auto s = series_coefficients(39);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[6], 3);
    const std::vector<int> block{1, 1, 5, 1, 3, 5, 3, 1, 5};
    for (std::size_t N = 13; N <= 39; ++N)
        EXPECT_EQ(s[N], block[(N - 13) % 9]) << N;
}

TEST(GeneratingSeries, AgreesWithRecursionThroughLevelFour) {
    const auto s = series_coefficients(363);
    const auto flat = oracle::flat_sequence(4);
    ASSERT_EQ(flat.size(), 363u);
    term_evaluator<> rec;
    for (Index N = 1; N <= 363; ++N) {
        ASSERT_EQ(s[static_cast<std::size_t>(N)], rec(N)) << N;
        ASSERT_EQ(s[static_cast<std::size_t>(N)], flat[static_cast<std::size_t>(N - 1)]) << N;
    }
}

TEST(GeneratingSeries, TruncationMidLevel) {
    const auto s = series_coefficients(50);
    EXPECT_EQ(s.order(), 51u);
    const auto flat = oracle::flat_sequence(3);
    for (std::size_t N = 1; N <= 50; ++N)
        EXPECT_EQ(s[N], flat[N - 1]);
}

TEST(GeneratingSeries, LevelBlockSupportIsTheLevelRange) {
    const std::size_t order = 400;
    for (int k = 0; k <= 4; ++k) {
        const auto block = series_level_block(k, order);
        const auto [lo, hi] = level_range(k);
        for (std::size_t e = 0; e < order; ++e) {
            const bool inside = static_cast<Index>(e) >= lo && static_cast<Index>(e) <= hi;
            EXPECT_EQ(block[e] != 0, inside) << "k=" << k << " e=" << e;
        }
    }
}
