#include <gtest/gtest.h>

#include "stern3/diatomic.hpp"

using namespace stern3;

TEST(Diatomic, FirstTerms) {
    const std::vector<int> want{0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1};
    for (std::size_t n = 0; n < want.size(); ++n)
        EXPECT_EQ(diatomic_term(static_cast<Index>(n)), want[n]) << n;
    EXPECT_EQ(diatomic_term(5), 3);
    EXPECT_EQ(diatomic_term(0), 0);
    EXPECT_EQ(diatomic_term(12), 2);
    EXPECT_THROW(diatomic_term(-1), std::invalid_argument);
}

TEST(Diatomic, RecursionHolds) {
    for (Index n = 1; n < 5000; ++n) {
        EXPECT_EQ(diatomic_term(2 * n), diatomic_term(n));
        EXPECT_EQ(diatomic_term(2 * n + 1), diatomic_term(n) + diatomic_term(n + 1));
    }
}

TEST(Diatomic, BitDecompositions) {
    EXPECT_EQ(diatomic_bits(3), (Bits{0}));
    EXPECT_EQ(diatomic_bits(4), (Bits{1}));
    EXPECT_EQ(diatomic_bits(5), (Bits{0, 0}));
    EXPECT_EQ(diatomic_bits(6), (Bits{0, 1}));
    EXPECT_EQ(diatomic_bits(7), (Bits{1, 0}));
    EXPECT_EQ(diatomic_bits(8), (Bits{1, 1}));
    EXPECT_EQ(diatomic_bits(16), (Bits{1, 1, 1}));
    for (Index N = 3; N < 5000; ++N)
        EXPECT_EQ(diatomic_index(diatomic_bits(N)), N);
    EXPECT_THROW(diatomic_bits(2), std::invalid_argument);
}

TEST(Diatomic, MatrixExamples) {
    EXPECT_EQ(diatomic_matrix_term(5), 3);
    EXPECT_EQ(diatomic_matrix_term(16), 1);
    EXPECT_EQ(diatomic_matrix_term(4), 1);
    EXPECT_EQ(diatomic_matrix_term(3), 2);
    EXPECT_THROW(diatomic_matrix_term(2), std::invalid_argument);
}

TEST(Diatomic, MatrixEqualsRecursion) {
    for (Index N = 3; N <= (Index{1} << 14); ++N)
        ASSERT_EQ(diatomic_matrix_term(N), diatomic_term(N)) << N;
}

TEST(Diatomic, LevelSums) {
    BigInt p = 1;
    for (int n = 0; n <= 10; ++n, p *= 3)
        EXPECT_EQ(diatomic_level_sum(n), p + 1) << n;
}
