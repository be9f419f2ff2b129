#pragma once

// Stern's diatomic sequence: alpha_0 = 0, alpha_1 = 1, alpha_2n = alpha_n,
// alpha_2n+1 = alpha_n + alpha_n+1. Recursion and 2x2 matrix forms.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stern3/types.hpp"

namespace stern3 {

using Bits = std::vector<std::uint8_t>;

inline BigInt diatomic_term(Index N) {
    if (N < 0)
        throw std::invalid_argument("diatomic index must be nonnegative");
    // Fold the binary digits of N from the low end.
    BigInt a = 1;
    BigInt b = 0;
    for (auto n = static_cast<std::uint64_t>(N); n > 0; n >>= 1) {
        if (n & 1)
            b += a;
        else
            a += b;
    }
    return b;
}

// (i_k, ..., i_1) with N = 2^k + 1 + sum_j i_j 2^(j-1), for N >= 3.
inline Bits diatomic_bits(Index N) {
    if (N < 3)
        throw std::invalid_argument("diatomic bit decomposition needs N >= 3");
    const auto m = static_cast<std::uint64_t>(N - 1);
    int k = 0;
    while ((std::uint64_t{2} << k) <= m)
        ++k;
    const std::uint64_t rest = m - (std::uint64_t{1} << k);
    Bits bits(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((rest >> (k - 1 - j)) & 1);
    return bits;
}

inline Index diatomic_index(const Bits& bits) {
    if (bits.empty())
        throw std::invalid_argument("decomposition needs at least one bit");
    Index rest = 0;
    for (auto b : bits) {
        if (b > 1)
            throw std::invalid_argument("bits must be 0 or 1");
        rest = 2 * rest + b;
    }
    return (Index{1} << bits.size()) + 1 + rest;
}

using Mat2 = std::array<BigInt, 4>;  // row-major

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// (0 1) M b_{i_k} ... b_{i_1} (0 1)^T
inline BigInt diatomic_matrix_term(Index N) {
    const Mat2 b0{1, 1, 0, 1};
    const Mat2 b1{1, 0, 1, 1};
    Mat2 m{0, 1, 1, 1};
    for (auto bit : diatomic_bits(N))
        m = mul(m, bit ? b1 : b0);
    return m[3];
}

// Row alpha_{2^n} .. alpha_{2^(n+1)}, both ends included.
inline BigInt diatomic_level_sum(int n) {
    if (n < 0 || n > 60)
        throw std::invalid_argument("diatomic level out of range");
    BigInt s = 0;
    for (Index N = Index{1} << n; N <= (Index{1} << (n + 1)); ++N)
        s += diatomic_term(N);
    return s;
}

} // namespace stern3
