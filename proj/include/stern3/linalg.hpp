#pragma once

// Matrix route: the digit matrices A0, A1, A2, the vertex matrix V and the
// products V * A_{d1} * ... * A_{dn}. Digit matrices act on the right.

#include <array>
#include <cstddef>

#include "stern3/seqcore.hpp"
#include "stern3/types.hpp"

namespace stern3 {

template <class Int = BigInt>
struct basic_mat3 {
    std::array<Int, 9> e{};  // row-major

    static basic_mat3 from_rows(std::array<std::array<int, 3>, 3> rows) {
        basic_mat3 m;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                m(r, c) = Int(rows[r][c]);
        return m;
    }

    static basic_mat3 identity() { return from_rows({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

    Int& operator()(std::size_t r, std::size_t c) { return e[3 * r + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e[3 * r + c]; }

    std::array<Int, 3> row(std::size_t r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
    std::array<Int, 3> column(std::size_t c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

    Int det() const {
        const auto& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
             - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
             + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    friend basic_mat3 operator*(const basic_mat3& a, const basic_mat3& b) {
        basic_mat3 out;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                Int s = 0;
                for (std::size_t k = 0; k < 3; ++k)
                    s += a(r, k) * b(k, c);
                out(r, c) = std::move(s);
            }
        return out;
    }

    friend bool operator==(const basic_mat3&, const basic_mat3&) = default;
};

using Mat3 = basic_mat3<>;

template <class Int = BigInt>
basic_mat3<Int> mat_A(int digit) {
    switch (checked_trit(digit)) {
    case 0: return basic_mat3<Int>::from_rows({{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}});
    case 1: return basic_mat3<Int>::from_rows({{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}});
    default: return basic_mat3<Int>::from_rows({{{0, 1, 1}, {0, 0, 1}, {1, 0, 1}}});
    }
}

// Columns (0,0,1), (1,0,1), (1,1,1); bottom row is the unit seed.
template <class Int = BigInt>
basic_mat3<Int> vertex_matrix() {
    return basic_mat3<Int>::from_rows({{{0, 1, 1}, {0, 0, 1}, {1, 1, 1}}});
}

template <class Int = BigInt>
basic_mat3<Int> product_over(const Digits& digits) {
    basic_mat3<Int> m = vertex_matrix<Int>();
    for (Trit d : digits)
        m = m * mat_A<Int>(d);
    return m;
}

template <class Int = BigInt>
basic_triple<Int> bottom_row(const Digits& digits) {
    auto r = product_over<Int>(digits).row(2);
    return {std::move(r[0]), std::move(r[1]), std::move(r[2])};
}

} // namespace stern3
