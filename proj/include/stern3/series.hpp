#pragma once

// Truncated integer power series and the generating function of the unit-seed
// sequence:
//
//   sum a_N x^N = e3^T V [I + sum_k x^(3(3^k-1)/2) P(x^(3^k)) ... P(x^3)] (x e1 + x^2 e2 + x^3 e3)
//
// with P(x) = A0 + x A1 + x^2 A2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stern3/index.hpp"
#include "stern3/linalg.hpp"
#include "stern3/types.hpp"

namespace stern3 {

// Dense coefficients for exponents 0 .. order-1; everything at or above
// `order` is discarded by every operation.
template <class Int = BigInt>
class basic_series {
public:
    explicit basic_series(std::size_t order) : coeffs_(order) {
        if (order == 0)
            throw std::invalid_argument("truncation order must be positive");
    }

    static basic_series monomial(std::size_t exponent, Int coeff, std::size_t order) {
        basic_series s(order);
        s.add_term(exponent, std::move(coeff));
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const Int& operator[](std::size_t e) const {
        static const Int zero{};
        return e < coeffs_.size() ? coeffs_[e] : zero;
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    void add_term(std::size_t exponent, const Int& coeff) {
        if (exponent < coeffs_.size())
            coeffs_[exponent] += coeff;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
    }

    basic_series& operator+=(const basic_series& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    friend basic_series operator+(basic_series a, const basic_series& b) { return a += b; }

    // Skips zero coefficients of either side, so sparse factors stay cheap.
    friend basic_series operator*(const basic_series& a, const basic_series& b) {
        a.check_order(b);
        const std::size_t n = a.order();
        basic_series out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.coeffs_[j] == 0)
                    continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    // f(x) -> f(x^m)
    basic_series substitute_power(std::size_t m) const {
        if (m == 0)
            throw std::invalid_argument("substitution power must be positive");
        basic_series out(order());
        for (std::size_t i = 0; i * m < order(); ++i)
            out.coeffs_[i * m] = coeffs_[i];
        return out;
    }

    basic_series& operator*=(const Int& c) {
        for (auto& v : coeffs_)
            v *= c;
        return *this;
    }

    // f(x) -> x^s f(x)
    basic_series shifted(std::size_t s) const {
        basic_series out(order());
        for (std::size_t i = 0; i + s < order(); ++i)
            out.coeffs_[i + s] = coeffs_[i];
        return out;
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    void check_order(const basic_series& o) const {
        if (o.order() != order())
            throw std::invalid_argument("series truncation orders differ");
    }

    std::vector<Int> coeffs_;
};

using IntSeries = basic_series<>;

template <class Int>
using series_vec3 = std::array<basic_series<Int>, 3>;

// P(x^m) applied to a column of series: (A0 + x^m A1 + x^2m A2) * v.
template <class Int>
series_vec3<Int> apply_digit_polynomial(std::size_t m, const series_vec3<Int>& v) {
    const std::size_t order = v[0].order();
    series_vec3<Int> out{basic_series<Int>(order), basic_series<Int>(order), basic_series<Int>(order)};
    for (int d = 0; d < 3; ++d) {
        const auto a = mat_A<Int>(d);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (a(r, c) != 0) {
                    auto term = v[c].shifted(static_cast<std::size_t>(d) * m);
                    if (a(r, c) != 1)
                        term *= a(r, c);
                    out[r] += term;
                }
    }
    return out;
}

// The level-k summand of the generating function, truncated at `order`.
// k = 0 is the identity term.
template <class Int = BigInt>
basic_series<Int> series_level_block(int k, std::size_t order) {
    detail::check_level(k);
    using S = basic_series<Int>;
    // Right-to-left: start from (x, x^2, x^3)^T and apply P(x^3), P(x^9), ...
    series_vec3<Int> v{S::monomial(1, Int(1), order), S::monomial(2, Int(1), order), S::monomial(3, Int(1), order)};
    for (int j = 1; j <= k; ++j)
        v = apply_digit_polynomial(static_cast<std::size_t>(pow3(j)), v);

    // e3^T V is the row (1, 1, 1).
    const auto seed_row = vertex_matrix<Int>().row(2);
    S total(order);
    for (std::size_t c = 0; c < 3; ++c) {
        S scaled = v[c];
        scaled *= seed_row[c];
        total += scaled;
    }
    return total.shifted(static_cast<std::size_t>(level_offset(k)));
}

// Coefficients of sum a_N x^N for exponents 0..max_exponent (a_0 := 0).
template <class Int = BigInt>
basic_series<Int> series_coefficients(std::size_t max_exponent) {
    if (max_exponent < 1)
        throw std::invalid_argument("max_exponent must be at least 1");
    const std::size_t order = max_exponent + 1;
    basic_series<Int> total(order);
    for (int k = 0; k <= max_level && static_cast<std::size_t>(level_offset(k)) + 1 <= max_exponent; ++k)
        total += series_level_block<Int>(k, order);
    return total;
}

} // namespace stern3
