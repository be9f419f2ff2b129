#pragma once

// Bijection between positive integers N and level addresses (d1..dn; pos).
//
// N = (3^(n+1) - 3)/2 + sum_m d_m * 3^(n+1-m) + pos, pos in {1,2,3}.
// d1 is the first-applied digit and carries the largest weight.

#include <array>
#include <compare>
#include <stdexcept>
#include <utility>

#include "stern3/types.hpp"

namespace stern3 {

inline constexpr int max_level = 37;

struct IndexTuple {
    Digits digits;
    int pos = 1;

    int level() const { return static_cast<int>(digits.size()); }
    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

constexpr Index pow3(int e) {
    Index r = 1;
    for (int i = 0; i < e; ++i)
        r *= 3;
    return r;
}

// Number of sequence entries strictly before level n: (3^(n+1) - 3)/2.
constexpr Index level_offset(int n) { return (pow3(n + 1) - 3) / 2; }

namespace detail {

inline void check_level(int n) {
    if (n < 0)
        throw std::invalid_argument("level must be nonnegative");
    if (n > max_level)
        throw std::overflow_error("level " + std::to_string(n) + " exceeds max_level");
}

inline void check_positive(Index N) {
    if (N <= 0)
        throw std::invalid_argument("index must be positive, got " + std::to_string(N));
    if (N > level_offset(max_level + 1))
        throw std::overflow_error("index beyond max_level");
}

} // namespace detail

inline Index encode(const IndexTuple& t) {
    if (t.pos < 1 || t.pos > 3)
        throw std::invalid_argument("pos must be 1, 2 or 3");
    check_digits(t.digits);
    const int n = t.level();
    detail::check_level(n);
    Index within = 0;
    for (Trit d : t.digits)
        within = within * 3 + d;
    return level_offset(n) + 3 * within + t.pos;
}

inline int level_of(Index N) {
    detail::check_positive(N);
    int n = 0;
    while (N > level_offset(n + 1))
        ++n;
    return n;
}

// Inclusive [first, last]; last - first + 1 == 3^(n+1).
inline std::pair<Index, Index> level_range(int n) {
    detail::check_level(n);
    return {level_offset(n) + 1, level_offset(n + 1)};
}

inline IndexTuple decode(Index N) {
    const int n = level_of(N);
    Index r = N - level_offset(n) - 1;
    IndexTuple t;
    t.pos = static_cast<int>(r % 3) + 1;
    r /= 3;
    t.digits.assign(static_cast<std::size_t>(n), 0);
    for (int m = n - 1; m >= 0; --m) {
        t.digits[static_cast<std::size_t>(m)] = static_cast<Trit>(r % 3);
        r /= 3;
    }
    return t;
}

// Last-applied digit d_n of N's address; N must be past level 0.
inline Trit last_digit(Index N) {
    const int n = level_of(N);
    if (n == 0)
        throw std::invalid_argument("level-0 index has no digits");
    return static_cast<Trit>(((N - level_offset(n) - 1) / 3) % 3);
}

// Addresses of positions 1,2,3 of the parent triple (digits d1..d_{n-1}).
inline std::array<Index, 3> parent_positions(Index N) {
    const int n = level_of(N);
    if (n == 0)
        throw std::invalid_argument("level-0 index " + std::to_string(N) + " has no parent");
    const Index parent_within = (N - level_offset(n) - 1) / 9;
    const Index base = level_offset(n - 1) + 3 * parent_within;
    return {base + 1, base + 2, base + 3};
}

} // namespace stern3
