#pragma once

// Common scalar types shared by every stern3 header.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stern3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Positions in the sequence are 1-based; level addresses up to max_level fit.
using Index = std::int64_t;

using Trit = std::uint8_t;
using Digits = std::vector<Trit>;

inline Trit checked_trit(int d) {
    if (d < 0 || d > 2)
        throw std::invalid_argument("digit must be 0, 1 or 2, got " + std::to_string(d));
    return static_cast<Trit>(d);
}

inline void check_digits(const Digits& digits) {
    for (Trit d : digits)
        checked_trit(d);
}

// Parses a string of 0/1/2 characters ("" is the empty address).
inline Digits parse_digits(std::string_view text) {
    Digits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2')
            throw std::invalid_argument("not a ternary digit string: " + std::string(text));
        out.push_back(static_cast<Trit>(c - '0'));
    }
    return out;
}

inline std::string format_digits(const Digits& digits) {
    std::string out;
    out.reserve(digits.size());
    for (Trit d : digits)
        out.push_back(static_cast<char>('0' + d));
    return out;
}

template <class Int>
std::string to_decimal(const Int& v) {
    if constexpr (std::is_integral_v<Int>)
        return std::to_string(v);
    else
        return v.str();
}

} // namespace stern3
