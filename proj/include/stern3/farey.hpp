#pragma once

// Farey map on the triangle {0 <= y <= x <= 1}, exact rationals only.
//
// Homogeneous vectors (x, y, z) project to (x/z, y/z); under that convention
// the columns of the vertex matrix V land on (0,0), (1,0), (1,1), and the cone
// spanned by the columns of V*A_{d1}*...*A_{dn} is the set of points whose
// expansion starts with d1..dn.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stern3/linalg.hpp"
#include "stern3/types.hpp"

namespace stern3 {

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

class out_of_domain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class zero_denominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Always "num/den", e.g. "1/1".
inline std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string format_point(const RationalPoint& p) {
    return format_rational(p.x) + "," + format_rational(p.y);
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1)));
        if (den == 0)
            throw zero_denominator("zero denominator in " + std::string(text));
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + std::string(text));
    }
}

// "num/den,num/den"
inline RationalPoint parse_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("point must be written x,y: " + std::string(text));
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

inline bool in_triangle(const RationalPoint& p) { return 0 <= p.y && p.y <= p.x && p.x <= 1; }

namespace detail {

inline void require_in_triangle(const RationalPoint& p) {
    if (!in_triangle(p))
        throw out_of_domain("point " + format_point(p) + " is outside the triangle 0 <= y <= x <= 1");
}

} // namespace detail

inline bool in_subtriangle(const RationalPoint& p, int digit) {
    const Rational& x = p.x;
    const Rational& y = p.y;
    switch (checked_trit(digit)) {
    case 0: return 1 - 2 * y >= x - y && x - y >= y;
    case 1: return 2 * x - 1 >= y && y >= 1 - x;
    default: return 1 - 2 * x + 2 * y >= 1 - x && 1 - x >= x - y;
    }
}

// Lowest digit wins on shared edges.
inline Trit classify(const RationalPoint& p) {
    detail::require_in_triangle(p);
    for (int d = 0; d < 3; ++d)
        if (in_subtriangle(p, d))
            return static_cast<Trit>(d);
    // The three closed subtriangles cover the triangle.
    throw std::logic_error("no subtriangle contains " + format_point(p));
}

inline RationalPoint apply_branch(const RationalPoint& p, int digit) {
    const Rational& x = p.x;
    const Rational& y = p.y;
    Rational den;
    Rational nx;
    Rational ny;
    switch (checked_trit(digit)) {
    case 0: den = 1 - 2 * y; nx = x - y; ny = y; break;
    case 1: den = 2 * x - 1; nx = y; ny = 1 - x; break;
    default: den = 1 - 2 * x + 2 * y; nx = 1 - x; ny = x - y; break;
    }
    if (den == 0)
        throw zero_denominator("branch " + std::to_string(digit) + " denominator vanishes at " + format_point(p));
    return {nx / den, ny / den};
}

inline RationalPoint apply_T(const RationalPoint& p) { return apply_branch(p, classify(p)); }

struct FareyExpansion {
    Digits digits;
    std::vector<RationalPoint> images;    // images[j] = T^(j+1)(p)
    std::optional<std::size_t> stopped_at;  // digit index where T hit a zero denominator
};

inline FareyExpansion expand(const RationalPoint& p, std::size_t count) {
    detail::require_in_triangle(p);
    FareyExpansion out;
    RationalPoint cur = p;
    for (std::size_t j = 0; j < count; ++j) {
        const Trit d = classify(cur);
        try {
            cur = apply_branch(cur, d);
        } catch (const zero_denominator&) {
            out.stopped_at = j;
            return out;
        }
        out.digits.push_back(d);
        out.images.push_back(cur);
    }
    return out;
}

inline RationalPoint project(const std::array<BigInt, 3>& v) {
    if (v[2] == 0)
        throw zero_denominator("cannot project a vector with zero third coordinate");
    return {Rational(v[0], v[2]), Rational(v[1], v[2])};
}

// Integer homogeneous coordinates (x, y, 1) scaled by the common denominator.
inline std::array<BigInt, 3> lift(const RationalPoint& p) {
    const BigInt dx = denominator(p.x);
    const BigInt dy = denominator(p.y);
    const BigInt l = boost::multiprecision::lcm(dx, dy);
    return {numerator(p.x) * (l / dx), numerator(p.y) * (l / dy), l};
}

namespace detail {

inline BigInt det_columns(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b,
                          const std::array<BigInt, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1])
         - b[0] * (a[1] * c[2] - a[2] * c[1])
         + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

} // namespace detail

// Closed membership in the triangle spanned by the projected columns of
// product_over(digits), by Cramer sign tests on the homogeneous lift.
inline bool cone_contains(const Digits& digits, const RationalPoint& p) {
    const Mat3 m = product_over<BigInt>(digits);
    const auto h = lift(p);
    const auto c0 = m.column(0);
    const auto c1 = m.column(1);
    const auto c2 = m.column(2);
    const BigInt d = detail::det_columns(c0, c1, c2);
    if (d == 0)
        throw std::logic_error("degenerate cone");
    const int s = d > 0 ? 1 : -1;
    return s * detail::det_columns(h, c1, c2) >= 0
        && s * detail::det_columns(c0, h, c2) >= 0
        && s * detail::det_columns(c0, c1, h) >= 0;
}

// Projected corners of the cone for an address.
inline std::array<RationalPoint, 3> cone_vertices(const Digits& digits) {
    const Mat3 m = product_over<BigInt>(digits);
    return {project(m.column(0)), project(m.column(1)), project(m.column(2))};
}

} // namespace stern3
