#pragma once

// Reference table of occurrence counts, rows kept verbatim in print order,
// including the repeated (3,1) row.

#include <array>
#include <cstdint>

namespace stern3 {

struct ReferenceRow {
    int level;
    int value;
    std::uint64_t total;
    std::uint64_t pos1;
    std::uint64_t pos2;
    std::uint64_t pos3;
};

inline constexpr std::array<ReferenceRow, 35> reference_delta_rows{{
    {0, 1, 3, 1, 1, 1},
    {1, 1, 6, 3, 3, 0},
    {1, 3, 3, 0, 0, 3},
    {2, 1, 12, 6, 6, 0},
    {2, 3, 6, 3, 3, 0},
    {2, 5, 9, 0, 0, 9},
    {3, 1, 24, 12, 12, 0},
    {3, 1, 24, 12, 12, 0},
    {3, 3, 12, 6, 6, 0},
    {3, 5, 18, 9, 9, 0},
    {3, 7, 9, 0, 0, 9},
    {3, 9, 18, 0, 0, 18},
    {4, 1, 48, 24, 24, 0},
    {4, 3, 24, 12, 12, 0},
    {4, 5, 36, 18, 18, 0},
    {4, 7, 18, 9, 9, 0},
    {4, 9, 45, 18, 18, 9},
    {4, 13, 36, 0, 0, 36},
    {4, 15, 18, 0, 0, 18},
    {4, 17, 18, 0, 0, 18},
    {5, 1, 96, 48, 48, 0},
    {5, 3, 48, 24, 24, 0},
    {5, 5, 72, 36, 36, 0},
    {5, 7, 36, 18, 18, 0},
    {5, 9, 90, 45, 45, 0},
    {5, 11, 9, 0, 0, 9},
    {5, 13, 72, 36, 36, 0},
    {5, 15, 36, 18, 18, 0},
    {5, 17, 72, 18, 18, 36},
    {5, 19, 18, 0, 0, 18},
    {5, 21, 18, 0, 0, 18},
    {5, 23, 18, 0, 0, 18},
    {5, 25, 72, 0, 0, 72},
    {5, 29, 36, 0, 0, 36},
    {5, 31, 18, 0, 0, 18},
}};

} // namespace stern3
