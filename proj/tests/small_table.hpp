#pragma once

#include <array>
#include <cstdint>

// F-Wythoff, normal play, G(i, j) for 0 <= i, j <= 9. Row i ascending.
inline constexpr std::array<std::array<std::uint32_t, 10>, 10> kSmallTable = {{
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8},
    {2, 3, 1, 0, 6, 7, 4, 5, 10, 11},
    {3, 2, 0, 4, 1, 6, 5, 8, 7, 10},
    {4, 5, 6, 1, 2, 3, 0, 9, 11, 12},
    {5, 4, 7, 6, 3, 8, 2, 1, 0, 13},
    {6, 7, 4, 5, 0, 2, 3, 10, 12, 1},
    {7, 6, 5, 8, 9, 1, 10, 11, 4, 2},
    {8, 9, 10, 7, 11, 0, 12, 4, 5, 6},
    {9, 8, 11, 10, 12, 13, 1, 2, 6, 7},
}};
