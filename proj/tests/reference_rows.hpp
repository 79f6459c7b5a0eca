#pragma once

// Reference rows: n, gamma(n), nu(n), p(n).

#include <array>
#include <cstdint>

namespace fixture {

struct Row {
  std::uint32_t n;
  std::uint64_t gamma;
  std::uint64_t nu;
  std::uint64_t p;
};

inline constexpr std::array<Row, 21> kTableRows = {{
    {1, 0, 0, 1},      {2, 0, 1, 2},      {3, 0, 1, 3},       {4, 1, 2, 5},       {5, 0, 2, 7},
    {6, 2, 4, 11},     {7, 0, 4, 15},     {8, 3, 7, 22},      {9, 1, 8, 30},      {10, 4, 12, 42},
    {11, 2, 14, 56},   {12, 7, 21, 77},   {13, 3, 24, 101},   {14, 10, 34, 135},  {15, 7, 41, 176},
    {16, 14, 55, 231}, {17, 11, 66, 297}, {18, 22, 88, 385},  {19, 17, 105, 490}, {20, 32, 137, 627},
    {100, 2307678, 21339417, 190569292},
}};

}  // namespace fixture
