#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

// Square grid of width tau partitioning the first quadrant. block_period g
// controls the color-set layout: cells repeat their color set every g rows
// and columns, giving g*g disjoint sets.
struct GridParams {
    double tau = 2.0;
    int block_period = 2;
};

struct CellId {
    int i = 0;  // column
    int j = 0;  // row

    friend bool operator==(const CellId&, const CellId&) = default;
    // Row-major: whole bottom row precedes the next row.
    friend auto operator<=>(const CellId& a, const CellId& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
};

CellId cell_of(const Point& p, const GridParams& g);
Rect cell_rect(const CellId& c, const GridParams& g);

// Strict row-major total order as a single ordinal. Extends the partial
// "greater than" on ids (strictly greater in one axis, equal or greater in
// the other) to a total order so handover is defined for every pair.
std::uint64_t order_key(const CellId& c);

// Block layout index in [0, g^2): (i mod g) + g*(j mod g). For tau = 2,
// g = 2 this reproduces the four parity sets: index 0 = C1 (i,j even),
// 1 = C3 (i odd, j even), 2 = C2 (i even, j odd), 3 = C4 (both odd).
int color_set_index(const CellId& c, const GridParams& g);

std::vector<int> disks_intersecting_cell(const std::vector<UnitDisk>& disks,
                                         const CellId& c, const GridParams& g,
                                         const Tolerance& tol = {});

}  // namespace kcover
