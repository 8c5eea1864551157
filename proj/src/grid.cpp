#include "kcover/grid.hpp"

#include <cmath>

#include "kcover/errors.hpp"

namespace kcover {

CellId cell_of(const Point& p, const GridParams& g) {
    if (p.x < 0.0 || p.y < 0.0) {
        throw ValidationError("cell_of: point outside the first quadrant");
    }
    return {static_cast<int>(std::floor(p.x / g.tau)),
            static_cast<int>(std::floor(p.y / g.tau))};
}

Rect cell_rect(const CellId& c, const GridParams& g) {
    return {c.i * g.tau, c.j * g.tau, (c.i + 1) * g.tau, (c.j + 1) * g.tau};
}

std::uint64_t order_key(const CellId& c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i));
}

int color_set_index(const CellId& c, const GridParams& g) {
    const int p = g.block_period;
    return (c.i % p) + p * (c.j % p);
}

std::vector<int> disks_intersecting_cell(const std::vector<UnitDisk>& disks,
                                         const CellId& c, const GridParams& g,
                                         const Tolerance& tol) {
    const Rect r = cell_rect(c, g);
    std::vector<int> out;
    for (int d = 0; d < static_cast<int>(disks.size()); ++d) {
        if (disk_intersects_rect(disks[d], r, tol)) out.push_back(d);
    }
    return out;
}

}  // namespace kcover
