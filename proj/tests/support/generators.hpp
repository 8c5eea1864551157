#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "kcover/io.hpp"
#include "kcover/oracle.hpp"
#include "kcover/rng.hpp"
#include "kcover/solver.hpp"

namespace testgen {

using namespace kcover;

// Point strictly inside a disk, away from the boundary band.
inline Point interior_point(const UnitDisk& d, Rng& rng, double max_r = 0.95) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double radius = max_r * std::sqrt(rng.next_double());
    return {d.center.x + radius * std::cos(angle),
            d.center.y + radius * std::sin(angle)};
}

// Small covered instance within the oracle caps: m in [2,10], n in [1,8],
// every point sampled inside a disk.
inline Instance small_random_instance(std::uint64_t seed) {
    Rng rng(seed);
    Instance inst;
    inst.k = 1;
    const int m = 2 + static_cast<int>(rng.next_below(9));
    const int n = 1 + static_cast<int>(rng.next_below(8));
    for (int d = 0; d < m; ++d) {
        inst.disks.push_back({{rng.uniform(1.0, 5.0), rng.uniform(1.0, 5.0)}});
    }
    for (int p = 0; p < n; ++p) {
        const int d = static_cast<int>(rng.next_below(m));
        inst.points.push_back(interior_point(inst.disks[d], rng));
    }
    return inst;
}

// First-fit coloring of the conflict graph induced on `ids`.
inline int greedy_color_count(const std::vector<UnitDisk>& disks,
                              const std::vector<int>& ids) {
    std::vector<int> color(ids.size(), -1);
    int used = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
        for (int c = 0;; ++c) {
            bool free = true;
            for (size_t j = 0; j < i; ++j) {
                if (color[j] == c && disks_conflict(disks[ids[i]], disks[ids[j]])) {
                    free = false;
                    break;
                }
            }
            if (free) {
                color[i] = c;
                used = std::max(used, c + 1);
                break;
            }
        }
    }
    return std::max(1, used);
}

// Segments covered by construction: chords of single disks plus
// center-to-center links between overlapping disks. k is the greedy
// coloring number of the disks used in the construction so that a
// k-colorable cover exists.
inline InstanceFile segment_instance(std::uint64_t seed) {
    Rng rng(seed);
    InstanceFile file;
    const int m = 4 + static_cast<int>(rng.next_below(17));  // <= 20
    for (int d = 0; d < m; ++d) {
        file.inst.disks.push_back({{rng.uniform(1.5, 6.5), rng.uniform(1.5, 6.5)}});
    }
    std::vector<std::pair<int, int>> links;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (dist(file.inst.disks[a].center, file.inst.disks[b].center) <= 1.9) {
                links.emplace_back(a, b);
            }
        }
    }
    std::vector<Segment> segments;
    std::vector<int> sources;
    const int n_seg = 1 + static_cast<int>(rng.next_below(4));
    for (int s = 0; s < n_seg; ++s) {
        if (!links.empty() && rng.next_below(2) == 1) {
            const auto [a, b] = links[rng.next_below(links.size())];
            segments.push_back({file.inst.disks[a].center, file.inst.disks[b].center});
            sources.push_back(a);
            sources.push_back(b);
        } else {
            const int d = static_cast<int>(rng.next_below(m));
            Segment seg{interior_point(file.inst.disks[d], rng),
                        interior_point(file.inst.disks[d], rng)};
            if (dist(seg.a, seg.b) < 1e-6) seg.b.x += 0.05;
            segments.push_back(seg);
            sources.push_back(d);
        }
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    file.inst.k = greedy_color_count(file.inst.disks, sources);
    file.segments = std::move(segments);
    return file;
}

// Region instance covered by construction: a jittered disk lattice whose
// worst-case gap stays below the unit radius. Lattice spacing keeps the four
// (row parity, column parity) classes pairwise disjoint, so the lattice is
// 4-colorable and k = 4 always admits a cover.
inline InstanceFile region_instance(std::uint64_t seed) {
    Rng rng(seed);
    InstanceFile file;
    file.inst.k = 4;
    const double x0 = rng.uniform(1.0, 1.5);
    const double y0 = rng.uniform(1.0, 1.5);
    const double w = rng.uniform(1.6, 2.4);
    const double h = rng.uniform(1.6, 2.4);
    file.region = Rect{x0, y0, x0 + w, y0 + h};

    const double spacing = 1.04;  // 2*spacing - 2*jitter*sqrt2 > 2 + eps
    const double jitter = 0.01;
    const int nx = static_cast<int>(std::ceil((w + 0.5) / spacing)) + 1;
    const int ny = static_cast<int>(std::ceil((h + 0.5) / spacing)) + 1;
    for (int a = 0; a < nx; ++a) {
        for (int b = 0; b < ny; ++b) {
            const double cx = x0 - 0.25 + a * spacing + rng.uniform(-jitter, jitter);
            const double cy = y0 - 0.25 + b * spacing + rng.uniform(-jitter, jitter);
            file.inst.disks.push_back({{cx, cy}});
        }
    }
    return file;
}

}  // namespace testgen
