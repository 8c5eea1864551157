#include "kcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "kcover/errors.hpp"
#include "kcover/rng.hpp"

namespace kcover {

VerifyReport verify(const Instance& inst, const ColoredCover& cover, int budget,
                    const Tolerance& tol) {
    const int m = static_cast<int>(inst.disks.size());
    for (int id : cover.selected) {
        if (id < 0 || id >= m) {
            throw ValidationError("verify: cover references unknown disk id " +
                                  std::to_string(id));
        }
    }
    std::set<int> sel(cover.selected.begin(), cover.selected.end());
    if (sel.size() != cover.chi.size()) {
        throw ValidationError("verify: chi must be keyed by exactly the selected ids");
    }
    for (const auto& [id, color] : cover.chi) {
        if (!sel.count(id)) {
            throw ValidationError("verify: chi keyed by unselected disk " +
                                  std::to_string(id));
        }
        (void)color;
    }

    VerifyReport report;
    report.covered = true;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        bool hit = false;
        for (int id : sel) {
            if (disk_contains(inst.disks[id], inst.points[p], tol)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.covered = false;
            report.violations.push_back({"uncovered-point", {p}});
        }
    }

    report.conflict_free = true;
    for (auto a = cover.chi.begin(); a != cover.chi.end(); ++a) {
        for (auto b = std::next(a); b != cover.chi.end(); ++b) {
            if (a->second == b->second &&
                disks_conflict(inst.disks[a->first], inst.disks[b->first], tol)) {
                report.conflict_free = false;
                report.violations.push_back({"color-conflict", {a->first, b->first}});
            }
        }
    }

    std::set<int> colors;
    for (const auto& [id, color] : cover.chi) colors.insert(color);
    report.colors_used = static_cast<int>(colors.size());
    report.within_budget = report.colors_used <= budget;
    return report;
}

namespace {

// Backtracking q-colorability; fills `coloring` on success. Vertices are
// tried in static degree-descending order with a new-color symmetry cap.
bool colorable(const std::vector<std::vector<bool>>& adj, int q,
               std::vector<int>& coloring) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) degree[i] += adj[i][j] ? 1 : 0;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });

    std::vector<int> color(n, -1);
    auto dfs = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        const int cap = std::min(q, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool okc = true;
            for (int u = 0; u < n; ++u) {
                if (adj[v][u] && color[u] == c) {
                    okc = false;
                    break;
                }
            }
            if (!okc) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return false;
    coloring = color;
    return true;
}

int greedy_clique_bound(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) degree[i] += adj[i][j] ? 1 : 0;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique) {
            if (!adj[v][u]) {
                fits = false;
                break;
            }
        }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

int chromatic_number(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    if (n > kOracleMaxDisks) {
        throw ValidationError("chromatic_number: more than 14 vertices");
    }
    std::vector<int> coloring;
    for (int q = std::max(1, greedy_clique_bound(adj)); q <= n; ++q) {
        if (colorable(adj, q, coloring)) return q;
    }
    return n;  // unreachable: q = n always colors
}

OracleResult min_colors_exact(const Instance& inst, int limit, const Tolerance& tol) {
    const int m = static_cast<int>(inst.disks.size());
    const int n = static_cast<int>(inst.points.size());
    if (m > kOracleMaxDisks || n > kOracleMaxPoints) {
        throw ValidationError("min_colors_exact: instance above oracle caps (m <= " +
                              std::to_string(kOracleMaxDisks) + ", n <= " +
                              std::to_string(kOracleMaxPoints) + ")");
    }
    if (m < 1) throw ValidationError("min_colors_exact: needs at least one disk");
    if (n == 0) {
        // Nothing to cover: the empty selection is a 0-color cover.
        OracleResult empty;
        empty.k_star = 0;
        empty.exceeds_limit = 0 > limit;
        return empty;
    }

    std::vector<std::uint32_t> pmask(n, 0);
    for (int p = 0; p < n; ++p) {
        for (int d = 0; d < m; ++d) {
            if (disk_contains(inst.disks[d], inst.points[p], tol)) {
                pmask[p] |= (1u << d);
            }
        }
        if (pmask[p] == 0) {
            throw ValidationError("min_colors_exact: point " + std::to_string(p) +
                                  " has no covering disk");
        }
    }

    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            conflict[a][b] = conflict[b][a] =
                disks_conflict(inst.disks[a], inst.disks[b], tol);
        }
    }

    auto covers = [&](std::uint32_t mask) {
        for (int p = 0; p < n; ++p) {
            if ((mask & pmask[p]) == 0) return false;
        }
        return true;
    };

    int best = m + 1;
    std::uint32_t best_mask = 0;
    std::vector<int> best_coloring;
    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!covers(mask)) continue;
        // Only minimal covers matter: a superset's conflict graph contains
        // the subset's, so its chromatic number is no smaller.
        bool minimal = true;
        for (int d = 0; d < m && minimal; ++d) {
            if ((mask >> d) & 1u) {
                if (covers(mask & ~(1u << d))) minimal = false;
            }
        }
        if (!minimal) continue;

        std::vector<int> members;
        for (int d = 0; d < m; ++d) {
            if ((mask >> d) & 1u) members.push_back(d);
        }
        const int sz = static_cast<int>(members.size());
        std::vector<std::vector<bool>> sub(sz, std::vector<bool>(sz, false));
        for (int a = 0; a < sz; ++a) {
            for (int b = 0; b < sz; ++b) sub[a][b] = conflict[members[a]][members[b]];
        }
        std::vector<int> coloring;
        const int lb = greedy_clique_bound(sub);
        if (lb >= best) continue;
        for (int q = std::max(1, lb); q < best; ++q) {
            if (colorable(sub, q, coloring)) {
                best = q;
                best_mask = mask;
                best_coloring = coloring;
                break;
            }
        }
        if (best == 1) break;
    }
    if (best > m) throw std::logic_error("min_colors_exact: no cover found");

    OracleResult result;
    result.k_star = best;
    result.exceeds_limit = best > limit;
    std::vector<int> members;
    for (int d = 0; d < m; ++d) {
        if ((best_mask >> d) & 1u) members.push_back(d);
    }
    result.witness.selected = members;
    for (size_t i = 0; i < members.size(); ++i) {
        result.witness.chi[members[i]] = best_coloring[i];
    }
    std::set<int> colors(best_coloring.begin(), best_coloring.end());
    result.witness.num_colors = static_cast<int>(colors.size());
    return result;
}

PlantedInstance gen_planted(int k, int cells_per_side, double density,
                            std::uint64_t seed, double tau) {
    if (k < 1) throw ValidationError("gen_planted: k must be >= 1");
    if (cells_per_side < 1) throw ValidationError("gen_planted: cells_per_side >= 1");
    if (density < 0.0) throw ValidationError("gen_planted: density >= 0");

    Rng rng(seed);
    const double span = cells_per_side * tau;
    const double lo = 1.0;
    const double hi = std::max(1.0, span - 1.0);
    const int target = std::max(1, (cells_per_side * cells_per_side + 1) / 2);

    PlantedInstance planted;
    planted.inst.k = k;
    for (int f = 0; f < k; ++f) {
        std::vector<Point> family;
        int attempts = 0;
        while (static_cast<int>(family.size()) < target && attempts < 400 * target) {
            ++attempts;
            Point p{rng.uniform(lo, hi), rng.uniform(lo, hi)};
            bool clear = true;
            for (const Point& q : family) {
                if (dist(p, q) <= 2.05) {
                    clear = false;
                    break;
                }
            }
            if (clear) family.push_back(p);
        }
        for (const Point& p : family) {
            planted.inst.disks.push_back({p});
            planted.family.push_back(f);
        }
    }

    const long long want =
        std::llround(density * cells_per_side * cells_per_side);
    int attempts = 0;
    while (static_cast<long long>(planted.inst.points.size()) < want &&
           attempts < 400 * want + 100) {
        ++attempts;
        Point p{rng.uniform(0.0, span), rng.uniform(0.0, span)};
        for (const auto& d : planted.inst.disks) {
            if (disk_contains(d, p)) {
                planted.inst.points.push_back(p);
                break;
            }
        }
    }

    for (int d = 0; d < static_cast<int>(planted.inst.disks.size()); ++d) {
        planted.witness.selected.push_back(d);
        planted.witness.chi[d] = planted.family[d];
    }
    std::set<int> colors(planted.family.begin(), planted.family.end());
    planted.witness.num_colors = static_cast<int>(colors.size());
    return planted;
}

Instance gen_uniform(int k, int cells_per_side, double density, std::uint64_t seed,
                     double tau) {
    if (k < 1) throw ValidationError("gen_uniform: k must be >= 1");
    if (cells_per_side < 1) throw ValidationError("gen_uniform: cells_per_side >= 1");
    Rng rng(seed);
    const double span = cells_per_side * tau;
    const double lo = 1.0;
    const double hi = std::max(1.0, span - 1.0);
    Instance inst;
    inst.k = k;
    const int m = std::max(1, cells_per_side * cells_per_side);
    for (int d = 0; d < m; ++d) {
        inst.disks.push_back({{rng.uniform(lo, hi), rng.uniform(lo, hi)}});
    }
    const long long n = std::llround(density * cells_per_side * cells_per_side);
    for (long long p = 0; p < n; ++p) {
        inst.points.push_back({rng.uniform(0.0, span), rng.uniform(0.0, span)});
    }
    return inst;
}

}  // namespace kcover
