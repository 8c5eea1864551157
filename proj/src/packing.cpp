#include "kcover/packing.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "kcover/errors.hpp"
#include "kcover/rng.hpp"

#include "json.hpp"

namespace kcover {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kGridEps = 1e-12;

}  // namespace

bool alpha_table_has(double tau) {
    if (std::abs(tau - 1.0) <= kGridEps) return true;
    if (tau >= kSqrt2 - kGridEps && tau <= 1.6 + kGridEps) return true;
    for (double t : {2.0, 3.0, 4.0, 5.0}) {
        if (std::abs(tau - t) <= kGridEps) return true;
    }
    return false;
}

int alpha_table(double tau) {
    if (std::abs(tau - 1.0) <= kGridEps) return 4;
    if (tau >= kSqrt2 - kGridEps && tau <= 1.6 + kGridEps) return 5;
    if (std::abs(tau - 2.0) <= kGridEps) return 7;
    if (std::abs(tau - 3.0) <= kGridEps) return 10;
    if (std::abs(tau - 4.0) <= kGridEps) return 14;
    if (std::abs(tau - 5.0) <= kGridEps) return 17;
    throw ValidationError("alpha_table: tau not tabulated");
}

int alpha_obs1(int tau) {
    if (tau < 1) throw ValidationError("alpha_obs1: tau must be a positive integer");
    if (tau % 2 == 0) {
        return 2 * tau + 2 + (tau / 2) * (tau / 2);
    }
    return 4 * ((tau + 1) / 2) + 4 + (tau * tau) / 4;
}

int alpha_analytic(double tau) {
    // Disks packed into the Minkowski sum of the cell and a radius-2 disk
    // cannot beat the hexagonal density, so alpha*pi <= area * pi/sqrt(12).
    const double area = 4.0 * std::numbers::pi + 8.0 * tau + tau * tau;
    return static_cast<int>(std::floor(area * kHexPackingDensity / std::numbers::pi));
}

int rho_of(double tau, SolveMode mode) {
    if (tau < 1.0 - kGridEps || tau > 5.0 + kGridEps) {
        throw ValidationError("rho_of: tau outside [1, 5]");
    }
    if (mode == SolveMode::TightExperimental) {
        if (tau >= 2.0) return 4;
        if (tau >= 1.6) return 6;
        if (tau >= kSqrt2) return 7;
        return 9;
    }
    const int reach = static_cast<int>(std::ceil(2.0 / tau));
    return (1 + reach) * (1 + reach);
}

PackingProfile make_profile(double tau, SolveMode mode) {
    if (tau < 1.0 - kGridEps || tau > 5.0 + kGridEps) {
        throw ValidationError("make_profile: tau outside [1, 5]");
    }
    PackingProfile p;
    p.tau = tau;
    p.rho = rho_of(tau, mode);
    p.mode = mode == SolveMode::TightExperimental ? ProfileMode::TightExperimental
                                                  : ProfileMode::Table;
    if (alpha_table_has(tau)) {
        p.alpha = alpha_table(tau);
    } else {
        p.alpha = alpha_analytic(tau);
        p.alpha_fallback = true;
    }
    return p;
}

namespace {

struct SearchState {
    double tau;
    double contain2;  // squared threshold for meeting the cell
    double clear2;    // squared threshold for pairwise disjointness
    std::vector<Point> centers;

    bool meets_cell(const Point& p) const {
        const double cx = std::clamp(p.x, 0.0, tau);
        const double cy = std::clamp(p.y, 0.0, tau);
        const double dx = p.x - cx;
        const double dy = p.y - cy;
        return dx * dx + dy * dy <= contain2;
    }

    // Squared distance to the nearest placed center, excluding index skip.
    double nearest2(const Point& p, int skip = -1) const {
        double best = 1e30;
        for (int i = 0; i < static_cast<int>(centers.size()); ++i) {
            if (i == skip) continue;
            const double dx = p.x - centers[i].x;
            const double dy = p.y - centers[i].y;
            best = std::min(best, dx * dx + dy * dy);
        }
        return best;
    }

    bool valid_new(const Point& p) const {
        return meets_cell(p) && nearest2(p) > clear2;
    }
};

constexpr int kPoolSize = 64;

// One round of greedy insertion: sample a pool, keep the candidate farthest
// from the current set. Returns false when the pool had no valid candidate.
bool greedy_round(SearchState& st, Rng& rng) {
    const double lo = -1.0;
    const double hi = st.tau + 1.0;
    bool found = false;
    Point best_p{};
    double best_sep = -1.0;
    for (int s = 0; s < kPoolSize; ++s) {
        Point p{rng.uniform(lo, hi), rng.uniform(lo, hi)};
        if (!st.meets_cell(p)) continue;
        const double sep = st.nearest2(p);
        if (sep <= st.clear2) continue;
        if (sep > best_sep) {
            best_sep = sep;
            best_p = p;
            found = true;
        }
    }
    if (found) st.centers.push_back(best_p);
    return found;
}

// Push each disk away from its nearest neighbor; revert moves that break
// validity.
void repel(SearchState& st, int steps) {
    for (int step = 0; step < steps; ++step) {
        for (int i = 0; i < static_cast<int>(st.centers.size()); ++i) {
            const Point old = st.centers[i];
            double vx = 0.0;
            double vy = 0.0;
            for (int j = 0; j < static_cast<int>(st.centers.size()); ++j) {
                if (j == i) continue;
                const double dx = old.x - st.centers[j].x;
                const double dy = old.y - st.centers[j].y;
                const double d2 = dx * dx + dy * dy;
                if (d2 < 6.5 && d2 > 1e-12) {
                    const double w = 1.0 / d2;
                    vx += dx * w;
                    vy += dy * w;
                }
            }
            const double norm = std::sqrt(vx * vx + vy * vy);
            if (norm < 1e-12) continue;
            Point moved{old.x + 0.08 * vx / norm, old.y + 0.08 * vy / norm};
            // Pull back onto the reachable band around the cell if needed.
            const double cx = std::clamp(moved.x, 0.0, st.tau);
            const double cy = std::clamp(moved.y, 0.0, st.tau);
            const double dx = moved.x - cx;
            const double dy = moved.y - cy;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d * d > st.contain2 && d > 0.0) {
                const double shrink = (1.0 - 1e-9) / d;
                moved = {cx + dx * shrink, cy + dy * shrink};
            }
            st.centers[i] = moved;
            if (!st.meets_cell(moved) || st.nearest2(moved, i) <= st.clear2) {
                st.centers[i] = old;
            }
        }
    }
}

std::vector<UnitDisk> canonical(std::vector<Point> centers) {
    std::sort(centers.begin(), centers.end(), [](const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::vector<UnitDisk> disks;
    disks.reserve(centers.size());
    for (const Point& p : centers) disks.push_back({p});
    return disks;
}

bool lex_less(const std::vector<UnitDisk>& a, const std::vector<UnitDisk>& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i].center.x != b[i].center.x) return a[i].center.x < b[i].center.x;
        if (a[i].center.y != b[i].center.y) return a[i].center.y < b[i].center.y;
    }
    return a.size() < b.size();
}

}  // namespace

PackingSearchResult empirical_alpha_search(const PackingConfig& cfg,
                                           const Tolerance& tol) {
    if (cfg.trials < 1) throw ValidationError("empirical_alpha_search: trials >= 1");
    Rng rng(cfg.seed);
    SearchState st;
    st.tau = cfg.tau;
    st.contain2 = (1.0 + tol.eps) * (1.0 + tol.eps);
    st.clear2 = (2.0 + tol.eps) * (2.0 + tol.eps);

    PackingSearchResult best;
    best.tau = cfg.tau;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        st.centers.clear();
        while (greedy_round(st, rng)) {
        }
        // Local refinement only on trials already near the record.
        if (static_cast<int>(st.centers.size()) + 1 >= best.best_count &&
            cfg.local_search_steps > 0) {
            repel(st, cfg.local_search_steps);
            while (greedy_round(st, rng)) {
            }
        }
        const int count = static_cast<int>(st.centers.size());
        if (count > best.best_count) {
            best.best_count = count;
            best.configuration = canonical(st.centers);
        } else if (count == best.best_count) {
            auto cand = canonical(st.centers);
            if (lex_less(cand, best.configuration)) best.configuration = std::move(cand);
        }
    }
    return best;
}

std::string search_witness_json(const PackingSearchResult& result) {
    nlohmann::json j;
    j["tau"] = result.tau;
    j["best_count"] = result.best_count;
    auto centers = nlohmann::json::array();
    for (const auto& d : result.configuration) {
        centers.push_back({d.center.x, d.center.y});
    }
    j["centers"] = centers;
    return j.dump(2) + "\n";
}

void write_search_witness(const std::string& path, const PackingSearchResult& result) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open witness file: " + path);
    out << search_witness_json(result);
}

}  // namespace kcover
