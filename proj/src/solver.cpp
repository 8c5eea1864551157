#include "kcover/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "kcover/errors.hpp"

namespace kcover {

namespace {

constexpr double kGeneralPositionScale = 1e-6;

int block_period_for(double tau) {
    return 1 + static_cast<int>(std::ceil(2.0 / tau));
}

}  // namespace

int validate_instance(const Instance& inst, const Tolerance& tol) {
    if (inst.k < 1) throw ValidationError("instance: k must be >= 1");
    if (inst.disks.empty()) throw ValidationError("instance: needs at least one disk");
    auto check_point = [](const Point& p, const char* what) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw ValidationError(std::string(what) + ": non-finite coordinate");
        }
        if (p.x < 0.0 || p.y < 0.0) {
            throw ValidationError(std::string(what) + ": outside the first quadrant");
        }
    };
    for (const auto& d : inst.disks) check_point(d.center, "disk center");
    for (size_t i = 0; i < inst.points.size(); ++i) {
        check_point(inst.points[i], "point");
        bool covered = false;
        for (const auto& d : inst.disks) {
            if (disk_contains(d, inst.points[i], tol)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            throw ValidationError("instance: point " + std::to_string(i) +
                                  " is covered by no disk");
        }
    }

    int warnings = 0;
    for (size_t a = 0; a < inst.disks.size(); ++a) {
        for (size_t b = a + 1; b < inst.disks.size(); ++b) {
            const double d = dist(inst.disks[a].center, inst.disks[b].center);
            if (std::abs(d - 2.0) < kGeneralPositionScale) ++warnings;
        }
    }
    for (const auto& p : inst.points) {
        for (const auto& d : inst.disks) {
            if (std::abs(dist(p, d.center) - 1.0) < kGeneralPositionScale) ++warnings;
        }
    }
    return warnings;
}

int layout_set_index(const CellId& c, double tau, SolveMode mode) {
    const int rho = rho_of(tau, mode);
    switch (rho) {
        case 4:
            return color_set_index(c, {tau, 2});
        case 9:
            return color_set_index(c, {tau, 3});
        case 6:
            return (c.i % 3) + 3 * (c.j % 2);
        case 7:
            return ((c.i % 7) + 2 * (c.j % 7)) % 7;
        default:
            throw std::logic_error("layout_set_index: unexpected rho");
    }
}

namespace {

// Backtracking search over one cell. Points are processed in a fixed order
// (fewest covering candidates first); each uncovered point branches over
// (covering disk, class). Solutions are produced in canonical order, fewest
// classes first; a solution whose top class is empty already appeared at a
// lower deepening level and is skipped.
class CellSearch {
  public:
    using Sink = std::function<bool(const CellSolution&)>;

    CellSearch(const CellId& cell, const std::vector<int>& remaining_points,
               const std::vector<int>& candidates, const std::vector<int>& handover,
               const Instance& inst, const CellContext& ctx)
        : cell_(cell), inst_(inst), ctx_(ctx), handover_(handover) {
        pool_ = handover;
        pool_.insert(pool_.end(), candidates.begin(), candidates.end());
        std::sort(pool_.begin(), pool_.end());
        pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());

        points_ = remaining_points;
        coverers_.resize(points_.size());
        for (size_t pi = 0; pi < points_.size(); ++pi) {
            for (int d : pool_) {
                if (disk_contains(inst_.disks[d], inst_.points[points_[pi]], ctx_.tol)) {
                    coverers_[pi].push_back(d);
                }
            }
        }
        std::vector<size_t> order(points_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (coverers_[a].size() != coverers_[b].size()) {
                return coverers_[a].size() < coverers_[b].size();
            }
            return points_[a] < points_[b];
        });
        std::vector<int> pts2;
        std::vector<std::vector<int>> cov2;
        for (size_t idx : order) {
            pts2.push_back(points_[idx]);
            cov2.push_back(std::move(coverers_[idx]));
        }
        points_ = std::move(pts2);
        coverers_ = std::move(cov2);
        cover_depth_.assign(points_.size(), 0);
    }

    // Feeds solutions to the sink until it returns true. Returns whether the
    // sink accepted one.
    bool enumerate(const Sink& sink) {
        sink_ = &sink;
        for (int allowed = 1; allowed <= ctx_.k; ++allowed) {
            classes_.assign(ctx_.k, {});
            placed_.clear();
            std::fill(cover_depth_.begin(), cover_depth_.end(), 0);
            allowed_ = allowed;
            if (place_handover(0)) return true;
        }
        return false;
    }

    CellSolution first() {
        CellSolution out;
        const bool found = enumerate([&](const CellSolution& sol) {
            out = sol;
            return true;
        });
        if (!found) {
            throw CellInfeasibleError(
                cell_.i, cell_.j,
                "cell (" + std::to_string(cell_.i) + ", " + std::to_string(cell_.j) +
                    "): no " + std::to_string(ctx_.k) +
                    "-class cover of its remaining points includes all handover disks");
        }
        return out;
    }

  private:
    void count_node() {
        if (ctx_.total_nodes) ++(*ctx_.total_nodes);
        if (ctx_.nodes) {
            ++(*ctx_.nodes);
            if (ctx_.node_budget > 0 && *ctx_.nodes > ctx_.node_budget) {
                throw BudgetExhaustedError(cell_.i, cell_.j,
                                           "cell (" + std::to_string(cell_.i) + ", " +
                                               std::to_string(cell_.j) +
                                               "): node budget exhausted");
            }
        }
    }

    bool fits(int disk, int cls) const {
        if (static_cast<int>(classes_[cls].size()) >= ctx_.alpha) return false;
        for (int other : classes_[cls]) {
            if (disks_conflict(inst_.disks[disk], inst_.disks[other], ctx_.tol)) {
                return false;
            }
        }
        if (ctx_.color_ok && ctx_.colored_here && ctx_.colored_here(disk) &&
            !ctx_.color_ok(disk, cls)) {
            return false;
        }
        return true;
    }

    void place(int disk, int cls) {
        classes_[cls].push_back(disk);
        placed_.insert(disk);
        for (size_t pi = 0; pi < points_.size(); ++pi) {
            if (disk_contains(inst_.disks[disk], inst_.points[points_[pi]], ctx_.tol)) {
                ++cover_depth_[pi];
            }
        }
    }

    void unplace(int disk, int cls) {
        classes_[cls].pop_back();
        placed_.erase(disk);
        for (size_t pi = 0; pi < points_.size(); ++pi) {
            if (disk_contains(inst_.disks[disk], inst_.points[points_[pi]], ctx_.tol)) {
                --cover_depth_[pi];
            }
        }
    }

    bool place_handover(size_t hi) {
        if (hi == handover_.size()) return cover_points(0);
        const int disk = handover_[hi];
        for (int cls = 0; cls < allowed_; ++cls) {
            count_node();
            if (!fits(disk, cls)) continue;
            place(disk, cls);
            if (place_handover(hi + 1)) return true;
            unplace(disk, cls);
        }
        return false;
    }

    bool cover_points(size_t from) {
        size_t pi = from;
        while (pi < points_.size() && cover_depth_[pi] > 0) ++pi;
        if (pi == points_.size()) return complete();
        for (int disk : coverers_[pi]) {
            if (placed_.count(disk)) continue;
            for (int cls = 0; cls < allowed_; ++cls) {
                count_node();
                if (!fits(disk, cls)) continue;
                place(disk, cls);
                if (cover_points(pi + 1)) return true;
                unplace(disk, cls);
            }
        }
        return false;
    }

    bool complete() {
        if (allowed_ > 1 && classes_[allowed_ - 1].empty()) return false;
        return (*sink_)({cell_, classes_});
    }

    CellId cell_;
    const Instance& inst_;
    const CellContext& ctx_;
    std::vector<int> handover_;
    std::vector<int> pool_;
    std::vector<int> points_;
    std::vector<std::vector<int>> coverers_;
    std::vector<int> cover_depth_;
    std::vector<std::vector<int>> classes_;
    std::set<int> placed_;
    const Sink* sink_ = nullptr;
    int allowed_ = 1;
};

}  // namespace

CellSolution solve_cell(const CellId& cell, const std::vector<int>& remaining_points,
                        const std::vector<int>& candidates,
                        const std::vector<int>& handover, const Instance& inst,
                        const CellContext& ctx) {
    CellSearch search(cell, remaining_points, candidates, handover, inst, ctx);
    return search.first();
}

CellSolution handover_pass(const CellSolution& sol, const CellId& cell,
                           const GridParams& g, const std::vector<UnitDisk>& disks,
                           HandoverLedger& ledger) {
    CellSolution retained;
    retained.cell = sol.cell;
    retained.classes.resize(sol.classes.size());
    for (size_t a = 0; a < sol.classes.size(); ++a) {
        for (int d : sol.classes[a]) {
            const CellId home = cell_of(disks[d].center, g);
            if (order_key(home) > order_key(cell)) {
                ledger.by_cell[home].push_back({d, true});
            } else {
                retained.classes[a].push_back(d);
            }
        }
    }
    return retained;
}

std::vector<int> mark_covered(const std::vector<Point>& points,
                              const std::vector<UnitDisk>& disks,
                              const std::vector<int>& selected,
                              const Tolerance& tol) {
    std::vector<int> remaining;
    for (int p = 0; p < static_cast<int>(points.size()); ++p) {
        bool covered = false;
        for (int d : selected) {
            if (disk_contains(disks[d], points[p], tol)) {
                covered = true;
                break;
            }
        }
        if (!covered) remaining.push_back(p);
    }
    return remaining;
}

std::map<int, int> assign_colors(const std::vector<CellSolution>& sols,
                                 const GridParams& g, int k) {
    std::map<int, int> chi;
    for (const auto& sol : sols) {
        const int set = color_set_index(sol.cell, g);
        for (size_t a = 0; a < sol.classes.size(); ++a) {
            for (int d : sol.classes[a]) {
                chi[d] = set * k + static_cast<int>(a);
            }
        }
    }
    return chi;
}

namespace {

// Sweep over the cells in row-major order with chronological backtracking:
// when a later cell has no solution compatible with the choices so far, the
// previous cells move on to their next canonical solution. Whenever the
// instance admits a k-colorable cover, its restriction gives every cell a
// feasible choice, so the composed search terminates with a cover.
class Sweep {
  public:
    Sweep(const Instance& inst, const SolverConfig& cfg, SolveStats& stats)
        : inst_(inst), cfg_(cfg), stats_(stats),
          profile_(make_profile(cfg.tau, cfg.mode)),
          grid_{cfg.tau, block_period_for(cfg.tau)} {
        std::set<CellId> cells;
        point_cell_.resize(inst.points.size());
        for (size_t p = 0; p < inst.points.size(); ++p) {
            point_cell_[p] = cell_of(inst.points[p], grid_);
            cells.insert(point_cell_[p]);
        }
        center_cell_.resize(inst.disks.size());
        for (size_t d = 0; d < inst.disks.size(); ++d) {
            center_cell_[d] = cell_of(inst.disks[d].center, grid_);
            cells.insert(center_cell_[d]);
        }
        cells_.assign(cells.begin(), cells.end());
        covered_.assign(inst.points.size(), false);
        chi_.assign(inst.disks.size(), -1);
        handed_.assign(inst.disks.size(), false);
        by_color_.assign(static_cast<size_t>(profile_.rho) * inst.k, {});
    }

    ColoredCover run() {
        if (!descend(0)) {
            const CellId blocked = blocked_ ? *blocked_ : CellId{0, 0};
            throw CellInfeasibleError(
                blocked.i, blocked.j,
                "cell (" + std::to_string(blocked.i) + ", " + std::to_string(blocked.j) +
                    "): no " + std::to_string(inst_.k) +
                    "-class cover of its remaining points includes all handover disks");
        }
        for (size_t p = 0; p < inst_.points.size(); ++p) {
            if (!covered_[p]) throw std::logic_error("solver left a point uncovered");
        }

        ColoredCover cover;
        std::set<int> colors_used;
        for (size_t d = 0; d < inst_.disks.size(); ++d) {
            if (chi_[d] >= 0) {
                cover.selected.push_back(static_cast<int>(d));
                cover.chi[static_cast<int>(d)] = chi_[d];
                colors_used.insert(chi_[d]);
            }
        }
        cover.num_colors = static_cast<int>(colors_used.size());
        if (cover.num_colors > profile_.rho * inst_.k) {
            throw std::logic_error("solver exceeded the rho*k color budget");
        }
        return cover;
    }

  private:
    struct Snapshot {
        std::vector<bool> covered;
        std::vector<int> chi;
        std::vector<bool> handed;
        std::vector<std::vector<int>> by_color;
        HandoverLedger ledger;
        int cells_processed;
        int handed_over;
        int max_cell_disks;
        int cardinality_violations;
    };

    int set_of(const CellId& c) const { return layout_set_index(c, cfg_.tau, cfg_.mode); }

    bool descend(size_t from) {
        size_t idx = from;
        std::vector<int> pts_here;
        std::vector<int> hand;
        for (; idx < cells_.size(); ++idx) {
            pts_here.clear();
            hand.clear();
            for (size_t p = 0; p < inst_.points.size(); ++p) {
                if (!covered_[p] && point_cell_[p] == cells_[idx]) {
                    pts_here.push_back(static_cast<int>(p));
                }
            }
            if (auto it = ledger_.by_cell.find(cells_[idx]); it != ledger_.by_cell.end()) {
                for (const auto& entry : it->second) hand.push_back(entry.disk);
                std::sort(hand.begin(), hand.end());
            }
            if (!pts_here.empty() || !hand.empty()) break;
        }
        if (idx == cells_.size()) return true;
        const CellId cell = cells_[idx];

        std::vector<int> candidates;
        for (int d : disks_intersecting_cell(inst_.disks, cell, grid_, cfg_.tol)) {
            if (std::find(hand.begin(), hand.end(), d) == hand.end()) {
                candidates.push_back(d);
            }
        }

        CellContext ctx;
        ctx.disks = &inst_.disks;
        ctx.tol = cfg_.tol;
        ctx.k = inst_.k;
        ctx.alpha = profile_.alpha;
        ctx.node_budget = cfg_.cell_node_budget;
        ctx.nodes = &cell_nodes_[cell];
        ctx.total_nodes = &stats_.search_nodes;
        ctx.colored_here = [&](int d) {
            return !(order_key(center_cell_[d]) > order_key(cell));
        };
        if (cfg_.mode == SolveMode::Default) {
            const int base = set_of(cell) * inst_.k;
            ctx.color_ok = [this, base](int d, int cls) {
                for (int other : by_color_[base + cls]) {
                    if (disks_conflict(inst_.disks[d], inst_.disks[other], cfg_.tol)) {
                        return false;
                    }
                }
                return true;
            };
        }

        CellSearch search(cell, pts_here, candidates, hand, inst_, ctx);
        const bool done = search.enumerate([&](const CellSolution& sol) {
            const Snapshot snap{covered_,       chi_,
                                handed_,        by_color_,
                                ledger_,        stats_.cells_processed,
                                stats_.handed_over, stats_.max_cell_disks,
                                stats_.cardinality_violations};
            apply(cell, sol);
            if (descend(idx + 1)) return true;
            covered_ = snap.covered;
            chi_ = snap.chi;
            handed_ = snap.handed;
            by_color_ = snap.by_color;
            ledger_ = snap.ledger;
            stats_.cells_processed = snap.cells_processed;
            stats_.handed_over = snap.handed_over;
            stats_.max_cell_disks = snap.max_cell_disks;
            stats_.cardinality_violations = snap.cardinality_violations;
            return false;
        });
        if (!done && (!blocked_ || idx >= blocked_idx_)) {
            blocked_ = cell;
            blocked_idx_ = idx;
        }
        return done;
    }

    void apply(const CellId& cell, const CellSolution& sol) {
        std::set<int> cell_disks;
        for (const auto& cls : sol.classes) cell_disks.insert(cls.begin(), cls.end());
        stats_.max_cell_disks =
            std::max(stats_.max_cell_disks, static_cast<int>(cell_disks.size()));
        if (static_cast<int>(cell_disks.size()) > profile_.alpha * inst_.k) {
            ++stats_.cardinality_violations;
        }

        const int set = set_of(cell);
        for (size_t a = 0; a < sol.classes.size(); ++a) {
            for (int d : sol.classes[a]) {
                if (order_key(center_cell_[d]) > order_key(cell)) {
                    if (handed_[d]) throw std::logic_error("disk handed over twice");
                    handed_[d] = true;
                    ledger_.by_cell[center_cell_[d]].push_back({d, true});
                    ++stats_.handed_over;
                } else {
                    const int color = set * inst_.k + static_cast<int>(a);
                    chi_[d] = color;
                    by_color_[color].push_back(d);
                }
            }
        }

        for (size_t p = 0; p < inst_.points.size(); ++p) {
            if (covered_[p]) continue;
            for (int d : cell_disks) {
                if (disk_contains(inst_.disks[d], inst_.points[p], cfg_.tol)) {
                    covered_[p] = true;
                    break;
                }
            }
        }
        ++stats_.cells_processed;
    }

    const Instance& inst_;
    const SolverConfig& cfg_;
    SolveStats& stats_;
    PackingProfile profile_;
    GridParams grid_;
    std::vector<CellId> cells_;
    std::vector<CellId> point_cell_;
    std::vector<CellId> center_cell_;
    std::vector<bool> covered_;
    std::vector<int> chi_;
    std::vector<bool> handed_;
    std::vector<std::vector<int>> by_color_;
    HandoverLedger ledger_;
    std::map<CellId, std::uint64_t> cell_nodes_;
    std::optional<CellId> blocked_;
    size_t blocked_idx_ = 0;
};

ColoredCover solve_impl(const Instance& inst, const SolverConfig& cfg,
                        SolveStats& stats) {
    stats.general_position_warnings = validate_instance(inst, cfg.tol);
    Sweep sweep(inst, cfg, stats);
    return sweep.run();
}

bool conflict_free(const Instance& inst, const ColoredCover& cover,
                   const Tolerance& tol) {
    for (auto a = cover.chi.begin(); a != cover.chi.end(); ++a) {
        for (auto b = std::next(a); b != cover.chi.end(); ++b) {
            if (a->second == b->second &&
                disks_conflict(inst.disks[a->first], inst.disks[b->first], tol)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

ColoredCover solve(const Instance& inst, const SolverConfig& cfg, SolveStats* stats) {
    SolveStats local;
    SolveStats& st = stats ? *stats : local;
    st = SolveStats{};
    ColoredCover cover = solve_impl(inst, cfg, st);

    // Every output is checked. Default mode is conflict-free by construction
    // (the cross-cell constraint in the cell search); tight-experimental has
    // no proven layout for rho in {6, 7}, so a failed check downgrades.
    if (!conflict_free(inst, cover, cfg.tol)) {
        if (cfg.mode == SolveMode::TightExperimental) {
            SolverConfig fallback = cfg;
            fallback.mode = SolveMode::Default;
            SolveStats retry;
            cover = solve_impl(inst, fallback, retry);
            retry.search_nodes += st.search_nodes;
            retry.downgraded = true;
            st = retry;
            if (!conflict_free(inst, cover, cfg.tol)) {
                throw std::logic_error("downgraded solve emitted a conflict");
            }
        } else {
            throw std::logic_error("default-mode solve emitted a conflict");
        }
    }
    return cover;
}

}  // namespace kcover
