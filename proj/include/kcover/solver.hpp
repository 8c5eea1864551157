#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kcover/geometry.hpp"
#include "kcover/grid.hpp"
#include "kcover/packing.hpp"

namespace kcover {

struct Instance {
    std::vector<Point> points;
    std::vector<UnitDisk> disks;
    int k = 1;
};

struct SolverConfig {
    double tau = 2.0;
    SolveMode mode = SolveMode::Default;
    Tolerance tol{};
    std::uint64_t cell_node_budget = 0;  // 0 = unbounded
};

// Exactly k disk-id lists; within each list disks are pairwise disjoint and
// the list never exceeds alpha(tau) entries.
struct CellSolution {
    CellId cell;
    std::vector<std::vector<int>> classes;
};

struct HandoverEntry {
    int disk = -1;
    // The receiving cell is free to place the disk in any of its classes;
    // only inclusion is required.
    bool class_free = true;
};

struct HandoverLedger {
    std::map<CellId, std::vector<HandoverEntry>> by_cell;
};

struct ColoredCover {
    std::vector<int> selected;  // ascending disk ids
    std::map<int, int> chi;     // disk id -> color id
    int num_colors = 0;

    friend bool operator==(const ColoredCover&, const ColoredCover&) = default;
};

struct SolveStats {
    int cells_processed = 0;
    int handed_over = 0;
    int max_cell_disks = 0;          // largest per-cell class union seen
    int cardinality_violations = 0;  // cells whose union exceeded alpha*k
    std::uint64_t search_nodes = 0;
    bool downgraded = false;  // tight-experimental output failed verification
    int general_position_warnings = 0;
};

// Throws ValidationError on hard violations (uncoverable point, negative
// coordinates, non-finite values, k < 1, no disks). Returns the number of
// general-position warnings: distances within 1e-6 of the coverage or
// conflict thresholds are reported, not rejected.
int validate_instance(const Instance& inst, const Tolerance& tol = {});

// Color-set index of a cell under the layout active for (tau, mode). Default
// mode uses the g x g block pattern with g = 1 + ceil(2/tau); the
// tight-experimental layouts for rho = 6 and 7 are unproven and rely on the
// verifier gate in solve().
int layout_set_index(const CellId& c, double tau, SolveMode mode);

struct CellContext {
    const std::vector<UnitDisk>* disks = nullptr;
    Tolerance tol{};
    int k = 1;
    int alpha = 7;
    std::uint64_t node_budget = 0;
    // Per-cell node counter the budget applies to (cumulative across
    // re-visits when the sweep backtracks).
    std::uint64_t* nodes = nullptr;
    std::uint64_t* total_nodes = nullptr;
    // True when the disk would be colored by the cell under search (its
    // center lies in this cell or an earlier one).
    std::function<bool(int)> colored_here;
    // Cross-cell constraint: may disk take this class without colliding with
    // an equal-colored disk from an earlier cell? Unset = unconstrained.
    std::function<bool(int, int)> color_ok;
};

// Exhaustive backtracking search for one cell: points ordered by fewest
// covering candidates, branching over (covering disk, class), class counts
// deepened so the first solution uses as few classes as possible. Throws
// CellInfeasibleError / BudgetExhaustedError.
CellSolution solve_cell(const CellId& cell, const std::vector<int>& remaining_points,
                        const std::vector<int>& candidates,
                        const std::vector<int>& handover, const Instance& inst,
                        const CellContext& ctx);

// Moves every disk centered in a later cell out of the solution and into
// that cell's handover set; returns what stays.
CellSolution handover_pass(const CellSolution& sol, const CellId& cell,
                           const GridParams& g, const std::vector<UnitDisk>& disks,
                           HandoverLedger& ledger);

// Point ids not covered by any disk in `selected` (handed-over disks count:
// they are guaranteed to be placed by their receiving cell).
std::vector<int> mark_covered(const std::vector<Point>& points,
                              const std::vector<UnitDisk>& disks,
                              const std::vector<int>& selected,
                              const Tolerance& tol = {});

// chi per the block scheme: a disk in class a of cell c gets color
// color_set_index(c, g) * k + a.
std::map<int, int> assign_colors(const std::vector<CellSolution>& sols,
                                 const GridParams& g, int k);

ColoredCover solve(const Instance& inst, const SolverConfig& cfg,
                   SolveStats* stats = nullptr);

}  // namespace kcover
