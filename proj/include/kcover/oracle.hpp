#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcover/solver.hpp"

namespace kcover {

struct Violation {
    std::string kind;  // "uncovered-point" or "color-conflict"
    std::vector<int> ids;
};

struct VerifyReport {
    bool covered = false;
    bool conflict_free = false;
    int colors_used = 0;
    bool within_budget = false;
    std::vector<Violation> violations;

    bool ok() const { return covered && conflict_free && within_budget; }
};

// Checks a cover against an instance: every point inside a selected disk, no
// conflicting pair sharing a color, distinct colors within budget. The
// violation list is exhaustive. Unknown disk ids or a chi whose domain is not
// exactly the selected set throw ValidationError.
VerifyReport verify(const Instance& inst, const ColoredCover& cover, int budget,
                    const Tolerance& tol = {});

struct OracleResult {
    int k_star = 0;
    ColoredCover witness;
    bool exceeds_limit = false;
};

// Exact minimum over covering subsets of the chromatic number of the induced
// conflict graph. Enforced caps: m <= 14, n <= 12.
OracleResult min_colors_exact(const Instance& inst, int limit,
                              const Tolerance& tol = {});

inline constexpr int kOracleMaxDisks = 14;
inline constexpr int kOracleMaxPoints = 12;

// Exact chromatic number by iterative deepening with a greedy clique lower
// bound; at most 14 vertices. adj is a symmetric matrix.
int chromatic_number(const std::vector<std::vector<bool>>& adj);

struct PlantedInstance {
    Instance inst;
    ColoredCover witness;       // the planted coloring: family index per disk
    std::vector<int> family;    // family index per disk
};

// k disk families, each internally separated by more than 2.05 so it is
// conflict-free; points scattered uniformly inside the union. k-colorable by
// construction, deterministic per seed.
PlantedInstance gen_planted(int k, int cells_per_side, double density,
                            std::uint64_t seed, double tau = 2.0);

// Points and disks uniform in a box; the covering invariant may fail, which
// solve() then rejects.
Instance gen_uniform(int k, int cells_per_side, double density, std::uint64_t seed,
                     double tau = 2.0);

}  // namespace kcover
