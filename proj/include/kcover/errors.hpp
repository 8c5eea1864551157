#pragma once

#include <stdexcept>
#include <string>

#include "kcover/geometry.hpp"

namespace kcover {

// Bad input: schema violations, broken invariants, values outside domains.
// Maps to CLI exit code 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// No k-class cover of a cell's remaining points exists that also places all
// handover disks. Maps to CLI exit code 2.
struct CellInfeasibleError : std::runtime_error {
    CellInfeasibleError(int i, int j, const std::string& msg)
        : std::runtime_error(msg), cell_i(i), cell_j(j) {}
    int cell_i;
    int cell_j;
};

// Per-cell backtracking node budget hit. Maps to CLI exit code 2.
struct BudgetExhaustedError : std::runtime_error {
    BudgetExhaustedError(int i, int j, const std::string& msg)
        : std::runtime_error(msg), cell_i(i), cell_j(j) {}
    int cell_i;
    int cell_j;
};

// A segment sub-interval has empty coverage signature. Exit code 1.
struct SegmentUncoveredError : std::runtime_error {
    SegmentUncoveredError(int seg, double lo, double hi, const std::string& msg)
        : std::runtime_error(msg), segment(seg), t_lo(lo), t_hi(hi) {}
    int segment;
    double t_lo;
    double t_hi;
};

// A point inside the region has empty coverage signature. Exit code 1.
struct RegionUncoveredError : std::runtime_error {
    RegionUncoveredError(Point w, const std::string& msg)
        : std::runtime_error(msg), witness(w) {}
    Point witness;
};

}  // namespace kcover
