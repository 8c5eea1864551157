#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

// Fejes Toth: packing density of congruent disks in a convex region.
inline constexpr double kHexPackingDensity = 0.906899682117109;  // pi/sqrt(12)

enum class ProfileMode { Table, Analytic, TightExperimental };

enum class SolveMode { Default, TightExperimental };

// tau with its packing bounds: alpha = max pairwise-disjoint unit disks that
// can meet a tau x tau cell, rho = number of disjoint color sets.
struct PackingProfile {
    double tau = 2.0;
    int alpha = 7;
    int rho = 4;
    ProfileMode mode = ProfileMode::Table;
    // alpha fell back to the analytic bound because tau is not tabulated.
    bool alpha_fallback = false;
};

struct PackingConfig {
    double tau = 2.0;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    int local_search_steps = 8;
};

struct PackingSearchResult {
    double tau = 0.0;
    int best_count = 0;
    std::vector<UnitDisk> configuration;
};

bool alpha_table_has(double tau);

// Tabulated alpha for tau in {1} u [sqrt2, 8/5] u {2,3,4,5}; throws outside.
int alpha_table(double tau);

// Closed-form bound for integer tau: 2t+2+(t/2)^2 for even t, tight; the odd
// formula floor(4*ceil(t/2)+4+(t/2)^2) is loose.
int alpha_obs1(int tau);

// Density bound floor((4*pi + 8*tau + tau^2) / sqrt(12)), valid for tau >= 1.
int alpha_analytic(double tau);

// Color-set count. Default: (1 + ceil(2/tau))^2. Tight-experimental uses the
// stepped table {4, 6, 7, 9}; the 6 and 7 layouts are unproven and gated by
// the verifier downstream. Domain 1 <= tau <= 5.
int rho_of(double tau, SolveMode mode = SolveMode::Default);

PackingProfile make_profile(double tau, SolveMode mode = SolveMode::Default);

// Randomized lower-bound searcher: largest found set of pairwise
// non-conflicting unit disks each meeting the cell [0,tau]^2. Deterministic
// per seed; the count is a witness, never claimed optimal.
PackingSearchResult empirical_alpha_search(const PackingConfig& cfg,
                                           const Tolerance& tol = {});

std::string search_witness_json(const PackingSearchResult& result);
void write_search_witness(const std::string& path, const PackingSearchResult& result);

}  // namespace kcover
