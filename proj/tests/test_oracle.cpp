#include <vector>

#include "doctest.h"

#include "kcover/errors.hpp"
#include "kcover/oracle.hpp"
#include "support/generators.hpp"

using namespace kcover;

namespace {

// Exhaustive q^n color-assignment check, the secondary brute force.
int chromatic_brute(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    for (int q = 1; q <= n; ++q) {
        std::vector<int> color(n, 0);
        while (true) {
            bool proper = true;
            for (int a = 0; a < n && proper; ++a) {
                for (int b = a + 1; b < n && proper; ++b) {
                    if (adj[a][b] && color[a] == color[b]) proper = false;
                }
            }
            if (proper) return q;
            int idx = 0;
            while (idx < n) {
                if (++color[idx] < q) break;
                color[idx] = 0;
                ++idx;
            }
            if (idx == n) break;
        }
    }
    return n;
}

std::vector<std::vector<bool>> graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
    return adj;
}

}  // namespace

TEST_CASE("chromatic_number on known graphs") {
    CHECK(chromatic_number(graph(3, {})) == 1);
    CHECK(chromatic_number(graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
    CHECK(chromatic_number(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 3);
}

TEST_CASE("chromatic_number agrees with brute force on random graphs") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(6));
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng.next_below(100) < 40) adj[a][b] = adj[b][a] = true;
            }
        }
        CHECK(chromatic_number(adj) == chromatic_brute(adj));
    }
}

TEST_CASE("min_colors_exact basics") {
    SUBCASE("one point, one disk") {
        Instance inst;
        inst.k = 1;
        inst.disks = {{{1, 1}}};
        inst.points = {{1, 1}};
        const OracleResult r = min_colors_exact(inst, 4);
        CHECK(r.k_star == 1);
        CHECK_FALSE(r.exceeds_limit);
        CHECK(verify(inst, r.witness, r.k_star).ok());
    }
    SUBCASE("forced conflicting pair") {
        Instance inst;
        inst.k = 1;
        inst.disks = {{{0, 0}}, {{1.5, 0}}};
        inst.points = {{0, 0}, {1.5, 0}};
        const OracleResult r = min_colors_exact(inst, 4);
        CHECK(r.k_star == 2);
        CHECK(verify(inst, r.witness, 2).ok());
    }
    SUBCASE("a lens of mutually conflicting disks still needs one color") {
        Instance inst;
        inst.k = 1;
        inst.disks = {{{2.0, 2.0}}, {{2.3, 2.0}}, {{2.0, 2.3}}, {{2.3, 2.3}}};
        inst.points = {{2.15, 2.15}};
        CHECK(min_colors_exact(inst, 4).k_star == 1);
    }
    SUBCASE("no points need no colors") {
        Instance inst;
        inst.k = 1;
        inst.disks = {{{1, 1}}};
        const OracleResult r = min_colors_exact(inst, 4);
        CHECK(r.k_star == 0);
        CHECK(r.witness.selected.empty());
    }
}

TEST_CASE("oracle rejects oversized instances and unclad points") {
    Instance inst;
    inst.k = 1;
    for (int d = 0; d < 15; ++d) {
        inst.disks.push_back({{1.0 + 0.1 * d, 1.0}});
    }
    inst.points = {{1.0, 1.0}};
    CHECK_THROWS_AS(min_colors_exact(inst, 4), ValidationError);

    Instance far;
    far.k = 1;
    far.disks = {{{1, 1}}};
    far.points = {{5, 5}};
    CHECK_THROWS_AS(min_colors_exact(far, 4), ValidationError);
}

TEST_CASE("exceeds_limit is reported") {
    Instance inst;
    inst.k = 1;
    inst.disks = {{{0, 0}}, {{1.5, 0}}};
    inst.points = {{0, 0}, {1.5, 0}};
    const OracleResult r = min_colors_exact(inst, 1);
    CHECK(r.k_star == 2);
    CHECK(r.exceeds_limit);
}

TEST_CASE("witness is optimal: one fewer color fails verification") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        const Instance inst = testgen::small_random_instance(seed);
        const OracleResult r = min_colors_exact(inst, 10);
        CHECK(verify(inst, r.witness, r.k_star).ok());
        CHECK(r.witness.num_colors == r.k_star);
        if (r.k_star > 1) {
            const VerifyReport tight = verify(inst, r.witness, r.k_star - 1);
            CHECK_FALSE(tight.within_budget);
        }
    }
}

TEST_CASE("verify flags corruption") {
    const PlantedInstance planted = gen_planted(2, 3, 2.0, 9);
    SUBCASE("planted witness passes for every seed tried") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const PlantedInstance p = gen_planted(1 + seed % 3, 3, 2.0, seed);
            CHECK(verify(p.inst, p.witness, p.inst.k).ok());
        }
    }
    SUBCASE("conflicting disks forced into one color") {
        ColoredCover bad = planted.witness;
        int a = -1, b = -1;
        for (size_t i = 0; i < planted.inst.disks.size() && a < 0; ++i) {
            for (size_t j = i + 1; j < planted.inst.disks.size(); ++j) {
                if (planted.family[i] != planted.family[j] &&
                    disks_conflict(planted.inst.disks[i], planted.inst.disks[j])) {
                    a = static_cast<int>(i);
                    b = static_cast<int>(j);
                    break;
                }
            }
        }
        REQUIRE(a >= 0);
        bad.chi[b] = bad.chi[a];
        const VerifyReport report = verify(planted.inst, bad, planted.inst.k);
        CHECK_FALSE(report.conflict_free);
        bool listed = false;
        for (const auto& v : report.violations) {
            if (v.kind == "color-conflict") listed = true;
        }
        CHECK(listed);
    }
    SUBCASE("empty selection with points is uncovered") {
        ColoredCover empty;
        const VerifyReport report = verify(planted.inst, empty, planted.inst.k);
        CHECK_FALSE(report.covered);
    }
    SUBCASE("unknown disk id is an input error") {
        ColoredCover bad;
        bad.selected = {99};
        bad.chi[99] = 0;
        CHECK_THROWS_AS(verify(planted.inst, bad, planted.inst.k), ValidationError);
    }
}

TEST_CASE("gen_planted basics") {
    SUBCASE("families are internally conflict-free") {
        const PlantedInstance p = gen_planted(3, 3, 2.0, 123);
        for (size_t a = 0; a < p.inst.disks.size(); ++a) {
            for (size_t b = a + 1; b < p.inst.disks.size(); ++b) {
                if (p.family[a] == p.family[b]) {
                    CHECK_FALSE(disks_conflict(p.inst.disks[a], p.inst.disks[b]));
                }
            }
        }
        for (const auto& pt : p.inst.points) {
            bool covered = false;
            for (const auto& d : p.inst.disks) covered = covered || disk_contains(d, pt);
            CHECK(covered);
        }
    }
    SUBCASE("deterministic per seed") {
        const PlantedInstance a = gen_planted(2, 3, 2.0, 5);
        const PlantedInstance b = gen_planted(2, 3, 2.0, 5);
        REQUIRE(a.inst.points.size() == b.inst.points.size());
        REQUIRE(a.inst.disks.size() == b.inst.disks.size());
        for (size_t i = 0; i < a.inst.disks.size(); ++i) {
            CHECK(a.inst.disks[i].center.x == b.inst.disks[i].center.x);
        }
    }
    SUBCASE("density zero yields no points") {
        CHECK(gen_planted(1, 2, 0.0, 1).inst.points.empty());
    }
    SUBCASE("k=1 draws are exactly 1-colorable") {
        for (std::uint64_t seed = 50; seed < 55; ++seed) {
            PlantedInstance p = gen_planted(1, 2, 1.0, seed);
            if (p.inst.disks.size() > 10 || p.inst.points.size() > 8) continue;
            if (p.inst.points.empty()) continue;
            CHECK(min_colors_exact(p.inst, 4).k_star == 1);
        }
    }
}
