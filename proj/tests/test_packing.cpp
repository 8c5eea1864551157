#include <cstdio>

#include "doctest.h"

#include "kcover/errors.hpp"
#include "kcover/packing.hpp"

using namespace kcover;

TEST_CASE("alpha_table values") {
    CHECK(alpha_table(2.0) == 7);
    CHECK(alpha_table(1.0) == 4);
    CHECK(alpha_table(4.0) == 14);
    CHECK(alpha_table(1.5) == 5);  // inside [sqrt2, 8/5]
    CHECK(alpha_table(3.0) == 10);
    CHECK(alpha_table(5.0) == 17);
    CHECK_THROWS_AS(alpha_table(1.2), ValidationError);
}

TEST_CASE("alpha_obs1 closed forms") {
    CHECK(alpha_obs1(2) == 7);
    CHECK(alpha_obs1(4) == 14);
    CHECK(alpha_obs1(3) == 14);  // odd bound is loose: >= alpha_table(3) = 10
    CHECK(alpha_obs1(3) >= alpha_table(3.0));
    CHECK_THROWS_AS(alpha_obs1(0), ValidationError);
}

TEST_CASE("even alpha_obs1 is tight against the table, odd is not") {
    CHECK(alpha_obs1(2) == alpha_table(2.0));
    CHECK(alpha_obs1(4) == alpha_table(4.0));
    CHECK(alpha_obs1(3) >= alpha_table(3.0));
    CHECK(alpha_obs1(5) >= alpha_table(5.0));
}

TEST_CASE("alpha_analytic density bound") {
    CHECK(alpha_analytic(2.0) == 9);
    CHECK(alpha_analytic(1.0) == 6);
    for (double tau : {1.0, 1.4142135623730951, 1.5, 1.6, 2.0, 3.0, 4.0, 5.0}) {
        CHECK(alpha_analytic(tau) >= alpha_table(tau));
    }
}

TEST_CASE("alpha_analytic is monotone in tau") {
    for (double tau = 1.0; tau < 5.0; tau += 0.125) {
        CHECK(alpha_analytic(tau) <= alpha_analytic(tau + 0.125));
    }
}

TEST_CASE("rho_of in both modes") {
    CHECK(rho_of(2.0) == 4);
    CHECK(rho_of(1.0) == 9);
    CHECK(rho_of(1.0, SolveMode::TightExperimental) == 9);
    CHECK(rho_of(1.7, SolveMode::TightExperimental) == 6);
    CHECK(rho_of(1.5, SolveMode::TightExperimental) == 7);
    CHECK(rho_of(3.0) == 4);
    CHECK_THROWS_AS(rho_of(0.5), ValidationError);
    CHECK_THROWS_AS(rho_of(5.5), ValidationError);
}

TEST_CASE("rho_of is non-increasing in tau") {
    for (SolveMode mode : {SolveMode::Default, SolveMode::TightExperimental}) {
        int prev = 1000;
        for (double tau = 1.0; tau <= 5.0; tau += 0.05) {
            const int r = rho_of(tau, mode);
            CHECK(r <= prev);
            prev = r;
        }
    }
}

TEST_CASE("profiles fall back to the analytic alpha off the table") {
    const PackingProfile on = make_profile(2.0);
    CHECK(on.alpha == 7);
    CHECK_FALSE(on.alpha_fallback);
    const PackingProfile off = make_profile(1.2);
    CHECK(off.alpha == alpha_analytic(1.2));
    CHECK(off.alpha_fallback);
    CHECK(off.rho == 9);
}

TEST_CASE("empirical search respects its own postconditions") {
    PackingConfig cfg;
    cfg.tau = 1.0;
    cfg.trials = 3000;
    cfg.seed = 7;
    const auto result = empirical_alpha_search(cfg);
    CHECK(result.best_count == static_cast<int>(result.configuration.size()));
    CHECK(result.best_count <= alpha_table(1.0));
    CHECK(result.best_count == 4);  // four disks approaching the corners
    const Rect cell{0, 0, cfg.tau, cfg.tau};
    for (size_t a = 0; a < result.configuration.size(); ++a) {
        CHECK(disk_intersects_rect(result.configuration[a], cell));
        for (size_t b = a + 1; b < result.configuration.size(); ++b) {
            CHECK_FALSE(
                disks_conflict(result.configuration[a], result.configuration[b]));
        }
    }
}

TEST_CASE("empirical search is deterministic per seed") {
    PackingConfig cfg;
    cfg.tau = 2.0;
    cfg.trials = 500;
    cfg.seed = 42;
    const auto a = empirical_alpha_search(cfg);
    const auto b = empirical_alpha_search(cfg);
    REQUIRE(a.best_count == b.best_count);
    REQUIRE(a.configuration.size() == b.configuration.size());
    for (size_t i = 0; i < a.configuration.size(); ++i) {
        CHECK(a.configuration[i].center.x == b.configuration[i].center.x);
        CHECK(a.configuration[i].center.y == b.configuration[i].center.y);
    }
    CHECK(a.best_count <= alpha_table(2.0));
}

TEST_CASE("empirical search never beats the table bound on tabulated widths") {
    for (double tau : {1.0, 1.5, 2.0}) {
        PackingConfig cfg;
        cfg.tau = tau;
        cfg.trials = 2000;
        cfg.seed = 11;
        CHECK(empirical_alpha_search(cfg).best_count <= alpha_table(tau));
    }
}

TEST_CASE("search witness JSON") {
    PackingConfig cfg;
    cfg.tau = 1.0;
    cfg.trials = 200;
    cfg.seed = 3;
    const auto result = empirical_alpha_search(cfg);
    const std::string path = "packing_witness_test.json";
    write_search_witness(path, result);
    const std::string text = [&] {
        FILE* f = std::fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        std::string s;
        char buf[512];
        size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, got);
        std::fclose(f);
        return s;
    }();
    std::remove(path.c_str());
    CHECK(text.find("\"tau\"") != std::string::npos);
    CHECK(text.find("\"best_count\"") != std::string::npos);
    CHECK(text.find("\"centers\"") != std::string::npos);
}
