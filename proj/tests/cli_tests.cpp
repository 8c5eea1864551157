#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "kcover/io.hpp"
#include "kcover/oracle.hpp"

namespace fs = std::filesystem;
using namespace kcover;

namespace {

std::string binary() {
    const char* env = std::getenv("KCOVER_BIN");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path out = fs::path("cli_work") / ("out" + std::to_string(counter++));
    const std::string cmd =
        env_prefix + binary() + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

struct Workspace {
    Workspace() {
        fs::remove_all("cli_work");
        fs::create_directories("cli_work");
    }
};

const Workspace workspace_once{};

std::string path_of(const std::string& name) {
    return (fs::path("cli_work") / name).string();
}

}  // namespace

TEST_CASE("gen/solve/verify pipeline") {
    const std::string inst = path_of("planted.json");
    CHECK(run("gen --kind planted --k 2 --cells 3 --density 2 --seed 42 --output " + inst)
              .exit_code == 0);

    const std::string sol = path_of("planted.solution.json");
    CHECK(run("solve " + inst + " --output " + sol).exit_code == 0);
    CHECK(run("verify " + inst + " " + sol).exit_code == 0);

    SUBCASE("gen is deterministic") {
        const std::string inst2 = path_of("planted2.json");
        run("gen --kind planted --k 2 --cells 3 --density 2 --seed 42 --output " + inst2);
        CHECK(slurp(inst) == slurp(inst2));
    }

    SUBCASE("corrupted color fails verification with exit 1") {
        SolutionFile s = load_solution(sol);
        REQUIRE(s.selected.size() >= 2);
        s.colors[s.selected[1]] = s.colors[s.selected[0]];
        // Force an actual conflict: recolor every selected disk identically.
        for (auto& [id, color] : s.colors) color = 0;
        s.num_colors = 1;
        const std::string bad = path_of("bad.solution.json");
        save_solution(bad, s);
        const auto r = run("verify " + inst + " " + bad);
        CHECK(r.exit_code == 1);
    }

    SUBCASE("budget below colors_used fails") {
        CHECK(run("verify " + inst + " " + sol + " --budget 0").exit_code == 1);
    }

    SUBCASE("tau outside [1,5] is a usage error") {
        CHECK(run("solve " + inst + " --tau 0.5").exit_code == 3);
    }

    SUBCASE("bad KCOVER_EPS is a usage error") {
        CHECK(run("solve " + inst, "KCOVER_EPS=0.5 ").exit_code == 3);
        CHECK(run("solve " + inst, "KCOVER_EPS=abc ").exit_code == 3);
    }
}

TEST_CASE("solve rejects an uncoverable instance with exit 3") {
    InstanceFile file;
    file.inst.k = 1;
    file.inst.disks = {{{1, 1}}};
    file.inst.points = {{4, 4}};
    const std::string path = path_of("uncoverable.json");
    save_instance(path, file);
    CHECK(run("solve " + path).exit_code == 3);
}

TEST_CASE("oracle command") {
    InstanceFile file;
    file.inst.k = 1;
    file.inst.disks = {{{1, 1}}};
    file.inst.points = {{1, 1}};
    const std::string path = path_of("singleton.json");
    save_instance(path, file);
    const auto r = run("oracle " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"k_star\": 1") != std::string::npos);

    InstanceFile big;
    big.inst.k = 1;
    for (int d = 0; d < 15; ++d) big.inst.disks.push_back({{1.0 + 0.1 * d, 1.0}});
    big.inst.points = {{1, 1}};
    const std::string big_path = path_of("too_big.json");
    save_instance(big_path, big);
    CHECK(run("oracle " + big_path).exit_code == 3);
}

TEST_CASE("transform command") {
    SUBCASE("segment inside one disk reduces to one point") {
        InstanceFile file;
        file.inst.k = 1;
        file.inst.disks = {{{2, 2}}};
        file.segments = {{Segment{{1.6, 2.0}, {2.4, 2.0}}}};
        const std::string path = path_of("seg.json");
        save_instance(path, file);
        const std::string out = path_of("seg_points.json");
        CHECK(run("transform " + path + " --output " + out).exit_code == 0);
        const InstanceFile reduced = load_instance(out);
        CHECK(reduced.inst.points.size() == 1);
        REQUIRE(reduced.provenance.has_value());
        CHECK(reduced.provenance->at(0).source == "segment");
        CHECK(run("solve " + out).exit_code == 0);
    }
    SUBCASE("region with a hole exits 1") {
        InstanceFile file;
        file.inst.k = 1;
        file.inst.disks = {{{1, 1}}, {{3.5, 1}}};
        file.region = Rect{0.5, 0.5, 4.0, 1.5};
        const std::string path = path_of("holey.json");
        save_instance(path, file);
        CHECK(run("transform " + path).exit_code == 1);
    }
    SUBCASE("points instance is not transformable") {
        InstanceFile file;
        file.inst.k = 1;
        file.inst.disks = {{{1, 1}}};
        file.inst.points = {{1, 1}};
        const std::string path = path_of("pts.json");
        save_instance(path, file);
        CHECK(run("transform " + path).exit_code == 3);
    }
}

TEST_CASE("render command") {
    const std::string inst = path_of("render_inst.json");
    run("gen --kind planted --k 2 --cells 2 --density 1 --seed 7 --output " + inst);
    const std::string sol = path_of("render_sol.json");
    run("solve " + inst + " --output " + sol);

    SUBCASE("instance only renders uncolored disks") {
        const auto r = run("render " + inst);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("<svg") != std::string::npos);
        CHECK(r.out.find("hsl(") == std::string::npos);
    }
    SUBCASE("solution fills one hue per color") {
        const auto r = run("render " + inst + " " + sol);
        CHECK(r.exit_code == 0);
        std::set<std::string> hues;
        size_t pos = 0;
        while ((pos = r.out.find("hsl(", pos)) != std::string::npos) {
            hues.insert(r.out.substr(pos, r.out.find(')', pos) - pos));
            ++pos;
        }
        CHECK(static_cast<int>(hues.size()) == load_solution(sol).num_colors);
    }
    SUBCASE("empty instance still renders") {
        InstanceFile file;
        file.inst.k = 1;
        file.inst.disks = {{{1, 1}}};
        const std::string path = path_of("empty_inst.json");
        save_instance(path, file);
        const auto r = run("render " + path);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("<svg") != std::string::npos);
        CHECK(r.out.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("bench command") {
    SUBCASE("empty suite is header-only") {
        const auto r = run("bench --suite empty");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "n,m,k,tau,runtime_ms,num_colors,cells,infeasible_count\n");
    }
    SUBCASE("small suite rows are deterministic modulo runtime") {
        const auto a = run("bench --suite small --seed 3");
        const auto b = run("bench --suite small --seed 3");
        REQUIRE(a.exit_code == 0);
        auto scrub = [](const std::string& csv) {
            std::istringstream in(csv);
            std::ostringstream out;
            std::string line;
            while (std::getline(in, line)) {
                // Blank the runtime_ms column (5th field).
                int field = 0;
                std::string scrubbed;
                std::istringstream fields(line);
                std::string cell;
                while (std::getline(fields, cell, ',')) {
                    if (field++ == 4 && line.find("runtime") == std::string::npos) {
                        cell = "-";
                    }
                    scrubbed += cell + ",";
                }
                out << scrubbed << "\n";
            }
            return out.str();
        };
        CHECK(scrub(a.out) == scrub(b.out));
        CHECK(a.out.find("n,m,k,tau") == 0);
    }
}

TEST_CASE("usage errors exit 3") {
    CHECK(run("frobnicate").exit_code == 3);
    CHECK(run("solve").exit_code == 3);
    CHECK(run("solve missing_file.json").exit_code == 3);
}
