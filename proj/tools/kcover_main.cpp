#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kcover/arrangement.hpp"
#include "kcover/errors.hpp"
#include "kcover/io.hpp"
#include "kcover/oracle.hpp"
#include "kcover/render.hpp"
#include "kcover/solver.hpp"

namespace {

using namespace kcover;

constexpr std::int64_t kTransformSamples = 100000;
constexpr std::uint64_t kTransformSeed = 12345;

Tolerance tolerance_from_env() {
    Tolerance tol;
    if (const char* env = std::getenv("KCOVER_EPS")) {
        char* end = nullptr;
        const double eps = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw ValidationError("KCOVER_EPS: not a number");
        }
        tol.eps = eps;
        if (!tolerance_valid(tol)) {
            throw ValidationError("KCOVER_EPS: tolerance outside (0, 1e-3)");
        }
    }
    return tol;
}

SolveMode parse_mode(const std::string& mode) {
    if (mode == "default") return SolveMode::Default;
    if (mode == "tight-experimental") return SolveMode::TightExperimental;
    throw ValidationError("mode must be 'default' or 'tight-experimental'");
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        write_text_file(output, text);
    }
}

int cmd_solve(const std::string& input, double tau, const std::string& mode_name,
              const std::string& output) {
    const Tolerance tol = tolerance_from_env();
    const SolveMode mode = parse_mode(mode_name);
    const InstanceFile file = load_instance(input);
    if (demand_kind(file) != DemandKind::Points) {
        throw ValidationError("solve needs a points instance; run transform first");
    }

    SolverConfig cfg;
    cfg.tau = tau;
    cfg.mode = mode;
    cfg.tol = tol;
    SolveStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    const ColoredCover cover = solve(file.inst, cfg, &stats);
    const auto t1 = std::chrono::steady_clock::now();
    if (stats.general_position_warnings > 0) {
        std::cerr << "warning: " << stats.general_position_warnings
                  << " distance(s) within 1e-6 of a predicate threshold\n";
    }
    if (stats.downgraded) {
        std::cerr << "warning: tight-experimental coloring failed verification; "
                     "downgraded to the default layout\n";
    }

    SolutionMeta meta;
    meta.tau = tau;
    meta.mode = mode_name;
    meta.downgraded = stats.downgraded;
    const SolveMode effective = stats.downgraded ? SolveMode::Default : mode;
    const PackingProfile profile = make_profile(tau, effective);
    meta.rho = profile.rho;
    meta.alpha = profile.alpha;
    meta.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    meta.seed = 0;
    emit(solution_to_json(make_solution_file(cover, meta)), output);
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               int budget) {
    const Tolerance tol = tolerance_from_env();
    const InstanceFile file = load_instance(instance_path);
    if (demand_kind(file) != DemandKind::Points) {
        throw ValidationError("verify needs a points instance");
    }
    const SolutionFile sol = load_solution(solution_path);
    if (budget < 0) budget = sol.meta.rho * file.inst.k;
    const VerifyReport report = verify(file.inst, cover_from_solution(sol), budget, tol);

    nlohmann::json j;
    j["covered"] = report.covered;
    j["conflict_free"] = report.conflict_free;
    j["colors_used"] = report.colors_used;
    j["within_budget"] = report.within_budget;
    j["budget"] = budget;
    auto violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"kind", v.kind}, {"ids", v.ids}});
    }
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_oracle(const std::string& instance_path, int limit) {
    const Tolerance tol = tolerance_from_env();
    const InstanceFile file = load_instance(instance_path);
    if (demand_kind(file) != DemandKind::Points) {
        throw ValidationError("oracle needs a points instance");
    }
    if (limit < 1) limit = static_cast<int>(file.inst.disks.size());
    const OracleResult result = min_colors_exact(file.inst, limit, tol);

    nlohmann::json j;
    j["k_star"] = result.k_star;
    j["exceeds_limit"] = result.exceeds_limit;
    nlohmann::json w;
    w["selected"] = result.witness.selected;
    nlohmann::json colors = nlohmann::json::object();
    for (const auto& [id, color] : result.witness.chi) {
        colors[std::to_string(id)] = color;
    }
    w["colors"] = colors;
    w["num_colors"] = result.witness.num_colors;
    j["witness"] = w;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_transform(const std::string& input, double delta, const std::string& output) {
    const Tolerance tol = tolerance_from_env();
    const InstanceFile file = load_instance(input);
    const DemandKind kind = demand_kind(file);
    RepresentativeSet reps;
    if (kind == DemandKind::Segments) {
        reps = segment_representatives(file.inst.disks, *file.segments, tol);
    } else if (kind == DemandKind::Region) {
        reps = region_representatives(file.inst.disks, *file.region, tol, delta);
        const CompletenessReport gaps = mc_completeness_check(
            file.inst.disks, *file.region, reps, kTransformSamples, kTransformSeed, tol);
        if (gaps.uncovered) {
            throw RegionUncoveredError(*gaps.uncovered,
                                       "sampled region point (" +
                                           std::to_string(gaps.uncovered->x) + ", " +
                                           std::to_string(gaps.uncovered->y) +
                                           ") is covered by no disk");
        }
        if (!gaps.missing.empty()) {
            std::cerr << "transform: completeness check found " << gaps.missing.size()
                      << " signature(s) without a representative\n";
            return 1;
        }
    } else {
        throw ValidationError("transform needs a segments or region instance");
    }
    emit(instance_to_json(instance_from_representatives(file, reps)), output);
    return 0;
}

int cmd_gen(const std::string& kind, int k, int cells, double density,
            std::uint64_t seed, const std::string& output) {
    InstanceFile file;
    if (kind == "planted") {
        PlantedInstance planted = gen_planted(k, cells, density, seed);
        file.inst = std::move(planted.inst);
        file.planted_colors = std::move(planted.family);
    } else if (kind == "uniform") {
        file.inst = gen_uniform(k, cells, density, seed);
    } else {
        throw ValidationError("gen --kind must be planted or uniform");
    }
    emit(instance_to_json(file), output);
    return 0;
}

int cmd_render(const std::string& instance_path, const std::string& solution_path,
               const std::string& output) {
    const InstanceFile file = load_instance(instance_path);
    SolutionFile sol;
    const SolutionFile* sol_ptr = nullptr;
    double tau = 2.0;
    if (!solution_path.empty()) {
        sol = load_solution(solution_path);
        sol_ptr = &sol;
        tau = sol.meta.tau;
    }
    emit(render_svg(file, sol_ptr, tau), output);
    return 0;
}

struct BenchRow {
    int k;
    int cells;
    double density;
    double tau;
};

int cmd_bench(const std::string& suite, std::uint64_t seed, const std::string& output) {
    std::vector<BenchRow> rows;
    if (suite == "default") {
        for (int k : {1, 2, 3}) {
            for (int cells : {2, 3, 4}) {
                rows.push_back({k, cells, 2.0, 2.0});
            }
        }
        rows.push_back({1, 3, 2.0, 1.5});
        rows.push_back({2, 3, 2.0, 1.5});
    } else if (suite == "small") {
        for (int k : {1, 2}) {
            for (int cells : {2, 3}) {
                rows.push_back({k, cells, 1.5, 2.0});
            }
        }
    } else if (suite != "empty") {
        throw ValidationError("bench --suite must be default, small, or empty");
    }

    std::ostringstream csv;
    csv << "n,m,k,tau,runtime_ms,num_colors,cells,infeasible_count\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const BenchRow& row = rows[i];
        const PlantedInstance planted =
            gen_planted(row.k, row.cells, row.density, seed + i, row.tau);
        SolverConfig cfg;
        cfg.tau = row.tau;
        SolveStats stats;
        int num_colors = 0;
        int infeasible = 0;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            num_colors = solve(planted.inst, cfg, &stats).num_colors;
        } catch (const CellInfeasibleError&) {
            infeasible = 1;
        }
        const auto t1 = std::chrono::steady_clock::now();
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        csv << planted.inst.points.size() << "," << planted.inst.disks.size() << ","
            << row.k << "," << row.tau << "," << ms << "," << num_colors << ","
            << stats.cells_processed << "," << infeasible << "\n";
    }
    emit(csv.str(), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kcover: k-colorable unit disk cover solver"};
    app.require_subcommand(1);

    std::string input, solution_path, output, mode = "default", kind = "planted",
                suite = "default";
    double tau = 2.0, density = 2.0, delta = 0.0;
    int k = 1, cells = 3, budget = -1, limit = -1;
    std::uint64_t seed = 0;

    auto* solve_cmd = app.add_subcommand("solve", "compute a colored cover");
    solve_cmd->add_option("input", input, "instance JSON")->required();
    solve_cmd->add_option("--tau", tau, "grid width in [1, 5]");
    solve_cmd->add_option("--mode", mode, "default | tight-experimental");
    solve_cmd->add_option("--output", output, "solution JSON path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("instance", input, "instance JSON")->required();
    verify_cmd->add_option("solution", solution_path, "solution JSON")->required();
    verify_cmd->add_option("--budget", budget, "color budget (default rho*k)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum color count");
    oracle_cmd->add_option("instance", input, "instance JSON")->required();
    oracle_cmd->add_option("--limit", limit, "report if k* exceeds this");

    auto* transform_cmd =
        app.add_subcommand("transform", "reduce segments or a region to points");
    transform_cmd->add_option("input", input, "instance JSON")->required();
    transform_cmd->add_option("--delta", delta, "offset distance (default auto)");
    transform_cmd->add_option("--output", output, "points instance path");

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("--kind", kind, "planted | uniform");
    gen_cmd->add_option("--k", k, "color budget parameter");
    gen_cmd->add_option("--cells", cells, "cells per side");
    gen_cmd->add_option("--density", density, "points per cell");
    gen_cmd->add_option("--seed", seed, "64-bit seed");
    gen_cmd->add_option("--output", output, "instance path");

    auto* render_cmd = app.add_subcommand("render", "draw instance/solution as SVG");
    render_cmd->add_option("instance", input, "instance JSON")->required();
    render_cmd->add_option("solution", solution_path, "solution JSON");
    render_cmd->add_option("--output", output, "SVG path");

    auto* bench_cmd = app.add_subcommand("bench", "run a timing suite");
    bench_cmd->add_option("--suite", suite, "default | small | empty");
    bench_cmd->add_option("--seed", seed, "64-bit seed");
    bench_cmd->add_option("--output", output, "CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(input, tau, mode, output);
        if (verify_cmd->parsed()) return cmd_verify(input, solution_path, budget);
        if (oracle_cmd->parsed()) return cmd_oracle(input, limit);
        if (transform_cmd->parsed()) return cmd_transform(input, delta, output);
        if (gen_cmd->parsed()) return cmd_gen(kind, k, cells, density, seed, output);
        if (render_cmd->parsed()) return cmd_render(input, solution_path, output);
        if (bench_cmd->parsed()) return cmd_bench(suite, seed, output);
    } catch (const SegmentUncoveredError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const RegionUncoveredError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CellInfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
