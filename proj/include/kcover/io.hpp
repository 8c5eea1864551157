#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcover/arrangement.hpp"
#include "kcover/solver.hpp"

namespace kcover {

enum class DemandKind { Points, Segments, Region };

struct PointProvenance {
    std::string source;  // "segment" or "region"
    int segment = -1;
    double t = 0.0;
    std::string kind;

    friend bool operator==(const PointProvenance&, const PointProvenance&) = default;
};

struct InstanceFile {
    Instance inst;
    std::optional<std::vector<Segment>> segments;
    std::optional<Rect> region;
    // Written by `gen --kind planted`: the planted family per disk.
    std::optional<std::vector<int>> planted_colors;
    // Written by `transform`: where each representative point came from.
    std::optional<std::vector<PointProvenance>> provenance;
};

DemandKind demand_kind(const InstanceFile& file);

struct SolutionMeta {
    double tau = 2.0;
    std::string mode = "default";
    int rho = 4;
    int alpha = 7;
    std::int64_t runtime_ms = 0;
    std::uint64_t seed = 0;
    bool downgraded = false;

    friend bool operator==(const SolutionMeta&, const SolutionMeta&) = default;
};

struct SolutionFile {
    std::vector<int> selected;
    std::map<int, int> colors;
    int num_colors = 0;
    SolutionMeta meta;

    friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

std::string instance_to_json(const InstanceFile& file);
InstanceFile instance_from_json(const std::string& text);
InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const InstanceFile& file);

std::string solution_to_json(const SolutionFile& file);
SolutionFile solution_from_json(const std::string& text);
SolutionFile load_solution(const std::string& path);
void save_solution(const std::string& path, const SolutionFile& file);

SolutionFile make_solution_file(const ColoredCover& cover, const SolutionMeta& meta);
ColoredCover cover_from_solution(const SolutionFile& file);

// points instance built from a transform result, carrying provenance.
InstanceFile instance_from_representatives(const InstanceFile& source,
                                           const RepresentativeSet& reps);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kcover
