#include "kcover/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kcover/errors.hpp"

#include "json.hpp"

namespace kcover {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw ValidationError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError(where + ": non-finite value");
    return v;
}

Point point_at(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError(where + ": expected [x, y]");
    }
    return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

}  // namespace

DemandKind demand_kind(const InstanceFile& file) {
    const bool has_segments = file.segments.has_value();
    const bool has_region = file.region.has_value();
    if (has_segments && has_region) {
        throw ValidationError("instance: segments and region are mutually exclusive");
    }
    if (has_segments || has_region) {
        if (!file.inst.points.empty()) {
            throw ValidationError(
                "instance: points must be empty when segments or region is given");
        }
        return has_segments ? DemandKind::Segments : DemandKind::Region;
    }
    return DemandKind::Points;
}

std::string instance_to_json(const InstanceFile& file) {
    json j;
    j["k"] = file.inst.k;
    auto points = json::array();
    for (const auto& p : file.inst.points) points.push_back(point_json(p));
    j["points"] = points;
    auto disks = json::array();
    for (const auto& d : file.inst.disks) disks.push_back(point_json(d.center));
    j["disks"] = disks;
    if (file.segments) {
        auto segments = json::array();
        for (const auto& s : *file.segments) {
            segments.push_back(json::array({point_json(s.a), point_json(s.b)}));
        }
        j["segments"] = segments;
    }
    if (file.region) {
        j["region"] = {{"xmin", file.region->xmin},
                       {"ymin", file.region->ymin},
                       {"xmax", file.region->xmax},
                       {"ymax", file.region->ymax}};
    }
    if (file.planted_colors) j["planted_colors"] = *file.planted_colors;
    if (file.provenance) {
        auto prov = json::array();
        for (const auto& rec : *file.provenance) {
            json r;
            r["source"] = rec.source;
            if (rec.source == "segment") {
                r["segment"] = rec.segment;
                r["t"] = rec.t;
            } else {
                r["kind"] = rec.kind;
            }
            prov.push_back(r);
        }
        j["provenance"] = prov;
    }
    return j.dump(2) + "\n";
}

InstanceFile instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("instance: expected a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<int>() < 1) {
        throw ValidationError("instance: k must be a positive integer");
    }
    if (!j.contains("disks") || !j["disks"].is_array() || j["disks"].empty()) {
        throw ValidationError("instance: disks must be a nonempty array");
    }

    InstanceFile file;
    file.inst.k = j["k"].get<int>();
    for (size_t i = 0; i < j["disks"].size(); ++i) {
        file.inst.disks.push_back(
            {point_at(j["disks"][i], "disks[" + std::to_string(i) + "]")});
    }
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw ValidationError("instance: points must be an array");
        for (size_t i = 0; i < j["points"].size(); ++i) {
            file.inst.points.push_back(
                point_at(j["points"][i], "points[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("segments")) {
        if (!j["segments"].is_array() || j["segments"].empty()) {
            throw ValidationError("instance: segments must be a nonempty array");
        }
        std::vector<Segment> segments;
        for (size_t i = 0; i < j["segments"].size(); ++i) {
            const auto& js = j["segments"][i];
            const std::string where = "segments[" + std::to_string(i) + "]";
            if (!js.is_array() || js.size() != 2) {
                throw ValidationError(where + ": expected [[x1,y1],[x2,y2]]");
            }
            Segment s{point_at(js[0], where + "[0]"), point_at(js[1], where + "[1]")};
            if (s.a.x == s.b.x && s.a.y == s.b.y) {
                throw ValidationError(where + ": degenerate segment");
            }
            segments.push_back(s);
        }
        file.segments = std::move(segments);
    }
    if (j.contains("region")) {
        const auto& jr = j["region"];
        if (!jr.is_object()) throw ValidationError("instance: region must be an object");
        for (const char* key : {"xmin", "ymin", "xmax", "ymax"}) {
            if (!jr.contains(key)) {
                throw ValidationError(std::string("instance: region missing ") + key);
            }
        }
        Rect r{number_at(jr["xmin"], "region.xmin"), number_at(jr["ymin"], "region.ymin"),
               number_at(jr["xmax"], "region.xmax"), number_at(jr["ymax"], "region.ymax")};
        if (!(r.xmin < r.xmax && r.ymin < r.ymax)) {
            throw ValidationError("instance: region must satisfy xmin < xmax, ymin < ymax");
        }
        file.region = r;
    }
    if (j.contains("planted_colors")) {
        if (!j["planted_colors"].is_array() ||
            j["planted_colors"].size() != file.inst.disks.size()) {
            throw ValidationError("instance: planted_colors must list one color per disk");
        }
        file.planted_colors = j["planted_colors"].get<std::vector<int>>();
    }
    if (j.contains("provenance")) {
        if (!j["provenance"].is_array() ||
            j["provenance"].size() != file.inst.points.size()) {
            throw ValidationError("instance: provenance must list one record per point");
        }
        std::vector<PointProvenance> prov;
        for (const auto& jr : j["provenance"]) {
            PointProvenance rec;
            rec.source = jr.value("source", "");
            rec.segment = jr.value("segment", -1);
            rec.t = jr.value("t", 0.0);
            rec.kind = jr.value("kind", "");
            prov.push_back(rec);
        }
        file.provenance = std::move(prov);
    }
    demand_kind(file);  // enforces the exactly-one-demand rule
    return file;
}

std::string solution_to_json(const SolutionFile& file) {
    json j;
    j["selected"] = file.selected;
    json colors = json::object();
    for (const auto& [id, color] : file.colors) {
        colors[std::to_string(id)] = color;
    }
    j["colors"] = colors;
    j["num_colors"] = file.num_colors;
    j["meta"] = {{"tau", file.meta.tau},         {"mode", file.meta.mode},
                 {"rho", file.meta.rho},         {"alpha", file.meta.alpha},
                 {"runtime_ms", file.meta.runtime_ms}, {"seed", file.meta.seed},
                 {"downgraded", file.meta.downgraded}};
    return j.dump(2) + "\n";
}

SolutionFile solution_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("solution: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("selected") || !j.contains("colors") ||
        !j.contains("num_colors") || !j.contains("meta")) {
        throw ValidationError("solution: missing required field");
    }
    SolutionFile file;
    if (!j["selected"].is_array()) throw ValidationError("solution: selected must be an array");
    file.selected = j["selected"].get<std::vector<int>>();
    if (!j["colors"].is_object()) throw ValidationError("solution: colors must be an object");
    for (const auto& [key, value] : j["colors"].items()) {
        try {
            file.colors[std::stoi(key)] = value.get<int>();
        } catch (const std::exception&) {
            throw ValidationError("solution: bad color key '" + key + "'");
        }
    }
    for (int id : file.selected) {
        if (!file.colors.count(id)) {
            throw ValidationError("solution: selected disk " + std::to_string(id) +
                                  " has no color");
        }
    }
    if (file.colors.size() != file.selected.size()) {
        throw ValidationError("solution: colors must be keyed only by selected ids");
    }
    file.num_colors = j["num_colors"].get<int>();
    const auto& jm = j["meta"];
    file.meta.tau = jm.value("tau", 2.0);
    file.meta.mode = jm.value("mode", "default");
    file.meta.rho = jm.value("rho", 4);
    file.meta.alpha = jm.value("alpha", 7);
    file.meta.runtime_ms = jm.value("runtime_ms", std::int64_t{0});
    file.meta.seed = jm.value("seed", std::uint64_t{0});
    file.meta.downgraded = jm.value("downgraded", false);
    return file;
}

InstanceFile load_instance(const std::string& path) {
    return instance_from_json(read_text_file(path));
}

void save_instance(const std::string& path, const InstanceFile& file) {
    write_text_file(path, instance_to_json(file));
}

SolutionFile load_solution(const std::string& path) {
    return solution_from_json(read_text_file(path));
}

void save_solution(const std::string& path, const SolutionFile& file) {
    write_text_file(path, solution_to_json(file));
}

SolutionFile make_solution_file(const ColoredCover& cover, const SolutionMeta& meta) {
    SolutionFile file;
    file.selected = cover.selected;
    file.colors = cover.chi;
    file.num_colors = cover.num_colors;
    file.meta = meta;
    return file;
}

ColoredCover cover_from_solution(const SolutionFile& file) {
    ColoredCover cover;
    cover.selected = file.selected;
    cover.chi = file.colors;
    cover.num_colors = file.num_colors;
    return cover;
}

InstanceFile instance_from_representatives(const InstanceFile& source,
                                           const RepresentativeSet& reps) {
    InstanceFile out;
    out.inst.k = source.inst.k;
    out.inst.disks = source.inst.disks;
    std::vector<PointProvenance> prov;
    for (const auto& rep : reps.reps) {
        out.inst.points.push_back(rep.point);
        PointProvenance rec;
        if (rep.provenance.source == RepSource::SegmentSlice) {
            rec.source = "segment";
            rec.segment = rep.provenance.segment_index;
            rec.t = rep.provenance.t;
        } else {
            rec.source = "region";
            rec.kind = rep.provenance.kind;
        }
        prov.push_back(rec);
    }
    out.provenance = std::move(prov);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text;
}

}  // namespace kcover
