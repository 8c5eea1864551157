#include "kcover/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "kcover/errors.hpp"
#include "kcover/rng.hpp"

namespace kcover {

std::vector<int> Signature::disk_ids() const {
    std::vector<int> ids;
    for (size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            ids.push_back(static_cast<int>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return ids;
}

Signature signature_at(const Point& p, const std::vector<UnitDisk>& disks,
                       const Tolerance& tol) {
    Signature sig = Signature::make(static_cast<int>(disks.size()));
    for (int d = 0; d < static_cast<int>(disks.size()); ++d) {
        if (disk_contains(disks[d], p, tol)) sig.set(d);
    }
    return sig;
}

namespace {

RepresentativeSet dedup_by_signature(std::vector<Representative> reps) {
    // First occurrence per signature wins; output sorted by signature so the
    // merge is order-independent at the signature level.
    std::map<Signature, Representative> by_sig;
    for (auto& rep : reps) {
        by_sig.emplace(rep.signature, std::move(rep));
    }
    RepresentativeSet out;
    out.reps.reserve(by_sig.size());
    for (auto& [sig, rep] : by_sig) out.reps.push_back(std::move(rep));
    return out;
}

}  // namespace

RepresentativeSet segment_representatives(const std::vector<UnitDisk>& disks,
                                          const std::vector<Segment>& segments,
                                          const Tolerance& tol) {
    std::vector<Representative> found;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        const Segment& seg = segments[s];
        std::vector<double> params{0.0, 1.0};
        for (const auto& d : disks) {
            const auto ts = segment_circle_params(seg, d, tol);
            params.insert(params.end(), ts.begin(), ts.end());
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end(),
                                 [](double a, double b) { return b - a <= 1e-12; }),
                     params.end());
        for (size_t i = 0; i + 1 < params.size(); ++i) {
            const double t0 = params[i];
            const double t1 = params[i + 1];
            if (t1 - t0 <= 1e-12) continue;
            const double mid = 0.5 * (t0 + t1);
            const Point p = point_at(seg, mid);
            Signature sig = signature_at(p, disks, tol);
            if (sig.empty()) {
                throw SegmentUncoveredError(
                    s, t0, t1,
                    "segment " + std::to_string(s) + ": sub-interval [" +
                        std::to_string(t0) + ", " + std::to_string(t1) +
                        "] is covered by no disk");
            }
            Representative rep;
            rep.point = p;
            rep.signature = std::move(sig);
            rep.provenance = {RepSource::SegmentSlice, s, mid, ""};
            found.push_back(std::move(rep));
        }
    }
    return dedup_by_signature(std::move(found));
}

double auto_delta(const std::vector<UnitDisk>& disks, const Rect& region) {
    double min_sep = 1.0;
    auto consider = [&](double v) {
        if (v > 1e-9) min_sep = std::min(min_sep, v);
    };
    for (size_t a = 0; a < disks.size(); ++a) {
        for (size_t b = a + 1; b < disks.size(); ++b) {
            const double d = dist(disks[a].center, disks[b].center);
            consider(d);
            consider(std::abs(d - 2.0));
        }
        const Point& c = disks[a].center;
        for (double line : {region.xmin, region.xmax}) {
            consider(std::abs(std::abs(c.x - line) - 1.0));
        }
        for (double line : {region.ymin, region.ymax}) {
            consider(std::abs(std::abs(c.y - line) - 1.0));
        }
    }
    return std::clamp(1e-4 * min_sep, 1e-7, 1e-4);
}

namespace {

struct Candidate {
    Point p;
    std::string kind;
};

void circle_circle_points(const UnitDisk& a, const UnitDisk& b, const Tolerance& tol,
                          std::vector<Point>& out) {
    const double d = dist(a.center, b.center);
    if (d < 1e-12 || d > 2.0 + tol.eps) return;
    const double mx = 0.5 * (a.center.x + b.center.x);
    const double my = 0.5 * (a.center.y + b.center.y);
    if (std::abs(d - 2.0) <= tol.eps) {
        out.push_back({mx, my});
        return;
    }
    const double h = std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d));
    const double ux = (b.center.x - a.center.x) / d;
    const double uy = (b.center.y - a.center.y) / d;
    out.push_back({mx - uy * h, my + ux * h});
    out.push_back({mx + uy * h, my - ux * h});
}

}  // namespace

RepresentativeSet region_representatives(const std::vector<UnitDisk>& disks,
                                         const Rect& region, const Tolerance& tol,
                                         double delta) {
    if (!(region.xmin < region.xmax && region.ymin < region.ymax)) {
        throw ValidationError("region_representatives: degenerate region");
    }
    if (delta <= 0.0) delta = auto_delta(disks, region);

    std::vector<Candidate> candidates;
    for (const auto& d : disks) candidates.push_back({d.center, "center"});

    for (double x : {region.xmin + delta, region.xmax - delta}) {
        for (double y : {region.ymin + delta, region.ymax - delta}) {
            candidates.push_back({{x, y}, "corner"});
        }
    }

    const double diag = delta / std::sqrt(2.0);
    std::vector<Point> xpoints;
    for (size_t a = 0; a < disks.size(); ++a) {
        for (size_t b = a + 1; b < disks.size(); ++b) {
            xpoints.clear();
            circle_circle_points(disks[a], disks[b], tol, xpoints);
            for (const Point& x : xpoints) {
                for (const auto& [ox, oy] :
                     std::initializer_list<std::pair<double, double>>{
                         {delta, 0.0},
                         {diag, diag},
                         {0.0, delta},
                         {-diag, diag},
                         {-delta, 0.0},
                         {-diag, -diag},
                         {0.0, -delta},
                         {diag, -diag}}) {
                    candidates.push_back({{x.x + ox, x.y + oy}, "circle-circle"});
                }
            }
        }
    }

    const Segment edges[4] = {
        {{region.xmin, region.ymin}, {region.xmax, region.ymin}},
        {{region.xmax, region.ymin}, {region.xmax, region.ymax}},
        {{region.xmax, region.ymax}, {region.xmin, region.ymax}},
        {{region.xmin, region.ymax}, {region.xmin, region.ymin}},
    };
    for (const auto& d : disks) {
        for (const Segment& e : edges) {
            for (double t : segment_circle_params(e, d, tol)) {
                const Point x = point_at(e, t);
                for (const auto& [ox, oy] :
                     std::initializer_list<std::pair<double, double>>{
                         {delta, 0.0}, {-delta, 0.0}, {0.0, delta}, {0.0, -delta}}) {
                    candidates.push_back({{x.x + ox, x.y + oy}, "circle-edge"});
                }
            }
        }
        // Leftmost boundary point, nudged inward and outward.
        candidates.push_back({{d.center.x - 1.0 + delta, d.center.y}, "leftmost"});
        candidates.push_back({{d.center.x - 1.0 - delta, d.center.y}, "leftmost"});
    }

    std::vector<Representative> found;
    for (const Candidate& cand : candidates) {
        if (!rect_contains(region, cand.p, tol)) continue;
        Signature sig = signature_at(cand.p, disks, tol);
        if (sig.empty()) {
            throw RegionUncoveredError(
                cand.p, "region point (" + std::to_string(cand.p.x) + ", " +
                            std::to_string(cand.p.y) + ") is covered by no disk");
        }
        Representative rep;
        rep.point = cand.p;
        rep.signature = std::move(sig);
        rep.provenance = {RepSource::RegionCandidate, -1, 0.0, cand.kind};
        found.push_back(std::move(rep));
    }
    return dedup_by_signature(std::move(found));
}

CompletenessReport mc_completeness_check(const std::vector<UnitDisk>& disks,
                                         const Rect& region,
                                         const RepresentativeSet& reps,
                                         std::int64_t samples, std::uint64_t seed,
                                         const Tolerance& tol) {
    std::set<Signature> known;
    for (const auto& rep : reps.reps) known.insert(rep.signature);

    CompletenessReport report;
    std::set<Signature> missing;
    Rng rng(seed);
    for (std::int64_t s = 0; s < samples; ++s) {
        const Point p{rng.uniform(region.xmin, region.xmax),
                      rng.uniform(region.ymin, region.ymax)};
        Signature sig = signature_at(p, disks, tol);
        if (sig.empty()) {
            if (!report.uncovered) report.uncovered = p;
            continue;
        }
        if (!known.count(sig)) missing.insert(std::move(sig));
    }
    report.missing.assign(missing.begin(), missing.end());
    return report;
}

}  // namespace kcover
