#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

// Set of disk ids covering a location, as a bitset over m disks. Empty means
// uncovered.
struct Signature {
    std::vector<std::uint64_t> words;

    static Signature make(int m) {
        return {std::vector<std::uint64_t>((m + 63) / 64, 0)};
    }
    void set(int d) { words[d >> 6] |= (std::uint64_t{1} << (d & 63)); }
    bool test(int d) const {
        return (words[d >> 6] >> (d & 63)) & 1u;
    }
    bool empty() const {
        for (auto w : words) {
            if (w) return false;
        }
        return true;
    }
    std::vector<int> disk_ids() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature& a, const Signature& b) {
        return a.words <=> b.words;
    }
};

enum class RepSource { SegmentSlice, RegionCandidate };

// Where a representative point came from, carried into the transform output.
struct RepProvenance {
    RepSource source = RepSource::RegionCandidate;
    int segment_index = -1;  // segment slices
    double t = 0.0;          // slice midpoint parameter
    std::string kind;        // region candidates: center/corner/...
};

struct Representative {
    Point point;
    Signature signature;
    RepProvenance provenance;
};

// Deduplicated by signature, sorted by signature.
struct RepresentativeSet {
    std::vector<Representative> reps;
};

Signature signature_at(const Point& p, const std::vector<UnitDisk>& disks,
                       const Tolerance& tol = {});

// One representative per distinct nonempty slice signature: split each
// segment at its circle crossings, take sub-interval midpoints. A midpoint
// with empty signature means the segment is not fully covered and throws
// SegmentUncoveredError.
RepresentativeSet segment_representatives(const std::vector<UnitDisk>& disks,
                                          const std::vector<Segment>& segments,
                                          const Tolerance& tol = {});

// Candidate points around every arrangement feature inside the region
// (centers, inset corners, offsets at circle-circle and circle-edge
// crossings, circle leftmost points), deduplicated by signature. delta <= 0
// selects the automatic feature-scaled offset. Throws RegionUncoveredError
// when a candidate inside the region is uncovered.
RepresentativeSet region_representatives(const std::vector<UnitDisk>& disks,
                                         const Rect& region, const Tolerance& tol = {},
                                         double delta = 0.0);

struct CompletenessReport {
    std::vector<Signature> missing;  // nonempty signatures absent from reps
    std::optional<Point> uncovered;  // first sampled point with empty signature
};

// Monte-Carlo gate for region_representatives: uniform samples in the region,
// reporting signatures the representative set missed.
CompletenessReport mc_completeness_check(const std::vector<UnitDisk>& disks,
                                         const Rect& region,
                                         const RepresentativeSet& reps,
                                         std::int64_t samples, std::uint64_t seed,
                                         const Tolerance& tol = {});

// The automatic offset distance: 1e-4 times the smallest feature separation
// (pairwise center distances against the 0 and 2 thresholds, circle-edge
// clearances), clamped to [1e-7, 1e-4].
double auto_delta(const std::vector<UnitDisk>& disks, const Rect& region);

}  // namespace kcover
