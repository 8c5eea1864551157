#pragma once

#include <vector>

namespace kcover {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Radius is always 1; only the center varies.
struct UnitDisk {
    Point center;
};

struct Segment {
    Point a;
    Point b;
};

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

// Additive tolerance for the metric predicates. Closed-set semantics:
// a point at distance exactly 1 is covered, disks at center distance
// exactly 2 conflict (tangency counts both ways).
struct Tolerance {
    double eps = 1e-9;
};

bool tolerance_valid(const Tolerance& tol);

double dist(const Point& p, const Point& q);
double dist2(const Point& p, const Point& q);

bool disk_contains(const UnitDisk& d, const Point& p, const Tolerance& tol = {});
bool disks_conflict(const UnitDisk& d1, const UnitDisk& d2, const Tolerance& tol = {});
bool disk_intersects_rect(const UnitDisk& d, const Rect& r, const Tolerance& tol = {});

Point clamp_to_rect(const Point& p, const Rect& r);
bool rect_contains(const Rect& r, const Point& p, const Tolerance& tol = {});

Point point_at(const Segment& s, double t);
double segment_length(const Segment& s);

// Parameters t in [0,1] where the segment crosses the boundary circle of d,
// sorted ascending. A tangential graze within eps yields one parameter.
std::vector<double> segment_circle_params(const Segment& s, const UnitDisk& d,
                                          const Tolerance& tol = {});

}  // namespace kcover
