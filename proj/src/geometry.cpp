#include "kcover/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace kcover {

bool tolerance_valid(const Tolerance& tol) {
    return tol.eps > 0.0 && tol.eps < 1e-3;
}

double dist2(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

double dist(const Point& p, const Point& q) {
    return std::sqrt(dist2(p, q));
}

bool disk_contains(const UnitDisk& d, const Point& p, const Tolerance& tol) {
    return dist(d.center, p) <= 1.0 + tol.eps;
}

bool disks_conflict(const UnitDisk& d1, const UnitDisk& d2, const Tolerance& tol) {
    return dist(d1.center, d2.center) <= 2.0 + tol.eps;
}

Point clamp_to_rect(const Point& p, const Rect& r) {
    return {std::clamp(p.x, r.xmin, r.xmax), std::clamp(p.y, r.ymin, r.ymax)};
}

bool disk_intersects_rect(const UnitDisk& d, const Rect& r, const Tolerance& tol) {
    return dist(d.center, clamp_to_rect(d.center, r)) <= 1.0 + tol.eps;
}

bool rect_contains(const Rect& r, const Point& p, const Tolerance& tol) {
    return p.x >= r.xmin - tol.eps && p.x <= r.xmax + tol.eps &&
           p.y >= r.ymin - tol.eps && p.y <= r.ymax + tol.eps;
}

Point point_at(const Segment& s, double t) {
    return {s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
}

double segment_length(const Segment& s) {
    return dist(s.a, s.b);
}

std::vector<double> segment_circle_params(const Segment& s, const UnitDisk& d,
                                          const Tolerance& tol) {
    // |a + t*(b-a) - c|^2 = 1 as a quadratic in t.
    const double ux = s.b.x - s.a.x;
    const double uy = s.b.y - s.a.y;
    const double wx = s.a.x - d.center.x;
    const double wy = s.a.y - d.center.y;
    const double qa = ux * ux + uy * uy;
    if (qa == 0.0) return {};
    const double qb = 2.0 * (wx * ux + wy * uy);
    const double qc = wx * wx + wy * wy - 1.0;

    // Closest approach of the supporting line, for the tangency band.
    const double t_min = -qb / (2.0 * qa);
    const double d2_min = std::max(0.0, qc + 1.0 + qb * t_min + qa * t_min * t_min);
    const double d_min = std::sqrt(d2_min);

    std::vector<double> out;
    if (std::abs(d_min - 1.0) <= tol.eps) {
        if (t_min >= 0.0 && t_min <= 1.0) out.push_back(t_min);
        return out;
    }
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return out;
    const double root = std::sqrt(disc);
    const double t1 = (-qb - root) / (2.0 * qa);
    const double t2 = (-qb + root) / (2.0 * qa);
    for (double t : {t1, t2}) {
        if (t >= 0.0 && t <= 1.0) out.push_back(t);
    }
    return out;
}

}  // namespace kcover
