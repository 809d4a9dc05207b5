#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ems/errors.hpp"

namespace ems {

struct Vec2 {
    double x = 0, y = 0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Simple polygon, implicitly closed, either winding. A single vertex stands
// for a point geometry.
using Polygon = std::vector<Vec2>;

struct MeterRect {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    bool intersects(const MeterRect& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
    bool contains(Vec2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    MeterRect inflated(double r) const { return {xmin - r, ymin - r, xmax + r, ymax + r}; }
};

inline MeterRect bounding_rect(const Polygon& p) {
    MeterRect r{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (auto v : p) {
        r.xmin = std::min(r.xmin, v.x);
        r.ymin = std::min(r.ymin, v.y);
        r.xmax = std::max(r.xmax, v.x);
        r.ymax = std::max(r.ymax, v.y);
    }
    return r;
}

inline double polygon_area(const Polygon& p) {
    if (p.size() < 3) return 0.0;
    double a = 0;
    for (size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) a += cross(p[j], p[i]);
    return std::abs(a) / 2.0;
}

inline Vec2 polygon_centroid(const Polygon& p) {
    if (p.empty()) return {};
    if (p.size() < 3 || polygon_area(p) == 0.0) {
        Vec2 c{};
        for (auto v : p) c = c + v;
        return c * (1.0 / static_cast<double>(p.size()));
    }
    double a = 0;
    Vec2 c{};
    for (size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
        double w = cross(p[j], p[i]);
        a += w;
        c = c + (p[j] + p[i]) * w;
    }
    return c * (1.0 / (3.0 * a));
}

inline double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

inline double dist_segment_segment(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    // Proper intersection means distance zero.
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross(q - p, r - p); };
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return 0.0;
    return std::min(std::min(dist_point_segment(a, c, d), dist_point_segment(b, c, d)),
                    std::min(dist_point_segment(c, a, b), dist_point_segment(d, a, b)));
}

// Strict interior crossing of two segments (not endpoint contact, not
// collinear overlap).
inline bool segments_properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross(q - p, r - p); };
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

enum class PointLoc { outside, boundary, inside };

// Crossing-number test with an explicit boundary band of width eps.
inline PointLoc locate_point(const Polygon& poly, Vec2 p, double eps = 1e-9) {
    if (poly.empty()) return PointLoc::outside;
    if (poly.size() == 1) return dist(p, poly[0]) <= eps ? PointLoc::boundary : PointLoc::outside;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        if (dist_point_segment(p, poly[j], poly[i]) <= eps) return PointLoc::boundary;
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        Vec2 a = poly[j], b = poly[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xi) in = !in;
        }
    }
    return in ? PointLoc::inside : PointLoc::outside;
}

inline double dist_point_polygon_boundary(Vec2 p, const Polygon& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (poly.size() == 1) return dist(p, poly[0]);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        best = std::min(best, dist_point_segment(p, poly[j], poly[i]));
    return best;
}

// Distance from p to the closed region bounded by poly (0 inside or on it).
inline double dist_point_polygon(Vec2 p, const Polygon& poly) {
    if (poly.size() >= 3 && locate_point(poly, p) != PointLoc::outside) return 0.0;
    return dist_point_polygon_boundary(p, poly);
}

inline bool is_simple_polygon(const Polygon& poly) {
    if (poly.size() < 3) return false;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        if (a == b) return false;  // zero-length edge
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            Vec2 c = poly[j], d = poly[(j + 1) % n];
            if (dist_segment_segment(a, b, c, d) <= 0.0) return false;
        }
    }
    return true;
}

namespace detail {

inline bool any_proper_cross(const Polygon& a, const Polygon& b) {
    const size_t n = a.size(), m = b.size();
    if (n < 2 || m < 2) return false;
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        for (size_t k = 0, l = m - 1; k < m; l = k++)
            if (segments_properly_cross(a[j], a[i], b[l], b[k])) return true;
    return false;
}

inline double boundary_min_distance(const Polygon& a, const Polygon& b) {
    if (a.size() == 1) return dist_point_polygon_boundary(a[0], b);
    if (b.size() == 1) return dist_point_polygon_boundary(b[0], a);
    double best = std::numeric_limits<double>::infinity();
    const size_t n = a.size(), m = b.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        for (size_t k = 0, l = m - 1; k < m; l = k++)
            best = std::min(best, dist_segment_segment(a[j], a[i], b[l], b[k]));
    return best;
}

// All vertices and edge midpoints of a lie in closed b. With no proper edge
// crossings this implies region containment for the shapes handled here.
inline bool closed_contained(const Polygon& a, const Polygon& b) {
    if (b.size() < 3) return false;
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (locate_point(b, a[i]) == PointLoc::outside) return false;
        if (n >= 2) {
            Vec2 mid = (a[i] + a[(i + 1) % n]) * 0.5;
            if (locate_point(b, mid) == PointLoc::outside) return false;
        }
    }
    return true;
}

}  // namespace detail

// Min distance between the closed regions of two geometries (0 when they
// meet). Accepts point (1 vertex) or polygon (>=3 vertices).
inline double polygon_min_distance(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    if (a.size() == 1) return dist_point_polygon(a[0], b);
    if (b.size() == 1) return dist_point_polygon(b[0], a);
    if (!detail::any_proper_cross(a, b)) {
        if (locate_point(b, a[0]) != PointLoc::outside) return 0.0;
        if (locate_point(a, b[0]) != PointLoc::outside) return 0.0;
    }
    return detail::boundary_min_distance(a, b);
}

// Pairwise topological summary of two simple polygons / points.
struct PolyRelation {
    bool equals = false;
    bool a_contains_b = false;  // strictly (not equal)
    bool b_contains_a = false;
    bool overlaps = false;  // interiors meet, no containment
    bool touches = false;   // boundaries meet, interiors disjoint
    bool disjoint = false;
    double distance = 0;  // min region distance; positive only when disjoint
};

inline PolyRelation relate_polygons(const Polygon& a, const Polygon& b, double eps = 1e-9) {
    PolyRelation r;
    const bool a_pt = a.size() == 1, b_pt = b.size() == 1;
    if (a_pt && b_pt) {
        double d = dist(a[0], b[0]);
        if (d <= eps) {
            r.equals = true;
        } else {
            r.disjoint = true;
            r.distance = d;
        }
        return r;
    }
    if (a_pt || b_pt) {
        const Polygon& poly = a_pt ? b : a;
        Vec2 p = a_pt ? a[0] : b[0];
        PointLoc loc = locate_point(poly, p, eps);
        if (loc == PointLoc::inside) {
            (a_pt ? r.b_contains_a : r.a_contains_b) = true;
        } else if (loc == PointLoc::boundary) {
            r.touches = true;
        } else {
            r.disjoint = true;
            r.distance = dist_point_polygon_boundary(p, poly);
        }
        return r;
    }

    bool cross_ab = detail::any_proper_cross(a, b);
    bool a_in_b = !cross_ab && detail::closed_contained(a, b);
    bool b_in_a = !cross_ab && detail::closed_contained(b, a);
    if (a_in_b && b_in_a) {
        r.equals = true;
        return r;
    }
    if (b_in_a) {
        r.a_contains_b = true;
        return r;
    }
    if (a_in_b) {
        r.b_contains_a = true;
        return r;
    }
    bool vertex_strictly_in = false;
    for (auto v : a)
        if (locate_point(b, v, eps) == PointLoc::inside) vertex_strictly_in = true;
    for (auto v : b)
        if (locate_point(a, v, eps) == PointLoc::inside) vertex_strictly_in = true;
    if (cross_ab || vertex_strictly_in) {
        r.overlaps = true;
        return r;
    }
    double bdist = detail::boundary_min_distance(a, b);
    if (bdist <= eps) {
        r.touches = true;
        return r;
    }
    r.disjoint = true;
    r.distance = bdist;
    return r;
}

}  // namespace ems
