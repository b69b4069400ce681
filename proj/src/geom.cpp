#include "pst/geom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pst {

namespace {

void check_bound(const Point& p) {
    if (p.x > kCoordinateBound || p.x < -kCoordinateBound || p.y > kCoordinateBound ||
        p.y < -kCoordinateBound) {
        throw std::overflow_error("coordinate (" + std::to_string(p.x) + ", " +
                                  std::to_string(p.y) + ") exceeds the predicate bound 2^30");
    }
}

int sign_of(__int128 v) { return (v > 0) - (v < 0); }

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    check_bound(a);
    check_bound(b);
    check_bound(c);
    const __int128 abx = b.x - a.x;
    const __int128 aby = b.y - a.y;
    const __int128 acx = c.x - a.x;
    const __int128 acy = c.y - a.y;
    return sign_of(abx * acy - aby * acx);
}

bool segments_properly_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    const int o1 = orient(p, q, r);
    const int o2 = orient(p, q, s);
    const int o3 = orient(r, s, p);
    const int o4 = orient(r, s, q);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

TriangleLocation point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    if (orient(a, b, c) == 0) {
        throw GeometryError("degenerate triangle: vertices are collinear");
    }
    const int s1 = orient(a, b, p);
    const int s2 = orient(b, c, p);
    const int s3 = orient(c, a, p);
    if (s1 == s2 && s2 == s3) {
        return TriangleLocation::interior;  // all nonzero since abc is not degenerate
    }
    const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    if (has_pos && has_neg) {
        return TriangleLocation::outside;
    }
    return TriangleLocation::boundary;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        check_bound(p);
    }
}

namespace {

// Returns the first violating index pair/triple, or an empty vector.
std::vector<std::size_t> general_position_violation(const PointSet& ps) {
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ps[i] == ps[j]) {
                return {i, j};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orient(ps[i], ps[j], ps[k]) == 0) {
                    return {i, j, k};
                }
            }
        }
    }
    return {};
}

}  // namespace

bool in_general_position(const PointSet& ps) { return general_position_violation(ps).empty(); }

void require_general_position(const PointSet& ps) {
    const auto bad = general_position_violation(ps);
    if (bad.empty()) {
        return;
    }
    std::string msg = bad.size() == 2 ? "duplicate points" : "collinear points";
    for (std::size_t i = 0; i < bad.size(); ++i) {
        msg += (i == 0 ? " " : ", ") + std::to_string(bad[i]);
    }
    throw GeometryError(msg);
}

bool in_convex_position(const PointSet& ps) {
    require_general_position(ps);
    const std::size_t n = ps.size();
    if (n <= 3) {
        return true;
    }
    // Andrew's monotone chain; strict turns only, so a hull of n vertices
    // means every point is extreme.
    std::vector<Point> pts(ps.points().begin(), ps.points().end());
    std::sort(pts.begin(), pts.end());
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    return k - 1 == n;
}

}  // namespace pst
