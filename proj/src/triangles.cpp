#include "pst/triangles.hpp"

#include <algorithm>

namespace pst {

namespace {

bool empty_in(std::span<const Point> pts, const Point& a, const Point& b, const Point& c) {
    return std::none_of(pts.begin(), pts.end(), [&](const Point& p) {
        return point_in_triangle(p, a, b, c) == TriangleLocation::interior;
    });
}

}  // namespace

std::vector<EmptyTriangle> enumerate_empty_triangles(const PointSet& ps) {
    require_general_position(ps);
    const auto n = static_cast<int>(ps.size());
    const auto pts = ps.points();
    std::vector<EmptyTriangle> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (empty_in(pts, ps[a], ps[b], ps[c])) {
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

SCount s_count(const GeometricGraph& g) {
    SCount out;
    for (const auto& t : enumerate_empty_triangles(g.points())) {
        if (!triple_connected(g, t.a, t.b, t.c)) {
            out.witnesses.push_back(t);
        }
    }
    return out;
}

std::size_t count_disconnected(const GeometricGraph& g, std::span<const EmptyTriangle> empty) {
    return static_cast<std::size_t>(std::count_if(empty.begin(), empty.end(), [&](const EmptyTriangle& t) {
        return !triple_connected(g, t.a, t.b, t.c);
    }));
}

bool relative_equals_global_empty(const PointSet& parent, std::span<const int> subset) {
    std::vector<Point> sub;
    sub.reserve(subset.size());
    for (int i : subset) {
        sub.push_back(parent.at(static_cast<std::size_t>(i)));
    }
    const auto k = sub.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            for (std::size_t c = b + 1; c < k; ++c) {
                if (empty_in(sub, sub[a], sub[b], sub[c]) &&
                    !empty_in(parent.points(), sub[a], sub[b], sub[c])) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace pst
