#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pst {

/// Largest admissible |x| or |y|. Keeps every orientation determinant
/// inside 128-bit range with room to spare.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 30;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sign of the cross product (b - a) x (c - a): +1 when c is strictly left
/// of the directed line a->b, -1 when strictly right, 0 when collinear.
/// Throws std::overflow_error if a coordinate exceeds kCoordinateBound.
int orient(const Point& a, const Point& b, const Point& c);

/// True iff the open segments pq and rs meet in a single point interior to
/// both. Shared endpoints and collinear overlaps are not crossings.
bool segments_properly_cross(const Point& p, const Point& q, const Point& r, const Point& s);

enum class TriangleLocation { interior, boundary, outside };

/// Throws GeometryError when a, b, c are collinear.
TriangleLocation point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// An indexed point sequence. Construction enforces the coordinate bound
/// only; general position is a separate query since callers need to ask it
/// of sets that fail it.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] const Point& at(std::size_t i) const { return points_.at(i); }
    [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

/// All points distinct and no three collinear.
bool in_general_position(const PointSet& ps);

/// Throws GeometryError naming the offending indices.
void require_general_position(const PointSet& ps);

/// Every point is a vertex of the convex hull. Throws GeometryError if ps is
/// not in general position.
bool in_convex_position(const PointSet& ps);

}  // namespace pst
