#pragma once

#include "pst/geom.hpp"
#include "pst/graph.hpp"

#include <compare>
#include <span>
#include <vector>

namespace pst {

/// Vertex indices sorted ascending: a < b < c.
struct EmptyTriangle {
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const EmptyTriangle&, const EmptyTriangle&) = default;
    friend auto operator<=>(const EmptyTriangle&, const EmptyTriangle&) = default;
};

/// Triples of `ps` with no point of `ps` strictly inside, in lexicographic
/// order. O(n^4) scan. Throws GeometryError unless ps is in general position.
std::vector<EmptyTriangle> enumerate_empty_triangles(const PointSet& ps);

/// Disconnected empty triangles of a graph.
struct SCount {
    std::vector<EmptyTriangle> witnesses;

    [[nodiscard]] std::size_t value() const noexcept { return witnesses.size(); }
};

/// Emptiness is relative to g's own point set, which for an induced
/// subgraph means the subset rather than the parent.
SCount s_count(const GeometricGraph& g);

/// s for a precomputed triangle list; used when the same point set is
/// queried under many edge sets.
std::size_t count_disconnected(const GeometricGraph& g, std::span<const EmptyTriangle> empty);

/// Diagnostic: every triple of `subset` empty relative to the subset is also
/// empty relative to `parent`. Always holds for closed half-plane subsets.
bool relative_equals_global_empty(const PointSet& parent, std::span<const int> subset);

}  // namespace pst
