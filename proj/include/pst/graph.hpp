#pragma once

#include "pst/geom.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pst {

/// Undirected edge stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws std::invalid_argument on a self-loop.
Edge make_edge(int a, int b);

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point set with straight-line edges. Edges are kept sorted and unique;
/// construction rejects self-loops and out-of-range indices.
class GeometricGraph {
public:
    GeometricGraph() = default;
    GeometricGraph(PointSet points, std::vector<Edge> edges);

    static GeometricGraph complete(PointSet points);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const PointSet& points() const noexcept { return points_; }
    [[nodiscard]] const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] bool has_edge(int a, int b) const;

    friend bool operator==(const GeometricGraph& a, const GeometricGraph& b) {
        return a.points_ == b.points_ && a.edges_ == b.edges_;
    }

private:
    PointSet points_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adjacency_;
};

/// Subgraph plus the map from its local indices back to the parent's.
struct InducedSubgraph {
    GeometricGraph graph;
    std::vector<int> to_parent;
};

/// `subset` may be in any order but must not repeat an index; the local
/// order follows ascending parent index.
InducedSubgraph induced_subgraph(const GeometricGraph& g, std::span<const int> subset);

/// True iff {u, v, w} induces a connected subgraph, i.e. at least two of
/// the three pairs are edges.
bool triple_connected(const GeometricGraph& g, int u, int v, int w);

/// First properly crossing pair in `edges`, if any.
std::optional<std::pair<Edge, Edge>> find_crossing(const GeometricGraph& g, std::span<const Edge> edges);

bool is_crossing_free(const GeometricGraph& g, std::span<const Edge> edges);

/// Edge set certified to be a crossing-free spanning tree of some graph.
/// Only certify_plane_spanning_tree hands these out.
class PlaneTree {
public:
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }

private:
    friend class TreeCertificate;
    PlaneTree(std::size_t vertex_count, std::vector<Edge> edges)
        : edges_(std::move(edges)), vertex_count_(vertex_count) {}

    std::vector<Edge> edges_;
    std::size_t vertex_count_ = 0;
};

enum class RejectionKind { not_subgraph, wrong_count, disconnected, crossing };

const char* to_string(RejectionKind kind);

struct Rejection {
    RejectionKind kind;
    /// not_subgraph: the foreign edge; crossing: the crossing pair.
    std::vector<Edge> witness;
    std::string message;
};

/// Result of certification: exactly one of tree / rejection is set.
class TreeCertificate {
public:
    static TreeCertificate certify(const GeometricGraph& g, std::span<const Edge> candidate);

    [[nodiscard]] bool accepted() const noexcept { return tree_.has_value(); }
    explicit operator bool() const noexcept { return accepted(); }
    [[nodiscard]] const PlaneTree& tree() const { return tree_.value(); }
    [[nodiscard]] const Rejection& rejection() const { return rejection_.value(); }

private:
    std::optional<PlaneTree> tree_;
    std::optional<Rejection> rejection_;
};

/// Checks, in order: subgraph, n-1 edges, connected, crossing-free.
inline TreeCertificate certify_plane_spanning_tree(const GeometricGraph& g, std::span<const Edge> candidate) {
    return TreeCertificate::certify(g, candidate);
}

}  // namespace pst
