#include "pst/graph.hpp"

#include "pst/disjoint_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace pst {

Edge make_edge(int a, int b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

GeometricGraph::GeometricGraph(PointSet points, std::vector<Edge> edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
    const auto n = static_cast<int>(points_.size());
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") references a vertex outside 0.." + std::to_string(n - 1));
        }
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adjacency_.assign(points_.size() * points_.size(), 0);
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u) * points_.size() + static_cast<std::size_t>(e.v)] = 1;
        adjacency_[static_cast<std::size_t>(e.v) * points_.size() + static_cast<std::size_t>(e.u)] = 1;
    }
}

GeometricGraph GeometricGraph::complete(PointSet points) {
    const auto n = static_cast<int>(points.size());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return GeometricGraph(std::move(points), std::move(edges));
}

bool GeometricGraph::has_edge(int a, int b) const {
    const auto n = points_.size();
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
        throw GraphError("vertex index out of range");
    }
    return adjacency_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] != 0;
}

InducedSubgraph induced_subgraph(const GeometricGraph& g, std::span<const int> subset) {
    std::vector<int> to_parent(subset.begin(), subset.end());
    if (to_parent.empty()) {
        throw GraphError("induced subgraph of an empty vertex set");
    }
    std::sort(to_parent.begin(), to_parent.end());
    if (std::adjacent_find(to_parent.begin(), to_parent.end()) != to_parent.end()) {
        throw GraphError("induced subgraph vertex set repeats an index");
    }
    if (to_parent.front() < 0 || static_cast<std::size_t>(to_parent.back()) >= g.size()) {
        throw GraphError("induced subgraph vertex index out of range");
    }
    std::vector<Point> pts;
    pts.reserve(to_parent.size());
    for (int p : to_parent) {
        pts.push_back(g.point(p));
    }
    std::vector<Edge> edges;
    const auto k = static_cast<int>(to_parent.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (g.has_edge(to_parent[i], to_parent[j])) {
                edges.push_back({i, j});
            }
        }
    }
    return {GeometricGraph(PointSet(std::move(pts)), std::move(edges)), std::move(to_parent)};
}

bool triple_connected(const GeometricGraph& g, int u, int v, int w) {
    if (u == v || v == w || u == w) {
        throw GraphError("triple_connected needs three distinct vertices");
    }
    const int edges = int{g.has_edge(u, v)} + int{g.has_edge(v, w)} + int{g.has_edge(u, w)};
    return edges >= 2;
}

std::optional<std::pair<Edge, Edge>> find_crossing(const GeometricGraph& g, std::span<const Edge> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            if (segments_properly_cross(g.point(a.u), g.point(a.v), g.point(b.u), g.point(b.v))) {
                return std::pair{a, b};
            }
        }
    }
    return std::nullopt;
}

bool is_crossing_free(const GeometricGraph& g, std::span<const Edge> edges) {
    return !find_crossing(g, edges).has_value();
}

const char* to_string(RejectionKind kind) {
    switch (kind) {
    case RejectionKind::not_subgraph:
        return "not-subgraph";
    case RejectionKind::wrong_count:
        return "wrong-count";
    case RejectionKind::disconnected:
        return "disconnected";
    case RejectionKind::crossing:
        return "crossing";
    }
    return "unknown";
}

TreeCertificate TreeCertificate::certify(const GeometricGraph& g, std::span<const Edge> candidate) {
    TreeCertificate out;
    const auto reject = [&out](RejectionKind kind, std::vector<Edge> witness, std::string message) {
        out.rejection_ = Rejection{kind, std::move(witness), std::move(message)};
        return out;
    };

    const auto n = static_cast<int>(g.size());
    std::vector<Edge> edges;
    edges.reserve(candidate.size());
    for (const auto& e : candidate) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v || !g.has_edge(e.u, e.v)) {
            return reject(RejectionKind::not_subgraph, {e},
                          "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") is not an edge of the graph");
        }
        edges.push_back(make_edge(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const std::size_t expected = g.size() == 0 ? 0 : g.size() - 1;
    if (edges.size() != expected) {
        return reject(RejectionKind::wrong_count, {},
                      "expected " + std::to_string(expected) + " distinct edges, got " +
                          std::to_string(edges.size()));
    }

    DisjointSet dsu(g.size());
    for (const auto& e : edges) {
        dsu.unite(e.u, e.v);
    }
    if (dsu.components() > 1) {
        return reject(RejectionKind::disconnected, {},
                      "edges leave " + std::to_string(dsu.components()) + " components");
    }

    if (auto pair = find_crossing(g, edges)) {
        const auto [a, b] = *pair;
        return reject(RejectionKind::crossing, {a, b},
                      "edges (" + std::to_string(a.u) + ", " + std::to_string(a.v) + ") and (" +
                          std::to_string(b.u) + ", " + std::to_string(b.v) + ") cross");
    }

    out.tree_ = PlaneTree(g.size(), std::move(edges));
    return out;
}

}  // namespace pst
