#include "pst/graph.hpp"

#include "pst/disjoint_set.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace pst {
namespace {

PointSet pentagon() { return PointSet({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}); }

std::vector<Edge> star(int center, int n) {
    std::vector<Edge> out;
    for (int v = 0; v < n; ++v) {
        if (v != center) {
            out.push_back(make_edge(center, v));
        }
    }
    return out;
}

TEST(GeometricGraph, CanonicalisesAndDeduplicates) {
    const GeometricGraph g(pentagon(), {{3, 1}, {1, 3}, {0, 4}});
    ASSERT_EQ(g.edges().size(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 4}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(GeometricGraph, RejectsBadEdges) {
    EXPECT_THROW(GeometricGraph(pentagon(), {{0, 5}}), GraphError);
    EXPECT_THROW(GeometricGraph(pentagon(), {{2, 2}}), GraphError);
    EXPECT_THROW(GeometricGraph(pentagon(), {{-1, 2}}), GraphError);
}

TEST(InducedSubgraph, Examples) {
    const auto complete = GeometricGraph::complete(pentagon());
    const std::vector<int> three{4, 0, 2};
    const auto sub = induced_subgraph(complete, three);
    EXPECT_EQ(sub.graph.size(), 3u);
    EXPECT_EQ(sub.graph.edges().size(), 3u);
    EXPECT_EQ(sub.to_parent, (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(sub.graph.point(2), pentagon()[4]);

    const GeometricGraph edgeless(pentagon(), {});
    EXPECT_TRUE(induced_subgraph(edgeless, three).graph.edges().empty());

    const GeometricGraph path(pentagon(), {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const std::vector<int> ends{0, 4};
    const auto endpoints = induced_subgraph(path, ends);
    EXPECT_EQ(endpoints.graph.size(), 2u);
    EXPECT_TRUE(endpoints.graph.edges().empty());
}

TEST(InducedSubgraph, IdempotentOnFullSet) {
    const GeometricGraph g(pentagon(), {{0, 2}, {1, 4}, {2, 3}});
    const std::vector<int> all{0, 1, 2, 3, 4};
    const auto sub = induced_subgraph(g, all);
    EXPECT_EQ(sub.graph, g);
    EXPECT_EQ(induced_subgraph(sub.graph, all).graph, g);
}

TEST(InducedSubgraph, Errors) {
    const auto g = GeometricGraph::complete(pentagon());
    const std::vector<int> out_of_range{0, 7};
    const std::vector<int> repeated{1, 1};
    EXPECT_THROW(induced_subgraph(g, out_of_range), GraphError);
    EXPECT_THROW(induced_subgraph(g, repeated), GraphError);
    EXPECT_THROW(induced_subgraph(g, std::span<const int>{}), GraphError);
}

TEST(TripleConnected, Examples) {
    const GeometricGraph path(pentagon(), {{0, 1}, {1, 2}});
    EXPECT_TRUE(triple_connected(path, 0, 1, 2));
    const GeometricGraph one(pentagon(), {{0, 1}});
    EXPECT_FALSE(triple_connected(one, 0, 1, 2));
    const GeometricGraph none(pentagon(), {});
    EXPECT_FALSE(triple_connected(none, 0, 1, 2));
    EXPECT_THROW(triple_connected(none, 0, 0, 2), GraphError);
}

TEST(CrossingFree, Examples) {
    const auto g = GeometricGraph::complete(pentagon());
    EXPECT_TRUE(is_crossing_free(g, star(2, 5)));
    const std::vector<Edge> diagonals{{0, 2}, {1, 3}};
    EXPECT_FALSE(is_crossing_free(g, diagonals));
    EXPECT_TRUE(is_crossing_free(g, std::span<const Edge>{}));
}

TEST(Certify, AcceptsStar) {
    const auto g = GeometricGraph::complete(pentagon());
    const auto cert = certify_plane_spanning_tree(g, star(0, 5));
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert.tree().edges().size(), 4u);
}

TEST(Certify, RejectsCrossingWithWitness) {
    // Quadrilateral 0,1,2,3 (convex): diagonals 0-2 and 1-3 plus side 2-3.
    const PointSet quad({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    const auto g = GeometricGraph::complete(quad);
    const std::vector<Edge> t{{0, 2}, {1, 3}, {2, 3}};
    const auto cert = certify_plane_spanning_tree(g, t);
    ASSERT_FALSE(cert);
    EXPECT_EQ(cert.rejection().kind, RejectionKind::crossing);
    EXPECT_EQ(cert.rejection().witness, (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(Certify, RejectsWrongCountAndForeignEdges) {
    const GeometricGraph g(pentagon(), {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const std::vector<Edge> short_path{{0, 1}, {1, 2}, {2, 3}};
    EXPECT_EQ(certify_plane_spanning_tree(g, short_path).rejection().kind, RejectionKind::wrong_count);
    const std::vector<Edge> foreign{{0, 1}, {1, 2}, {2, 3}, {0, 4}};
    const auto cert = certify_plane_spanning_tree(g, foreign);
    EXPECT_EQ(cert.rejection().kind, RejectionKind::not_subgraph);
    EXPECT_EQ(cert.rejection().witness, (std::vector<Edge>{{0, 4}}));
}

TEST(Certify, RejectsDisconnected) {
    // Four edges, but a triangle plus a separate edge.
    const auto g = GeometricGraph::complete(PointSet({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}, {2, 2}}));
    const std::vector<Edge> t{{0, 1}, {1, 5}, {0, 5}, {2, 3}, {3, 4}};
    EXPECT_EQ(certify_plane_spanning_tree(g, t).rejection().kind, RejectionKind::disconnected);
}

// The verdict equals the conjunction of the four individual checks.
TEST(Certify, DecomposesIntoItsChecks) {
    std::mt19937_64 rng(21);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const auto ps = testing::random_points(n, seed, 30);
        const auto g = GeometricGraph::complete(ps);
        std::vector<Edge> host;
        for (const auto& e : g.edges()) {
            if (rng() % 3 != 0) {
                host.push_back(e);
            }
        }
        const GeometricGraph sub(ps, host);
        std::vector<Edge> candidate;
        for (const auto& e : g.edges()) {
            if (rng() % 3 == 0) {
                candidate.push_back(e);
            }
        }
        const bool subgraph = std::all_of(candidate.begin(), candidate.end(),
                                          [&](const Edge& e) { return sub.has_edge(e.u, e.v); });
        const bool count = candidate.size() == static_cast<std::size_t>(n - 1);
        DisjointSet dsu(static_cast<std::size_t>(n));
        for (const auto& e : candidate) {
            dsu.unite(e.u, e.v);
        }
        const bool connected = dsu.components() == 1;
        const bool plane = is_crossing_free(sub, candidate);
        EXPECT_EQ(static_cast<bool>(certify_plane_spanning_tree(sub, candidate)),
                  subgraph && count && connected && plane);
    }
}

TEST(Certify, EveryStarOfACompleteGraphIsAccepted) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        const auto g = GeometricGraph::complete(testing::random_points(n, seed));
        for (int v = 0; v < n; ++v) {
            EXPECT_TRUE(certify_plane_spanning_tree(g, star(v, n)));
        }
    }
}

}  // namespace
}  // namespace pst
