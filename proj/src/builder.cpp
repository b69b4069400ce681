#include "pst/builder.hpp"

#include "pst/disjoint_set.hpp"
#include "pst/triangles.hpp"

#include <algorithm>
#include <stdexcept>

namespace pst {

const char* to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::case1:
        return "case1";
    case CaseTag::case2_1:
        return "case2.1";
    case CaseTag::case2_2:
        return "case2.2";
    case CaseTag::case3:
        return "case3";
    case CaseTag::case4:
        return "case4";
    case CaseTag::fallback:
        return "fallback";
    case CaseTag::base:
        return "base";
    }
    return "unknown";
}

namespace {

std::size_t side_s(const GeometricGraph& g, const std::vector<int>& side) {
    return s_count(induced_subgraph(g, side).graph).value();
}

bool admits_induction(std::size_t size, std::size_t s) { return size >= 3 && s + 3 <= size; }

CaseTag classify(const GeometricGraph& g, const RotationSequence& seq, std::size_t state) {
    if (state == 0) {
        return CaseTag::case1;
    }
    const auto& first = seq.line_sides(0);
    const bool left_ok = admits_induction(first.left.size(), side_s(g, first.left));
    const bool right_ok = admits_induction(first.right.size(), side_s(g, first.right));
    if (!left_ok && right_ok) {
        return CaseTag::case3;
    }
    if (left_ok && !right_ok) {
        return CaseTag::case4;
    }
    // Case 2 splits by where the pivot goes right after the first line that
    // separates a disconnected empty triangle.
    const auto witnesses = s_count(g).witnesses;
    for (std::size_t j = 0; j + 1 < seq.line_count(); ++j) {
        const auto& next = seq.line_sides(j + 1);
        const bool crosses = std::any_of(witnesses.begin(), witnesses.end(), [&](const EmptyTriangle& t) {
            return partition_separates(next, {t.a, t.b, t.c});
        });
        if (crosses) {
            return seq.line_sides(j).in_right(seq.pivots[j + 1]) ? CaseTag::case2_1 : CaseTag::case2_2;
        }
    }
    return CaseTag::case2_1;
}

std::vector<Edge> lift(std::span<const Edge> local, const std::vector<int>& to_parent) {
    std::vector<Edge> out;
    out.reserve(local.size());
    for (const auto& e : local) {
        out.push_back(make_edge(to_parent[static_cast<std::size_t>(e.u)], to_parent[static_cast<std::size_t>(e.v)]));
    }
    return out;
}

}  // namespace

std::optional<SplitLine> find_valid_split(const GeometricGraph& g) {
    if (g.size() < 5) {
        throw std::invalid_argument("find_valid_split needs at least five points");
    }
    const RotationSequence seq = full_rotation(g.points());
    for (std::size_t s = 0; s < seq.states.size(); ++s) {
        const auto& sides = seq.partitions[s];
        if (sides.left.size() < 3 || sides.right.size() < 3) {
            continue;
        }
        const std::size_t ls = side_s(g, sides.left);
        if (!admits_induction(sides.left.size(), ls)) {
            continue;
        }
        const std::size_t rs = side_s(g, sides.right);
        if (!admits_induction(sides.right.size(), rs)) {
            continue;
        }
        SplitLine split;
        split.line = seq.states[s];
        split.state_index = s;
        split.left = sides.left;
        split.right = sides.right;
        std::set_intersection(sides.left.begin(), sides.left.end(), sides.right.begin(), sides.right.end(),
                              std::back_inserter(split.shared));
        split.left_s = ls;
        split.right_s = rs;
        split.tag = classify(g, seq, s);
        return split;
    }
    return std::nullopt;
}

PlaneTree merge_side_trees(const GeometricGraph& g, std::span<const Edge> left_tree,
                           std::span<const Edge> right_tree, const SplitLine& split) {
    const auto within = [](std::span<const Edge> edges, const std::vector<int>& side) {
        return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return std::binary_search(side.begin(), side.end(), e.u) &&
                   std::binary_search(side.begin(), side.end(), e.v);
        });
    };
    if (!within(left_tree, split.left) || !within(right_tree, split.right)) {
        throw std::invalid_argument("side tree leaves its side of the split");
    }
    std::vector<Edge> all(left_tree.begin(), left_tree.end());
    all.insert(all.end(), right_tree.begin(), right_tree.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    // With two shared vertices the union may hold one cycle through both.
    DisjointSet dsu(g.size());
    std::vector<Edge> tree;
    for (const auto& e : all) {
        if (dsu.unite(e.u, e.v)) {
            tree.push_back(e);
        }
    }
    auto cert = certify_plane_spanning_tree(g, tree);
    if (!cert) {
        throw std::logic_error("merged side trees do not certify: " + cert.rejection().message);
    }
    return cert.tree();
}

namespace {

class Builder {
public:
    Builder(const BuildOptions& options, BuildReport& report) : options_(options), report_(report) {}

    std::optional<std::vector<Edge>> build(const GeometricGraph& g, int depth) {
        if (g.size() <= 4) {
            report_.trace.push_back({g.size(), CaseTag::base, depth});
            return via_oracle(g);
        }
        const auto split = find_valid_split(g);
        if (!split) {
            const std::size_t s = s_count(g).value();
            if (s + 3 <= g.size()) {
                report_.theorem_gap_fallback_used = true;
            } else {
                report_.precondition_violated = true;
            }
            report_.trace.push_back({g.size(), CaseTag::fallback, depth});
            return via_oracle(g);
        }
        report_.trace.push_back({g.size(), split->tag, depth});

        const auto left = induced_subgraph(g, split->left);
        const auto right = induced_subgraph(g, split->right);
        auto left_tree = build(left.graph, depth + 1);
        auto right_tree = build(right.graph, depth + 1);
        if (!left_tree || !right_tree) {
            // Both sides satisfy the hypothesis by construction.
            report_.theorem_gap_fallback_used = true;
            report_.trace.push_back({g.size(), CaseTag::fallback, depth});
            return via_oracle(g);
        }
        const auto merged = merge_side_trees(g, lift(*left_tree, left.to_parent),
                                             lift(*right_tree, right.to_parent), *split);
        return std::vector<Edge>(merged.edges().begin(), merged.edges().end());
    }

private:
    std::optional<std::vector<Edge>> via_oracle(const GeometricGraph& g) {
        auto result = has_plane_spanning_tree(g, options_.oracle_budget);
        if (result.status == OracleStatus::budget_exceeded) {
            report_.oracle_budget_exceeded = true;
        }
        if (!result.witness) {
            return std::nullopt;
        }
        return std::vector<Edge>(result.witness->edges().begin(), result.witness->edges().end());
    }

    const BuildOptions& options_;
    BuildReport& report_;
};

}  // namespace

BuildReport build_plane_tree(const GeometricGraph& g, const BuildOptions& options) {
    require_general_position(g.points());
    BuildReport report;
    if (g.size() >= 3) {
        report.s = s_count(g).value();
        report.precondition_violated = report.s + 3 > g.size();
    }
    Builder builder(options, report);
    if (auto edges = builder.build(g, 0)) {
        auto cert = certify_plane_spanning_tree(g, *edges);
        if (!cert) {
            throw std::logic_error("builder produced an uncertifiable tree: " + cert.rejection().message);
        }
        report.tree = cert.tree();
    }
    return report;
}

}  // namespace pst
