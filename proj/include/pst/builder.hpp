#pragma once

#include "pst/graph.hpp"
#include "pst/oracle.hpp"
#include "pst/rotation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pst {

/// Which branch of the existence argument a split realizes. `base` marks
/// the n <= 4 leaves, `fallback` an oracle call after the scan found nothing.
enum class CaseTag { case1, case2_1, case2_2, case3, case4, fallback, base };

const char* to_string(CaseTag tag);

/// A rotation state whose closed sides both satisfy s <= size - 3.
struct SplitLine {
    OrientedLine line;
    std::size_t state_index = 0;  // position in RotationSequence::states
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> shared;
    std::size_t left_s = 0;
    std::size_t right_s = 0;
    CaseTag tag = CaseTag::case1;
};

/// Scans every state of the full rotation from the halving line, in order,
/// and returns the first one whose sides both admit induction. Requires
/// n >= 5 and general position.
std::optional<SplitLine> find_valid_split(const GeometricGraph& g);

/// Unions two side trees given in g's indices and prunes the single cycle
/// that two shared vertices can create. Throws std::logic_error if the
/// result does not certify.
PlaneTree merge_side_trees(const GeometricGraph& g, std::span<const Edge> left_tree,
                           std::span<const Edge> right_tree, const SplitLine& split);

struct TraceEntry {
    std::size_t subset_size = 0;
    CaseTag tag = CaseTag::base;
    int depth = 0;
};

struct BuildOptions {
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

struct BuildReport {
    std::optional<PlaneTree> tree;
    std::vector<TraceEntry> trace;
    /// s(G) > n - 3 at the top level; nothing is promised.
    bool precondition_violated = false;
    /// A graph meeting the hypothesis had no qualifying split. Never
    /// expected; means a bug.
    bool theorem_gap_fallback_used = false;
    bool oracle_budget_exceeded = false;
    std::size_t s = 0;
};

/// Divide and conquer along rotation split lines; n <= 4 and split-less
/// graphs go to the oracle. The returned tree, if any, is certified.
BuildReport build_plane_tree(const GeometricGraph& g, const BuildOptions& options = {});

}  // namespace pst
