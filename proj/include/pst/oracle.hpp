#pragma once

#include "pst/graph.hpp"

#include <cstdint>
#include <optional>

namespace pst {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

enum class OracleStatus { exists, not_exists, budget_exceeded };

const char* to_string(OracleStatus status);

struct OracleResult {
    OracleStatus status = OracleStatus::not_exists;
    std::optional<PlaneTree> witness;  // set iff status == exists
    std::uint64_t nodes = 0;
};

/// Exhaustive search for a plane spanning tree. Edges are decided in
/// lexicographic order (take / skip) with a rollback union-find; a branch is
/// cut when the next edge would cross a taken edge or close a cycle, or when
/// the taken edges plus every still-usable later edge no longer connect the
/// graph. Running out of `budget` search nodes is reported as such.
OracleResult has_plane_spanning_tree(const GeometricGraph& g, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace pst
