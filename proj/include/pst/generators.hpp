#pragma once

#include "pst/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pst {

inline constexpr std::int64_t kDefaultPolygonScale = 1'000'000;

enum class Family { complete, path_complement, r_construction, random_budgeted, custom };

const char* to_string(Family family);

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    GeometricGraph graph;
    Family family = Family::custom;
    std::optional<std::uint64_t> seed;
    /// s(G), recomputed on the generated instance.
    std::size_t s = 0;
    std::vector<std::string> notes;
};

/// Rounded vertices of a regular n-gon of radius `scale`, counter-clockwise.
/// Convex and general position are verified; the radius doubles on
/// failure, a bounded number of times.
PointSet convex_position_points(int n, std::int64_t scale = kDefaultPolygonScale);

/// Complement of the boundary path u_1 ... u_n of a convex n-gon. The
/// certificate s = n - 2 is checked on the rounded coordinates.
Instance path_complement(int n, std::int64_t scale = kDefaultPolygonScale);

struct RConstruction {
    Instance path;
    Instance complement;
};

/// Convex (n-1)-gon v_1 ... v_{n-1} plus w just inside triangle
/// v_{n-3} v_{n-2} v_{n-1} near v_{n-1}; the path v_1 ... v_{n-1} w and its
/// complement. Certificate: s(complement) = n - 3.
RConstruction r_construction(int n, std::int64_t scale = kDefaultPolygonScale);

enum class RandomMode { complete, budgeted };

struct RandomOptions {
    std::int64_t box = 1000;        // coordinates drawn from [-box, box]
    std::size_t removal_attempts = 0;  // 0 means twice the complete edge count
};

/// Random general-position points; complete graph, or the complete graph
/// thinned by random edge removals that keep s <= n - 3. Deterministic in
/// (n, seed, options).
Instance random_instance(int n, std::uint64_t seed, RandomMode mode, const RandomOptions& options = {});

}  // namespace pst
