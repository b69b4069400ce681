#pragma once

#include "pst/geom.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pst {

/// Integer direction vector; never the zero vector.
struct Direction {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Strict weak order on directions by clockwise angle measured from
/// `reference`, in [0, 2*pi). Exact: built from cross/dot signs only.
class ClockwiseFrom {
public:
    explicit ClockwiseFrom(Direction reference) : ref_(reference) {}

    /// 0 for angles in [0, pi), 1 for [pi, 2*pi).
    [[nodiscard]] int half(const Direction& d) const;
    [[nodiscard]] bool operator()(const Direction& a, const Direction& b) const;

private:
    Direction ref_;
};

enum class LineKind { intermediate, event };

/// One state of the rotating line.
///
/// An event line passes through `pivot` and `partner` with orientation
/// `direction`. An intermediate line passes through `pivot` alone; it is
/// the line with orientation `direction` turned clockwise by an
/// infinitesimal angle, and stays valid for every orientation strictly
/// before `next_direction`. No concrete angle is ever chosen, so the side
/// of each point is decided exactly.
struct OrientedLine {
    LineKind kind = LineKind::intermediate;
    int pivot = 0;
    int partner = -1;
    Direction direction;
    Direction next_direction;
};

/// Closed sides: `left` holds points on or left of the line, `right` on or
/// right. Both sorted; they share exactly the points on the line.
struct SidePartition {
    std::vector<int> left;
    std::vector<int> right;

    [[nodiscard]] bool in_left(int i) const;
    [[nodiscard]] bool in_right(int i) const;
    [[nodiscard]] bool strictly_left(int i) const { return in_left(i) && !in_right(i); }
    [[nodiscard]] bool strictly_right(int i) const { return in_right(i) && !in_left(i); }

    friend bool operator==(const SidePartition&, const SidePartition&) = default;
};

/// +1 strictly left, -1 strictly right, 0 on the line.
int side_of(const OrientedLine& line, const PointSet& ps, int index);

SidePartition side_partition(const OrientedLine& line, const PointSet& ps);

/// Intermediate line through one point with ceil((n+1)/2) points on its
/// closed left side. The direction is the first of (1,0), (1,1), (1,2), ...
/// not parallel to any pair of points.
OrientedLine initial_halving_line(const PointSet& ps);

struct EventStep {
    OrientedLine event;
    OrientedLine next;
};

/// Rotate an intermediate line clockwise about its pivot until it meets
/// another point; return that event line and the intermediate line that
/// follows it (now pivoting on the point just reached).
EventStep next_event(const OrientedLine& line, const PointSet& ps);

/// The lines C(L) over one full clockwise turn.
///
/// `states` alternates intermediate and event lines, L_1, L(v_1,v_2), L_2,
/// ..., L_s, starting and ending on an intermediate line. Intermediate line
/// i (0-based) is states[2i]; the event between intermediate lines i and
/// i+1 is states[2i+1].
struct RotationSequence {
    std::vector<OrientedLine> states;
    std::vector<SidePartition> partitions;
    /// Pivot of each intermediate line: v_1, ..., v_s with v_s = v_1.
    std::vector<int> pivots;
    /// Intermediate line whose orientation is opposite to L_1's.
    std::size_t opposite_index = 0;

    [[nodiscard]] std::size_t line_count() const noexcept { return pivots.size(); }
    [[nodiscard]] const OrientedLine& line(std::size_t i) const { return states.at(2 * i); }
    [[nodiscard]] const SidePartition& line_sides(std::size_t i) const { return partitions.at(2 * i); }
    [[nodiscard]] std::size_t event_count() const noexcept { return line_count() - 1; }
    [[nodiscard]] const OrientedLine& event(std::size_t i) const { return states.at(2 * i + 1); }
    [[nodiscard]] const SidePartition& event_sides(std::size_t i) const { return partitions.at(2 * i + 1); }
};

/// Runs next_event from initial_halving_line until the orientation has
/// turned by 2*pi. Completion is detected by watching the event directions
/// cross the start orientation's reverse and then the start orientation
/// itself. Throws std::logic_error if any invariant of the sweep fails.
RotationSequence full_rotation(const PointSet& ps);

/// Violations of the sweep invariants: constant |L^-| on intermediate
/// lines, exactly one side changing per event, the event-line side laws,
/// pivot closure, and the opposite line's orientation. Empty when sound.
std::vector<std::string> rotation_invariant_violations(const RotationSequence& seq, const PointSet& ps);

/// True iff the line puts at least one vertex strictly on each side.
bool line_crosses_triangle(const OrientedLine& line, const std::array<int, 3>& tri, const PointSet& ps);
bool partition_separates(const SidePartition& sides, const std::array<int, 3>& tri);

struct Lemma1Witness {
    std::size_t k = 0;
    std::size_t l = 0;
};

/// For intermediate lines i < j and a triple inside L_i^+ and L_j^-, find
/// i <= k < l < j with v_k in the triple, the triple inside L_k^+ and
/// L_j^-, and L_l separating it. Throws std::invalid_argument when the
/// precondition fails; nullopt would mean a broken sweep.
std::optional<Lemma1Witness> check_lemma1(const RotationSequence& seq, std::size_t i, std::size_t j,
                                          const std::array<int, 3>& tri);

/// One line per state: kind, pivot(s), |L^-|, |L^+|, then both sides.
std::string dump_rotation(const RotationSequence& seq);

}  // namespace pst
