#include "pst/rotation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pst {

namespace {

int sign_of(__int128 v) { return (v > 0) - (v < 0); }

__int128 cross(const Direction& a, const Direction& b) {
    return static_cast<__int128>(a.dx) * b.dy - static_cast<__int128>(a.dy) * b.dx;
}

__int128 dot(const Direction& a, const Direction& b) {
    return static_cast<__int128>(a.dx) * b.dx + static_cast<__int128>(a.dy) * b.dy;
}

Direction between(const Point& from, const Point& to) { return {to.x - from.x, to.y - from.y}; }

Direction reversed(const Direction& d) { return {-d.dx, -d.dy}; }

// The earliest orientation strictly after `from` (clockwise) at which the
// line through `pivot` meets another point. Both +(q - pivot) and
// -(q - pivot) are candidates since the line is oriented.
std::pair<int, Direction> first_hit_after(const PointSet& ps, int pivot, const Direction& from) {
    const ClockwiseFrom order(from);
    const Point& p = ps[static_cast<std::size_t>(pivot)];
    int best_point = -1;
    Direction best{};
    for (std::size_t q = 0; q < ps.size(); ++q) {
        if (static_cast<int>(q) == pivot) {
            continue;
        }
        const Direction forward = between(p, ps[q]);
        for (const Direction& c : {forward, reversed(forward)}) {
            if (cross(from, c) == 0 && dot(from, c) > 0) {
                continue;  // the orientation we are leaving
            }
            if (best_point < 0 || order(c, best)) {
                best_point = static_cast<int>(q);
                best = c;
            }
        }
    }
    if (best_point < 0) {
        throw std::invalid_argument("rotation needs at least two points");
    }
    return {best_point, best};
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<int> swap_member(std::vector<int> set, int out, int in) {
    set.erase(std::remove(set.begin(), set.end(), out), set.end());
    set.push_back(in);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::vector<int> with_member(std::vector<int> set, int in) {
    set.push_back(in);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::size_t halving_left_size(std::size_t n) { return (n + 2) / 2; }  // ceil((n+1)/2)

}  // namespace

int ClockwiseFrom::half(const Direction& d) const {
    const __int128 c = cross(ref_, d);
    if (c < 0) {
        return 0;
    }
    if (c > 0) {
        return 1;
    }
    return dot(ref_, d) > 0 ? 0 : 1;
}

bool ClockwiseFrom::operator()(const Direction& a, const Direction& b) const {
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) {
        return ha < hb;
    }
    return cross(a, b) < 0;  // b lies clockwise of a
}

bool SidePartition::in_left(int i) const { return contains(left, i); }
bool SidePartition::in_right(int i) const { return contains(right, i); }

int side_of(const OrientedLine& line, const PointSet& ps, int index) {
    if (index == line.pivot || (line.kind == LineKind::event && index == line.partner)) {
        return 0;
    }
    const Point& p = ps[static_cast<std::size_t>(line.pivot)];
    const Direction to_q = between(p, ps.at(static_cast<std::size_t>(index)));
    const int s = sign_of(cross(line.direction, to_q));
    if (s != 0 || line.kind == LineKind::event) {
        return s;
    }
    // On the bracketing event line: after an infinitesimal clockwise turn,
    // points ahead of the pivot fall to the left, points behind to the right.
    return sign_of(dot(line.direction, to_q));
}

SidePartition side_partition(const OrientedLine& line, const PointSet& ps) {
    SidePartition out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const int s = side_of(line, ps, static_cast<int>(i));
        if (s >= 0) {
            out.left.push_back(static_cast<int>(i));
        }
        if (s <= 0) {
            out.right.push_back(static_cast<int>(i));
        }
    }
    return out;
}

OrientedLine initial_halving_line(const PointSet& ps) {
    require_general_position(ps);
    const std::size_t n = ps.size();
    if (n < 3) {
        throw std::invalid_argument("halving line needs at least three points");
    }
    Direction d{1, 0};
    for (std::int64_t slope = 0;; ++slope) {
        d = {1, slope};
        bool generic = true;
        for (std::size_t i = 0; i < n && generic; ++i) {
            for (std::size_t j = i + 1; j < n && generic; ++j) {
                generic = cross(d, between(ps[i], ps[j])) != 0;
            }
        }
        if (generic) {
            break;
        }
    }
    // Offsets to the left of the origin line along d are pairwise distinct.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto offset = [&](int i) {
        const Point& p = ps[static_cast<std::size_t>(i)];
        return cross(d, Direction{p.x, p.y});
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return offset(a) < offset(b); });
    const std::size_t rank = n - halving_left_size(n);

    OrientedLine line;
    line.kind = LineKind::intermediate;
    line.pivot = order[rank];
    line.direction = d;
    line.next_direction = first_hit_after(ps, line.pivot, d).second;
    return line;
}

EventStep next_event(const OrientedLine& line, const PointSet& ps) {
    if (line.kind != LineKind::intermediate) {
        throw std::invalid_argument("next_event starts from an intermediate line");
    }
    const auto [hit, direction] = first_hit_after(ps, line.pivot, line.direction);

    EventStep step;
    step.event.kind = LineKind::event;
    step.event.pivot = line.pivot;
    step.event.partner = hit;
    step.event.direction = direction;
    step.event.next_direction = direction;

    step.next.kind = LineKind::intermediate;
    step.next.pivot = hit;
    step.next.direction = direction;
    step.next.next_direction = first_hit_after(ps, hit, direction).second;
    return step;
}

RotationSequence full_rotation(const PointSet& ps) {
    RotationSequence seq;
    OrientedLine current = initial_halving_line(ps);
    const ClockwiseFrom from_start(current.direction);
    seq.states.push_back(current);
    seq.pivots.push_back(current.pivot);

    // Each step turns by less than pi, so the event directions pass the
    // reversed start orientation once and then wrap back into the first
    // half-turn exactly when the full turn is complete.
    const std::size_t n = ps.size();
    const std::size_t cap = 4 * n * n + 16;
    bool past_half = false;
    bool closed = false;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        EventStep step = next_event(current, ps);
        const int h = from_start.half(step.event.direction);
        if (!past_half && h == 1) {
            past_half = true;
            seq.opposite_index = seq.pivots.size() - 1;
        } else if (past_half && h == 0) {
            closed = true;
            break;
        }
        seq.states.push_back(step.event);
        seq.states.push_back(step.next);
        seq.pivots.push_back(step.next.pivot);
        current = step.next;
    }
    if (!closed) {
        throw std::logic_error("rotation did not complete a full turn");
    }

    seq.partitions.reserve(seq.states.size());
    for (const auto& s : seq.states) {
        seq.partitions.push_back(side_partition(s, ps));
    }
    if (const auto bad = rotation_invariant_violations(seq, ps); !bad.empty()) {
        throw std::logic_error("rotation invariant violated: " + bad.front());
    }
    return seq;
}

std::vector<std::string> rotation_invariant_violations(const RotationSequence& seq, const PointSet& ps) {
    std::vector<std::string> out;
    const std::size_t n = ps.size();
    const std::size_t lines = seq.line_count();
    if (lines == 0 || seq.states.size() != 2 * lines - 1 || seq.partitions.size() != seq.states.size()) {
        out.emplace_back("malformed sequence");
        return out;
    }
    const std::size_t left_size = halving_left_size(n);
    const std::size_t right_size = n + 1 - left_size;
    for (std::size_t i = 0; i < lines; ++i) {
        const auto& sides = seq.line_sides(i);
        if (sides.left.size() != left_size || sides.right.size() != right_size) {
            out.push_back("line " + std::to_string(i) + ": side sizes " + std::to_string(sides.left.size()) +
                          "/" + std::to_string(sides.right.size()));
        }
        if (seq.line(i).pivot != seq.pivots[i]) {
            out.push_back("line " + std::to_string(i) + ": pivot mismatch");
        }
    }
    for (std::size_t t = 0; t + 1 < lines; ++t) {
        const auto& before = seq.line_sides(t);
        const auto& after = seq.line_sides(t + 1);
        const auto& ev = seq.event(t);
        const auto& at = seq.event_sides(t);
        const int from = seq.pivots[t];
        const int to = seq.pivots[t + 1];
        const std::string where = "event " + std::to_string(t) + ": ";
        if (ev.pivot != from || ev.partner != to) {
            out.push_back(where + "pivots do not chain");
            continue;
        }
        const bool left_swaps = after.right == before.right && after.left == swap_member(before.left, from, to);
        const bool right_swaps = after.left == before.left && after.right == swap_member(before.right, from, to);
        if (left_swaps == right_swaps) {
            out.push_back(where + "expected exactly one side to swap pivots");
        }
        if (before.in_right(to)) {
            if (at.left != with_member(before.left, to) || at.right != before.right) {
                out.push_back(where + "side law for a point reached from the right");
            }
        } else if (at.left != before.left || at.right != with_member(before.right, to)) {
            out.push_back(where + "side law for a point reached from the left");
        }
    }
    if (seq.pivots.front() != seq.pivots.back()) {
        out.emplace_back("pivot sequence does not close");
    }
    if (seq.line_sides(0) != seq.line_sides(lines - 1)) {
        out.emplace_back("final line does not reproduce the first");
    }
    if (seq.opposite_index == 0 || seq.opposite_index >= lines) {
        out.emplace_back("opposite line not found");
    } else {
        const auto& first = seq.line_sides(0);
        const auto& opposite = seq.line_sides(seq.opposite_index);
        const auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        if (!subset(first.right, opposite.left) || !subset(opposite.right, first.left)) {
            out.emplace_back("opposite line does not mirror the first");
        }
        if (n % 2 == 1 && (opposite.left != first.right || opposite.right != first.left)) {
            out.emplace_back("opposite line differs from the reversed first line");
        }
    }
    return out;
}

bool partition_separates(const SidePartition& sides, const std::array<int, 3>& tri) {
    const bool any_left = std::any_of(tri.begin(), tri.end(), [&](int v) { return sides.strictly_left(v); });
    const bool any_right = std::any_of(tri.begin(), tri.end(), [&](int v) { return sides.strictly_right(v); });
    return any_left && any_right;
}

bool line_crosses_triangle(const OrientedLine& line, const std::array<int, 3>& tri, const PointSet& ps) {
    bool any_left = false;
    bool any_right = false;
    for (int v : tri) {
        const int s = side_of(line, ps, v);
        any_left = any_left || s > 0;
        any_right = any_right || s < 0;
    }
    return any_left && any_right;
}

std::optional<Lemma1Witness> check_lemma1(const RotationSequence& seq, std::size_t i, std::size_t j,
                                          const std::array<int, 3>& tri) {
    if (!(i < j) || j >= seq.line_count()) {
        throw std::invalid_argument("check_lemma1 needs line indices i < j within the sequence");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
        throw std::invalid_argument("check_lemma1 needs three distinct points");
    }
    const auto inside = [&](const std::vector<int>& set) {
        return std::all_of(tri.begin(), tri.end(), [&](int v) { return contains(set, v); });
    };
    if (!inside(seq.line_sides(i).right) || !inside(seq.line_sides(j).left)) {
        throw std::invalid_argument("triple is not inside L_i^+ and L_j^-");
    }

    // Only the pivot can leave L^+ at a step, so the last line keeping the
    // whole triple on its right pivots on one of the three.
    std::size_t k = i;
    for (std::size_t t = i; t < j; ++t) {
        if (inside(seq.line_sides(t).right)) {
            k = t;
        }
    }
    std::optional<std::size_t> l;
    for (std::size_t t = k + 1; t < j; ++t) {
        if (partition_separates(seq.line_sides(t), tri)) {
            l = t;
            break;
        }
    }
    const bool pivot_in_tri = std::find(tri.begin(), tri.end(), seq.pivots[k]) != tri.end();
    if (!l || !pivot_in_tri || !inside(seq.line_sides(k).right)) {
        return std::nullopt;
    }
    return Lemma1Witness{k, *l};
}

std::string dump_rotation(const RotationSequence& seq) {
    std::ostringstream os;
    const auto list = [&os](const std::vector<int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << (i ? "," : "") << v[i];
        }
        os << ']';
    };
    for (std::size_t s = 0; s < seq.states.size(); ++s) {
        const auto& line = seq.states[s];
        const auto& sides = seq.partitions[s];
        if (line.kind == LineKind::intermediate) {
            os << "L " << s / 2 << " pivot=" << line.pivot;
        } else {
            os << "E " << s / 2 << " pivots=" << line.pivot << ',' << line.partner;
        }
        os << " |L-|=" << sides.left.size() << " |L+|=" << sides.right.size() << " left=";
        list(sides.left);
        os << " right=";
        list(sides.right);
        if (line.kind == LineKind::intermediate && s / 2 == seq.opposite_index) {
            os << " opposite";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace pst
