#include "pst/generators.hpp"

#include "pst/triangles.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace pst {

const char* to_string(Family family) {
    switch (family) {
    case Family::complete:
        return "complete";
    case Family::path_complement:
        return "path-complement";
    case Family::r_construction:
        return "r-construction";
    case Family::random_budgeted:
        return "random";
    case Family::custom:
        return "custom";
    }
    return "unknown";
}

namespace {

constexpr int kScaleRetries = 8;

std::vector<Point> regular_polygon(int n, std::int64_t scale) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n;
        pts.push_back({std::llround(static_cast<double>(scale) * std::cos(angle)),
                       std::llround(static_cast<double>(scale) * std::sin(angle))});
    }
    return pts;
}

std::vector<Edge> path_edges(int n) {
    std::vector<Edge> out;
    for (int i = 0; i + 1 < n; ++i) {
        out.push_back({i, i + 1});
    }
    return out;
}

std::vector<Edge> complement_of(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::find(edges.begin(), edges.end(), Edge{i, j}) == edges.end()) {
                out.push_back({i, j});
            }
        }
    }
    return out;
}

}  // namespace

PointSet convex_position_points(int n, std::int64_t scale) {
    if (n < 3) {
        throw std::invalid_argument("convex position needs n >= 3");
    }
    if (scale < 1) {
        throw std::invalid_argument("polygon scale must be positive");
    }
    std::int64_t radius = scale;
    for (int attempt = 0; attempt < kScaleRetries && radius <= kCoordinateBound; ++attempt, radius *= 2) {
        PointSet ps(regular_polygon(n, radius));
        if (in_general_position(ps) && in_convex_position(ps)) {
            return ps;
        }
    }
    throw GenerationError("could not place " + std::to_string(n) +
                          " points in convex position; last scale tried " + std::to_string(radius / 2));
}

Instance path_complement(int n, std::int64_t scale) {
    if (n < 3) {
        throw std::invalid_argument("path complement needs n >= 3");
    }
    Instance inst;
    inst.family = Family::path_complement;
    inst.graph = GeometricGraph(convex_position_points(n, scale), complement_of(n, path_edges(n)));
    inst.s = s_count(inst.graph).value();
    if (n == 3) {
        inst.notes.emplace_back("n = 3: the complement is a single edge");
    }
    if (inst.s != static_cast<std::size_t>(n - 2)) {
        throw GenerationError("path complement certificate failed: s = " + std::to_string(inst.s) +
                              ", expected " + std::to_string(n - 2) + "; retry with a larger scale");
    }
    return inst;
}

RConstruction r_construction(int n, std::int64_t scale) {
    if (n < 5) {
        throw std::invalid_argument("r-construction needs n >= 5");
    }
    const PointSet polygon = convex_position_points(n - 1, scale);
    std::vector<Point> base(polygon.points().begin(), polygon.points().end());
    const Point& a = base[static_cast<std::size_t>(n - 4)];  // v_{n-3}
    const Point& b = base[static_cast<std::size_t>(n - 3)];  // v_{n-2}
    const Point& c = base[static_cast<std::size_t>(n - 2)];  // v_{n-1}

    // Pull v_{n-1} toward the centroid by a shrinking fraction until the
    // rounded point is strictly interior and breaks no general position.
    for (double pull = 0.1; pull > 1e-6; pull /= 2) {
        const double cx = (a.x + b.x + c.x) / 3.0;
        const double cy = (a.y + b.y + c.y) / 3.0;
        const Point w{std::llround(c.x + pull * (cx - c.x)), std::llround(c.y + pull * (cy - c.y))};
        if (w == c || point_in_triangle(w, a, b, c) != TriangleLocation::interior) {
            continue;
        }
        std::vector<Point> pts = base;
        pts.push_back(w);
        PointSet ps(std::move(pts));
        if (!in_general_position(ps)) {
            continue;
        }
        RConstruction out;
        out.path.family = Family::r_construction;
        out.complement.family = Family::r_construction;
        out.path.graph = GeometricGraph(ps, path_edges(n));
        out.complement.graph = GeometricGraph(ps, complement_of(n, path_edges(n)));
        out.path.s = s_count(out.path.graph).value();
        out.complement.s = s_count(out.complement.graph).value();
        if (out.complement.s != static_cast<std::size_t>(n - 3)) {
            continue;
        }
        return out;
    }
    throw GenerationError("could not place w for the r-construction with n = " + std::to_string(n));
}

Instance random_instance(int n, std::uint64_t seed, RandomMode mode, const RandomOptions& options) {
    if (n < 3) {
        throw std::invalid_argument("random instance needs n >= 3");
    }
    if (options.box < 2 || options.box > kCoordinateBound) {
        throw std::invalid_argument("random box out of range");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-options.box, options.box);

    constexpr int kMaxSamples = 1'000'000;
    std::vector<Point> pts;
    int samples = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++samples > kMaxSamples) {
            throw GenerationError("rejection sampling did not reach general position");
        }
        const Point p{coord(rng), coord(rng)};
        bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
        for (std::size_t i = 0; ok && i < pts.size(); ++i) {
            for (std::size_t j = i + 1; ok && j < pts.size(); ++j) {
                ok = orient(pts[i], pts[j], p) != 0;
            }
        }
        if (ok) {
            pts.push_back(p);
        }
    }

    Instance inst;
    inst.seed = seed;
    inst.graph = GeometricGraph::complete(PointSet(std::move(pts)));
    inst.family = Family::complete;
    if (mode == RandomMode::budgeted) {
        inst.family = Family::random_budgeted;
        const auto empty = enumerate_empty_triangles(inst.graph.points());
        const std::size_t limit = static_cast<std::size_t>(n - 3);
        std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
        const std::size_t attempts = options.removal_attempts ? options.removal_attempts : 2 * edges.size();
        for (std::size_t t = 0; t < attempts && !edges.empty(); ++t) {
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            const std::size_t at = pick(rng);
            std::vector<Edge> trial = edges;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(at));
            GeometricGraph candidate(inst.graph.points(), trial);
            if (count_disconnected(candidate, empty) <= limit) {
                edges = std::move(trial);
                inst.graph = std::move(candidate);
            }
        }
    }
    inst.s = s_count(inst.graph).value();
    return inst;
}

}  // namespace pst
