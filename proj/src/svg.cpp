#include "pst/instance_io.hpp"

#include <algorithm>
#include <sstream>

namespace pst {

namespace {

// Styling, as fractions of the larger bounding-box side.
constexpr double kMargin = 0.05;
constexpr double kGraphStroke = 0.002;
constexpr double kTreeStroke = 0.006;
constexpr double kPointRadius = 0.008;
constexpr const char* kGraphColour = "#b0b0b0";
constexpr const char* kTreeColour = "#000000";
constexpr const char* kPointColour = "#c0392b";

}  // namespace

std::string render_svg(const GeometricGraph& g, std::span<const Edge> tree) {
    std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (g.size() > 0) {
        const auto pts = g.points().points();
        const auto [lx, hx] = std::minmax_element(pts.begin(), pts.end(),
                                                  [](const Point& a, const Point& b) { return a.x < b.x; });
        const auto [ly, hy] = std::minmax_element(pts.begin(), pts.end(),
                                                  [](const Point& a, const Point& b) { return a.y < b.y; });
        min_x = lx->x;
        max_x = hx->x;
        min_y = ly->y;
        max_y = hy->y;
    }
    const double span = std::max<double>({1.0, static_cast<double>(max_x - min_x), static_cast<double>(max_y - min_y)});
    const double margin = kMargin * span;
    // SVG y grows downward; draw with y negated so the picture is upright.
    const double vx = static_cast<double>(min_x) - margin;
    const double vy = -static_cast<double>(max_y) - margin;
    const double vw = static_cast<double>(max_x - min_x) + 2 * margin;
    const double vh = static_cast<double>(max_y - min_y) + 2 * margin;

    std::ostringstream os;
    os.precision(17);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << vx << ' ' << vy << ' ' << vw
       << ' ' << vh << "\">\n";
    const auto line = [&](const Edge& e, const char* colour, double width) {
        const Point& a = g.point(e.u);
        const Point& b = g.point(e.v);
        os << "  <line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\"" << -b.y
           << "\" stroke=\"" << colour << "\" stroke-width=\"" << width * span << "\"/>\n";
    };
    os << " <g id=\"graph\">\n";
    for (const auto& e : g.edges()) {
        line(e, kGraphColour, kGraphStroke);
    }
    os << " </g>\n <g id=\"tree\">\n";
    for (const auto& e : tree) {
        line(e, kTreeColour, kTreeStroke);
    }
    os << " </g>\n <g id=\"points\">\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Point& p = g.points()[i];
        os << "  <circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\"" << kPointRadius * span << "\" fill=\""
           << kPointColour << "\"><title>" << i << "</title></circle>\n";
    }
    os << " </g>\n</svg>\n";
    return os.str();
}

}  // namespace pst
