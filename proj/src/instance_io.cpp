#include "pst/instance_io.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace pst {

using nlohmann::json;

namespace {

std::int64_t integer_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        throw InstanceError(where + ": expected an integer, got " + std::string(v.type_name()) +
                            (v.is_number_float() ? " (floats are not accepted)" : ""));
    }
    return v.get<std::int64_t>();
}

std::pair<std::int64_t, std::int64_t> integer_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        throw InstanceError(where + ": expected a two-element array");
    }
    return {integer_field(v[0], where + "[0]"), integer_field(v[1], where + "[1]")};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::vector<Edge> edges_from(const json& arr, const std::string& field) {
    if (!arr.is_array()) {
        throw InstanceError(field + ": expected an array of [i, j] pairs");
    }
    std::vector<Edge> edges;
    edges.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        const auto [a, b] = integer_pair(arr[i], where);
        if (a < 0 || b < 0 || a > std::numeric_limits<int>::max() || b > std::numeric_limits<int>::max()) {
            throw InstanceError(where + ": negative or oversized vertex index");
        }
        if (a == b) {
            throw InstanceError(where + ": self-loop");
        }
        edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
    }
    return edges;
}

}  // namespace

std::string to_canonical_json(const GeometricGraph& g) {
    json doc = json::object();
    json points = json::array();
    for (const auto& p : g.points().points()) {
        points.push_back({p.x, p.y});
    }
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    doc["points"] = std::move(points);
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

GeometricGraph parse_instance(std::string_view text, bool require_edges) {
    const json doc = parse_json(text);
    if (!doc.is_object()) {
        throw InstanceError("instance: expected a JSON object");
    }
    if (!doc.contains("points")) {
        throw InstanceError("instance: missing \"points\"");
    }
    const json& pts = doc.at("points");
    if (!pts.is_array()) {
        throw InstanceError("points: expected an array of [x, y] pairs");
    }
    std::vector<Point> points;
    points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string where = "points[" + std::to_string(i) + "]";
        const auto [x, y] = integer_pair(pts[i], where);
        if (x > kCoordinateBound || x < -kCoordinateBound || y > kCoordinateBound || y < -kCoordinateBound) {
            throw InstanceError(where + ": coordinate outside +-2^30");
        }
        points.push_back({x, y});
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        edges = edges_from(doc.at("edges"), "edges");
    } else if (require_edges) {
        throw InstanceError("instance: missing \"edges\"");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (static_cast<std::size_t>(edges[i].v) >= points.size()) {
            throw InstanceError("edges[" + std::to_string(i) + "]: vertex index beyond the " +
                                std::to_string(points.size()) + " points");
        }
    }
    PointSet ps(std::move(points));
    try {
        require_general_position(ps);
    } catch (const GeometryError& e) {
        throw InstanceError(std::string("points: not in general position: ") + e.what());
    }
    return GeometricGraph(std::move(ps), std::move(edges));
}

GeometricGraph load_instance(const std::filesystem::path& path, bool require_edges) {
    return parse_instance(read_text_file(path), require_edges);
}

std::vector<Edge> parse_edge_list(std::string_view text) { return edges_from(parse_json(text), "tree"); }

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pst
