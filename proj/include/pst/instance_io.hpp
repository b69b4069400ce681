#pragma once

#include "pst/graph.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pst {

/// Parse or validation failure in an instance or edge-list document. The
/// message names the JSON position or field at fault.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `{"edges": [[i,j],...], "points": [[x,y],...]}` with sorted keys, points
/// in index order and canonical (i < j), sorted edges. One trailing newline.
std::string to_canonical_json(const GeometricGraph& g);

/// Integers only; a float anywhere is rejected. When `require_edges` is
/// false a missing "edges" key means no edges. The point set must be in
/// general position.
GeometricGraph parse_instance(std::string_view text, bool require_edges = true);
GeometricGraph load_instance(const std::filesystem::path& path, bool require_edges = true);

/// `[[i,j],...]` as used for tree edge lists.
std::vector<Edge> parse_edge_list(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

/// SVG 1.1 drawing: graph edges thin and grey, tree edges (if any) thick
/// and black, points on top.
std::string render_svg(const GeometricGraph& g, std::span<const Edge> tree = {});

}  // namespace pst
