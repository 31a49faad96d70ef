#pragma once

#include <string>

#include "json.hpp"
#include "sipoly/census.hpp"
#include "sipoly/polyhedron.hpp"

namespace sipoly {

/// Parses a map document:
///   {"vertices": n, "rotations": [[neighbor, ...], ...]}   or
///   {"vertices": n, "adjacency": [[neighbor, ...], ...]}
/// Rotation lists are counterclockwise neighbor orders; adjacency input
/// is routed through the planar embedder.
CombinatorialMap parse_input(const std::string& bytes);

/// Map document for a combinatorial map, as JSON text.
std::string map_document(const CombinatorialMap& map);

enum class ExportFormat { Json, Dot, Svg };

/// Throws UnsupportedFormat for anything but "json", "dot", "svg".
ExportFormat parse_format(const std::string& name);

std::string export_polyhedron(const Polyhedron& p, ExportFormat format);

nlohmann::ordered_json census_to_json(const Census& census);
Census census_from_json(const nlohmann::ordered_json& doc);

}  // namespace sipoly
