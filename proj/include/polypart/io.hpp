#pragma once

#include <string>
#include <vector>

#include "polypart/guards.hpp"
#include "polypart/partition.hpp"

namespace polypart {

/// Polygon text format: the first non-comment token is the vertex count n,
/// followed by n "x y" pairs (any whitespace, CRLF fine, '#' starts a
/// comment). Throws syntax_error carrying a line number, or the validation
/// errors of normalize().
RectilinearPolygon parse_polygon_text(const std::string& text);

std::string emit_polygon_text(const RectilinearPolygon& p);

/// Deterministic JSON: input, budget, pieces, the ordered cut trace
/// (polylines, kinds, case labels, host fingerprints) and optional patrols
/// in doubled coordinates.
std::string result_to_json(const RectilinearPolygon& input,
                           const PartitionResult& result,
                           const std::vector<Patrol>* patrols);

/// Figure-style SVG: shaded pieces, the input outline, cuts numbered in
/// application order and patrols as bold segments. 24 px per lattice unit.
std::string result_to_svg(const RectilinearPolygon& input,
                          const PartitionResult& result,
                          const std::vector<Patrol>* patrols);

/// Pieces array of a result JSON (used by the verify subcommand).
std::vector<RectilinearPolygon> pieces_from_json(const std::string& json_text);

}  // namespace polypart
