#pragma once

#include <cstdint>

#include "polypart/geometry.hpp"

namespace polypart {

/// Deterministic random simple polyomino with exactly target_n vertices,
/// grown by attaching rectangles to a seed rectangle and rejecting
/// attachments that break simplicity. Throws generation_budget_exceeded
/// after 10000 attempts and odd_or_too_small for an invalid target.
RectilinearPolygon generate(int target_n, std::uint64_t seed);

namespace fixtures {

RectilinearPolygon rectangle();
RectilinearPolygon l_shape();
RectilinearPolygon u_shape();
RectilinearPolygon t_shape();
RectilinearPolygon z_shape();
RectilinearPolygon plus_shape();
RectilinearPolygon staircase();

/// 14-vertex polyomino that no straight cut splits into two pieces of at
/// most 8 vertices each; a bent cut does.
RectilinearPolygon bent_gate14();

/// 52-vertex demo gallery.
RectilinearPolygon gallery52();

}  // namespace fixtures

}  // namespace polypart
