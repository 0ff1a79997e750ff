#pragma once

#include <vector>

#include "polypart/geometry.hpp"

namespace polypart {

/// A guard walking a segment inside one piece. Coordinates are doubled so
/// that half-unit insets stay integral; the real position of (x, y) is
/// (x/2, y/2). a == b is a stationary guard.
struct Patrol {
  int piece_id = -1;
  Point a;  // doubled coordinates
  Point b;  // doubled coordinates

  bool stationary() const { return a == b; }
};

/// The locus of points that see the whole piece: an axis-aligned (possibly
/// degenerate or empty) rectangle, in doubled coordinates.
struct KernelRect {
  Point lo{1, 1};
  Point hi{0, 0};
  bool empty() const { return lo.x > hi.x || lo.y > hi.y; }
};
KernelRect visibility_kernel(const RectilinearPolygon& piece);

/// Exact test that every point of the piece sees patrol.a or patrol.b.
bool coverage_check(const RectilinearPolygon& piece, const Patrol& patrol);

/// Covering patrol for a piece of at most 8 vertices: a stationary guard
/// at a kernel point when one exists, otherwise a segment found among
/// axis-parallel chords (inset into the interior where possible), each
/// candidate verified by coverage_check. Throws theorem_violation if no
/// candidate covers (impossible for valid pieces).
Patrol patrol_for_piece(const RectilinearPolygon& piece, int piece_id = -1);

/// True iff no two patrol segments share a point interior to either
/// segment (shared endpoints and point guards touching are fine).
bool patrols_noncrossing(const std::vector<Patrol>& patrols);

}  // namespace polypart
