#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polypart {

using coord_t = std::int64_t;
using wide_t = __int128;

// Maximum accepted |coordinate|. Keeps doubled coordinates and all products
// inside 128-bit intermediates.
inline constexpr coord_t kCoordLimit = coord_t{1} << 40;

enum class errc {
  too_few_vertices,
  coordinate_out_of_range,
  non_orthogonal_edge,
  self_intersecting,
  degenerate_area,
  cut_not_interior,
  cut_endpoint_invalid,
  point_outside,
  odd_or_too_small,
  not_admissible_sizes,
  not_adjacent,
  not_nested,
  anchor_in_wrong_part,
  anchor_not_in_kernel,
  union_not_simple,
  generation_budget_exceeded,
  syntax_error,
  io_error,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
  errc code;
};

// Aborting failure: a step contradicted the guarantees of the partition
// theorem this library implements. Carries a dump of the instance.
class theorem_violation : public std::runtime_error {
 public:
  theorem_violation(const std::string& what, std::string dump)
      : std::runtime_error(what), instance_dump(std::move(dump)) {}
  std::string instance_dump;
};

struct Point {
  coord_t x = 0;
  coord_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Simple orthogonal polygon with integer vertices.
///
/// Invariants (established by normalize(), preserved by every operation):
///   - vertices are counter-clockwise,
///   - consecutive edges are perpendicular (no collinear neighbours),
///   - the boundary is simple,
///   - n is even and >= 4, and the reflex count is (n-4)/2,
///   - the vertex list starts at the lexicographically smallest vertex.
struct RectilinearPolygon {
  std::vector<Point> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  const Point& vertex(int i) const {
    return vertices[(i % n() + n()) % n()];
  }
  friend bool operator==(const RectilinearPolygon&,
                         const RectilinearPolygon&) = default;
};

struct NormalizeReport {
  int merged_collinear = 0;
  int dropped_duplicates = 0;
};

/// Canonicalizes a raw closed axis-parallel vertex cycle: drops duplicate
/// points, merges collinear runs, forces counter-clockwise orientation and
/// validates simplicity. Throws `error` with code non_orthogonal_edge,
/// self_intersecting, degenerate_area or too_few_vertices.
RectilinearPolygon normalize(std::vector<Point> raw,
                             NormalizeReport* report = nullptr);

/// Cheap revalidation of all RectilinearPolygon invariants; throws on
/// violation. Used as an internal sanity gate after geometric surgery.
void validate(const RectilinearPolygon& p);

/// Twice the (positive) enclosed area.
wide_t area2(const RectilinearPolygon& p);

std::vector<Point> reflex_vertices(const RectilinearPolygon& p);
bool is_reflex_vertex(const RectilinearPolygon& p, const Point& v);
bool is_vertex(const RectilinearPolygon& p, const Point& v);

bool on_boundary(const RectilinearPolygon& p, const Point& q);
/// Closed containment of a lattice point.
bool contains_point(const RectilinearPolygon& p, const Point& q);
bool strictly_inside(const RectilinearPolygon& p, const Point& q);
/// Containment of the half-lattice point (hx/2, hy/2); exact, and never
/// ambiguous when hx, hy are odd (the point cannot lie on an edge).
bool contains_half(const RectilinearPolygon& p, coord_t hx, coord_t hy);

struct BoundingBox {
  coord_t min_x, min_y, max_x, max_y;
};
BoundingBox bounding_box(const RectilinearPolygon& p);

/// Stable 64-bit fingerprint of the canonical vertex list.
std::uint64_t fingerprint(const RectilinearPolygon& p);

// ---------------------------------------------------------------------------
// Cuts

enum class CutKind { one_cut, two_cut, l_cut };

/// An axis-parallel polyline splitting a host polygon in two. One segment
/// anchored at exactly one reflex vertex (one_cut), one segment between two
/// reflex vertices (two_cut), or two segments between two reflex vertices
/// (l_cut). Stored with the lexicographically smaller endpoint first.
struct Cut {
  CutKind kind = CutKind::one_cut;
  std::vector<Point> polyline;  // 2 points (straight) or 3 (bent)

  const Point& a() const { return polyline.front(); }
  const Point& b() const { return polyline.back(); }
  friend bool operator==(const Cut&, const Cut&) = default;
};

struct SplitResult {
  RectilinearPolygon part1;
  RectilinearPolygon part2;
  int n1 = 0;
  int n2 = 0;
};

/// Classifies and validates a candidate polyline as a cut of `host`:
/// endpoints on the boundary, relative interior strictly inside, endpoint
/// reflexness matching the kind. Throws cut_not_interior /
/// cut_endpoint_invalid.
Cut make_cut(const RectilinearPolygon& host, std::vector<Point> polyline);
std::optional<Cut> try_make_cut(const RectilinearPolygon& host,
                                std::vector<Point> polyline);

/// Splits `host` along `cut` into two polygons. part1 is the piece whose
/// canonical first vertex is lexicographically smaller. The vertex counts
/// obey n1 + n2 = n for a two_cut and n1 + n2 = n + 2 otherwise.
SplitResult split(const RectilinearPolygon& host, const Cut& cut);

/// Maximal axis-parallel chord of `p` emanating from reflex vertex `v`
/// (away from the incident edge of matching direction). Returns the far
/// endpoint and whether it is itself a reflex vertex.
struct Chord {
  Point from;
  Point to;
  bool to_is_reflex = false;
};
Chord chord_from(const RectilinearPolygon& p, const Point& v, bool horizontal);

// ---------------------------------------------------------------------------
// Symmetries of the square lattice

enum class DihedralElement {
  identity,
  rot90,
  rot180,
  rot270,
  mirror_x,   // (x, y) -> (-x, y)
  mirror_y,   // (x, y) -> (x, -y)
  mirror_d,   // (x, y) -> (y, x)
  mirror_a,   // (x, y) -> (-y, -x)
};
inline constexpr DihedralElement kDihedralElements[8] = {
    DihedralElement::identity, DihedralElement::rot90,
    DihedralElement::rot180,   DihedralElement::rot270,
    DihedralElement::mirror_x, DihedralElement::mirror_y,
    DihedralElement::mirror_d, DihedralElement::mirror_a,
};

Point apply(DihedralElement g, const Point& p);
DihedralElement inverse_of(DihedralElement g);
RectilinearPolygon transform(const RectilinearPolygon& p, DihedralElement g);
std::vector<Point> transform_polyline(const std::vector<Point>& pts,
                                      DihedralElement g);

// ---------------------------------------------------------------------------
// Region algebra

/// Union of two polygons with disjoint interiors sharing one boundary
/// segment run. Throws union_not_simple if the result is not a simple
/// polygon (hole, pinch point, or disconnection).
RectilinearPolygon glue_union(const RectilinearPolygon& a,
                              const RectilinearPolygon& b);

/// Exact subset test on regions (both operands must be unions of cells of
/// their own vertex grids, which all RectilinearPolygon values are).
bool region_subset(const RectilinearPolygon& inner,
                   const RectilinearPolygon& outer);

/// The common boundary of two interior-disjoint polygons as a single
/// polyline with collinear runs merged. Throws internal when the shared
/// boundary is empty, branches, or falls into several chains.
std::vector<Point> shared_boundary_polyline(const RectilinearPolygon& a,
                                            const RectilinearPolygon& b);

/// True iff the closed segment [a, b] stays inside the closed region of
/// `p`. Both endpoints must lie in the closed region (throws point_outside
/// otherwise). Exact for arbitrary (non-axis-parallel) segments.
bool sees(const RectilinearPolygon& p, const Point& a, const Point& b);

}  // namespace polypart
