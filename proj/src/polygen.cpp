#include "polypart/polygen.hpp"

#include <algorithm>
#include <random>

namespace polypart {

namespace {

// Extrudes a rectangle outward from a boundary edge sub-segment; returns
// the glued polygon or nothing when the attachment breaks simplicity.
std::optional<RectilinearPolygon> try_attach(const RectilinearPolygon& poly,
                                             int edge, coord_t offset,
                                             coord_t sublen, coord_t depth,
                                             coord_t coord_cap) {
  const Point a = poly.vertices[edge];
  const Point b = poly.vertex(edge + 1);
  const coord_t dx = (b.x > a.x) - (b.x < a.x);
  const coord_t dy = (b.y > a.y) - (b.y < a.y);
  // Interior lies left of a CCW edge; extrude to the right.
  const coord_t nx = dy, ny = -dx;

  const Point p1{a.x + dx * offset, a.y + dy * offset};
  const Point p2{p1.x + dx * sublen, p1.y + dy * sublen};
  const Point p3{p2.x + nx * depth, p2.y + ny * depth};
  const Point p4{p1.x + nx * depth, p1.y + ny * depth};
  for (const Point& q : {p1, p2, p3, p4})
    if (std::abs(q.x) > coord_cap || std::abs(q.y) > coord_cap)
      return std::nullopt;

  try {
    RectilinearPolygon rect = normalize({p1, p2, p3, p4});
    return glue_union(poly, rect);
  } catch (const error&) {
    return std::nullopt;
  }
}

RectilinearPolygon shift_to_origin(const RectilinearPolygon& p) {
  const BoundingBox bb = bounding_box(p);
  std::vector<Point> v;
  v.reserve(p.vertices.size());
  for (const Point& q : p.vertices) v.push_back({q.x - bb.min_x, q.y - bb.min_y});
  return normalize(std::move(v));
}

}  // namespace

RectilinearPolygon generate(int target_n, std::uint64_t seed) {
  if (target_n < 4 || target_n % 2 != 0)
    throw error(errc::odd_or_too_small, "target vertex count must be even and >= 4");

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + target_n);
  auto rnd = [&](coord_t k) { return static_cast<coord_t>(rng() % static_cast<std::uint64_t>(k)); };
  const coord_t cap = 4 * target_n + 16;

  int budget = 10000;
  while (budget > 0) {
    const coord_t w = 1 + rnd(4), h = 1 + rnd(4);
    RectilinearPolygon poly = normalize({{0, 0}, {w, 0}, {w, h}, {0, h}});

    int stuck = 0;
    while (poly.n() < target_n && stuck < 300 && budget > 0) {
      --budget;
      const int edge = static_cast<int>(rnd(poly.n()));
      const Point a = poly.vertices[edge];
      const Point b = poly.vertex(edge + 1);
      const coord_t len = std::abs(b.x - a.x) + std::abs(b.y - a.y);
      const coord_t sublen = 1 + rnd(len);
      const coord_t offset = rnd(len - sublen + 1);
      const coord_t depth = 1 + rnd(3);
      auto cand = try_attach(poly, edge, offset, sublen, depth, cap);
      if (!cand || cand->n() > target_n || cand->n() < poly.n()) {
        ++stuck;
        continue;
      }
      if (cand->n() == poly.n()) ++stuck;
      else stuck = 0;
      poly = std::move(*cand);
    }
    if (poly.n() == target_n) return shift_to_origin(poly);
  }
  throw error(errc::generation_budget_exceeded,
              "could not reach the target vertex count");
}

namespace fixtures {

RectilinearPolygon rectangle() {
  return normalize({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
}

RectilinearPolygon l_shape() {
  return normalize({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

RectilinearPolygon u_shape() {
  return normalize(
      {{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

RectilinearPolygon t_shape() {
  return normalize(
      {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {0, 2}, {0, 1}, {1, 1}});
}

RectilinearPolygon z_shape() {
  return normalize(
      {{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {1, 2}, {1, 1}, {0, 1}});
}

RectilinearPolygon plus_shape() {
  return normalize({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2},
                    {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}});
}

RectilinearPolygon staircase() {
  return normalize({{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 2},
                    {4, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}, {0, 1}});
}

RectilinearPolygon bent_gate14() {
  return normalize({{0, 0}, {8, 0}, {8, 3}, {10, 3}, {10, 0}, {12, 0}, {12, 7},
                    {6, 7}, {6, 5}, {7, 5}, {7, 4}, {5, 4}, {5, 7}, {0, 7}});
}

RectilinearPolygon gallery52() {
  return normalize({{0, 20},  {5, 20},  {5, 19},  {3, 19},  {3, 12},  {5, 12},
                    {5, 10},  {6, 10},  {6, 3},   {7, 3},   {7, 7},   {10, 7},
                    {10, 9},  {9, 9},   {9, 10},  {11, 10}, {11, 3},  {12, 3},
                    {12, 0},  {15, 0},  {15, 2},  {16, 2},  {16, 1},  {17, 1},
                    {17, 8},  {16, 8},  {16, 10}, {17, 10}, {17, 12}, {20, 12},
                    {20, 15}, {16, 15}, {16, 14}, {15, 14}, {15, 17}, {16, 17},
                    {16, 23}, {15, 23}, {15, 24}, {14, 24}, {14, 18}, {9, 18},
                    {9, 15},  {7, 15},  {7, 16},  {8, 16},  {8, 18},  {7, 18},
                    {7, 22},  {5, 22},  {5, 21},  {0, 21}});
}

}  // namespace fixtures

}  // namespace polypart
