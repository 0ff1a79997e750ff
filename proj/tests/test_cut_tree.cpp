#include "doctest.h"

#include "polypart/cut_tree.hpp"
#include "polypart/polygen.hpp"

using namespace polypart;

namespace {

RectilinearPolygon poly(std::vector<Point> pts) { return normalize(std::move(pts)); }

RectilinearPolygon l_shape() {
  return poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

RectilinearPolygon plus_shape() {
  return poly({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2},
               {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}});
}

// T: wide bar on top of a narrower stem.
RectilinearPolygon t_shape() {
  return poly({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {0, 2}, {0, 1}, {1, 1}});
}

int claim11_sum(const CutTree& t) {
  int s = 0;
  for (const auto& e : t.edges) s += e.t;
  return 4 * static_cast<int>(t.nodes.size()) + s;
}

}  // namespace

TEST_CASE("cut tree of a rectangle") {
  auto t = build_cut_tree(poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}}), true);
  CHECK(t.nodes.size() == 1);
  CHECK(t.edges.empty());
  CHECK(claim11_sum(t) == 4);
}

TEST_CASE("cut tree of the L-shape") {
  auto t = build_cut_tree(l_shape(), true);
  REQUIRE(t.nodes.size() == 2);
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0].t == -2);
  CHECK(claim11_sum(t) == 6);
  CHECK(t.is_path());
}

TEST_CASE("cut tree of the plus shape") {
  auto p = plus_shape();
  auto t = build_cut_tree(p, true);
  REQUIRE(t.nodes.size() == 3);
  REQUIRE(t.edges.size() == 2);
  CHECK(t.edges[0].t == 0);
  CHECK(t.edges[1].t == 0);
  CHECK(claim11_sum(t) == 12);

  auto pockets = find_pockets(t);
  CHECK(pockets.size() == 2);  // both arms
  CHECK(find_corridors(t).empty());

  auto tv = build_cut_tree(p, false);
  CHECK(claim11_sum(tv) == 12);
  CHECK(tv.nodes.size() == 3);
}

TEST_CASE("t_value of stacked rows is -4") {
  RectNode a{{0, 0}, {4, 1}, 0};
  RectNode b{{0, 1}, {4, 2}, 1};
  CHECK(t_value(a, b) == -4);
  RectNode c{{9, 9}, {10, 10}, 2};
  CHECK_THROWS_AS(t_value(a, c), error);
}

TEST_CASE("T-shape pockets") {
  auto t = build_cut_tree(t_shape(), true);
  REQUIRE(t.nodes.size() == 2);
  // The stem's full top side is the two-cut: it is a pocket.
  auto pockets = find_pockets(t);
  REQUIRE(pockets.size() == 1);
  const RectNode& stem = t.nodes[pockets[0]];
  CHECK(stem.lo == Point{1, 0});
  CHECK(stem.hi == Point{2, 1});
}

namespace {

// Wide bar over a narrower middle rectangle with two feet. The middle's
// entire top side is a two-cut against the overhanging bar.
RectilinearPolygon corridor_shape() {
  return poly({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 0}, {4, 0}, {4, 2},
               {5, 2}, {5, 3}, {0, 3}, {0, 2}, {1, 2}});
}

}  // namespace

TEST_CASE("corridor detection") {
  auto q = corridor_shape();
  auto t = build_cut_tree(q, true);
  auto corridors = find_corridors(t);
  REQUIRE(corridors.size() == 1);
  const RectNode& mid = t.nodes[corridors[0]];
  CHECK(mid.lo == Point{1, 1});
  CHECK(mid.hi == Point{4, 2});
  CHECK(find_pockets(t).empty());

  // A staircase has no corridors at all.
  auto stairs = poly({{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 2},
                      {4, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}, {0, 1}});
  CHECK(find_corridors(build_cut_tree(stairs, true)).empty());
}

TEST_CASE("corner adjacency") {
  // Lower rectangle [0,3]x[0,1], upper rectangle [0,2]x[1,2] flush left:
  // upper sits at the lower's TL corner via a one-cut.
  auto p = poly({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 2}, {0, 2}});
  auto t = build_cut_tree(p, true);
  REQUIRE(t.nodes.size() == 2);
  const int lower = t.nodes[0].lo.y == 0 ? 0 : 1;
  auto adj = corner_adjacency(t, lower, Corner::TL);
  REQUIRE(adj.edge_index.has_value());
  REQUIRE(adj.region.has_value());
  CHECK(adj.region->n() == 4);
  auto none = corner_adjacency(t, lower, Corner::BL);
  CHECK(!none.edge_index.has_value());

  // The adjacency region together with its complement reproduces the split.
  const TreeEdge& e = t.edges[*adj.edge_index];
  auto res = split(p, e.cut);
  CHECK((res.part1 == *adj.region || res.part2 == *adj.region));
}

TEST_CASE("full-side two-cut is no corner adjacency") {
  auto q = corridor_shape();
  auto t = build_cut_tree(q, true);
  auto corridors = find_corridors(t);
  REQUIRE(corridors.size() == 1);
  const int mid = corridors[0];
  // The wide bar spans the middle's whole top: neither TL nor TR adjacency.
  CHECK(!corner_adjacency(t, mid, Corner::TL).edge_index.has_value());
  CHECK(!corner_adjacency(t, mid, Corner::TR).edge_index.has_value());
  // The feet below are corner-adjacent.
  CHECK(corner_adjacency(t, mid, Corner::BL).edge_index.has_value());
  CHECK(corner_adjacency(t, mid, Corner::BR).edge_index.has_value());
}

TEST_CASE("vertical tree mirrors the horizontal machinery") {
  auto l = l_shape();
  auto tv = build_cut_tree(l, false);
  REQUIRE(tv.nodes.size() == 2);
  REQUIRE(tv.edges.size() == 1);
  CHECK(tv.edges[0].t == -2);
  CHECK(tv.edges[0].cut.a().x == tv.edges[0].cut.b().x);  // vertical chord
}

TEST_CASE("tree structure properties on random polygons") {
  for (int n : {12, 20, 28}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      RectilinearPolygon p;
      try {
        p = polypart::generate(n, seed);
      } catch (const error&) {
        continue;
      }
      for (bool horizontal : {true, false}) {
        auto t = build_cut_tree(p, horizontal);
        CHECK(t.edges.size() + 1 == t.nodes.size());
        CHECK(claim11_sum(t) == p.n());
        wide_t rect_area = 0;
        for (const RectNode& r : t.nodes)
          rect_area +=
              wide_t(r.hi.x - r.lo.x) * wide_t(r.hi.y - r.lo.y) * 2;
        CHECK(rect_area == area2(p));
        auto pockets = find_pockets(t);
        auto corridors = find_corridors(t);
        for (int a : pockets)
          for (int b : corridors) CHECK(a != b);
      }
    }
  }
}
