#include "doctest.h"

#include "polypart/guards.hpp"
#include "polypart/partition.hpp"
#include "polypart/polygen.hpp"

using namespace polypart;

TEST_CASE("kernel of simple shapes") {
  auto rect = fixtures::rectangle();
  auto k = visibility_kernel(rect);
  CHECK(!k.empty());
  CHECK(k.lo == Point{0, 0});
  CHECK(k.hi == Point{6, 4});  // doubled

  auto l = fixtures::l_shape();
  auto kl = visibility_kernel(l);
  CHECK(!kl.empty());  // one reflex vertex: star-shaped

  auto u = fixtures::u_shape();
  CHECK(visibility_kernel(u).empty());
}

TEST_CASE("stationary patrols for star-shaped pieces") {
  auto rect = fixtures::rectangle();
  auto pr = patrol_for_piece(rect, 0);
  CHECK(pr.stationary());
  CHECK(pr.a == Point{3, 2});  // centre, doubled
  CHECK(coverage_check(rect, pr));

  auto l = fixtures::l_shape();
  auto pl = patrol_for_piece(l, 1);
  CHECK(pl.stationary());
  CHECK(coverage_check(l, pl));

  auto t = fixtures::t_shape();
  auto pt = patrol_for_piece(t, 2);
  CHECK(pt.stationary());
  CHECK(coverage_check(t, pt));
}

TEST_CASE("the U-shape needs a walking guard") {
  auto u = fixtures::u_shape();
  auto p = patrol_for_piece(u, 0);
  CHECK(!p.stationary());
  CHECK(coverage_check(u, p));
  // Each arm tip sees the nearer endpoint (doubled coordinates).
  auto u2 = normalize({{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2},
                       {2, 2}, {2, 4}, {0, 4}});
  CHECK((sees(u2, {0, 4}, p.a) || sees(u2, {0, 4}, p.b)));
  CHECK((sees(u2, {6, 4}, p.a) || sees(u2, {6, 4}, p.b)));
}

TEST_CASE("coverage_check rejects a one-arm guard on the U") {
  auto u = fixtures::u_shape();
  Patrol one_arm{0, {1, 3}, {1, 3}};  // (0.5, 1.5), inside the left arm
  CHECK(!coverage_check(u, one_arm));
  Patrol base{0, {1, 1}, {5, 1}};
  CHECK(coverage_check(u, base));
}

TEST_CASE("patrols_noncrossing") {
  // Disjoint strictly-interior segments.
  CHECK(patrols_noncrossing({{0, {1, 1}, {3, 1}}, {0, {1, 3}, {3, 3}}}));
  // Collinear overlap.
  CHECK(!patrols_noncrossing({{0, {0, 0}, {4, 0}}, {1, {2, 0}, {6, 0}}}));
  // Touching at endpoints is allowed.
  CHECK(patrols_noncrossing({{0, {0, 0}, {4, 0}}, {1, {4, 0}, {8, 0}}}));
  // Perpendicular proper crossing.
  CHECK(!patrols_noncrossing({{0, {0, 0}, {4, 0}}, {1, {2, -2}, {2, 2}}}));
  // Endpoint interior to the other segment.
  CHECK(!patrols_noncrossing({{0, {0, 0}, {4, 0}}, {1, {2, 0}, {2, 5}}}));
  // Single patrol.
  CHECK(patrols_noncrossing({{0, {0, 0}, {4, 0}}}));
  // Stationary guards sharing a spot with a segment endpoint.
  CHECK(patrols_noncrossing({{0, {3, 3}, {3, 3}}, {1, {3, 3}, {9, 3}}}));
}

TEST_CASE("every partition piece gets a verified patrol, pairwise clean") {
  for (int n : {14, 22, 30, 38}) {
    for (int seed = 0; seed < 4; ++seed) {
      RectilinearPolygon p;
      try {
        p = generate(n, seed);
      } catch (const error&) {
        continue;
      }
      auto res = partition(p);
      std::vector<Patrol> patrols;
      for (size_t i = 0; i < res.pieces.size(); ++i) {
        auto pat = patrol_for_piece(res.pieces[i], static_cast<int>(i));
        CHECK(coverage_check(res.pieces[i], pat));
        CHECK(contains_half(res.pieces[i], pat.a.x, pat.a.y));
        CHECK(contains_half(res.pieces[i], pat.b.x, pat.b.y));
        patrols.push_back(pat);
      }
      CHECK(patrols_noncrossing(patrols));
    }
  }
}

TEST_CASE("stationary patrols really sit in the kernel") {
  for (int seed = 0; seed < 8; ++seed) {
    RectilinearPolygon p;
    try {
      p = generate(26, seed);
    } catch (const error&) {
      continue;
    }
    for (const RectilinearPolygon& piece : partition(p).pieces) {
      auto pat = patrol_for_piece(piece);
      if (!pat.stationary()) continue;
      auto k = visibility_kernel(piece);
      REQUIRE(!k.empty());
      CHECK(k.lo.x <= pat.a.x);
      CHECK(pat.a.x <= k.hi.x);
      CHECK(k.lo.y <= pat.a.y);
      CHECK(pat.a.y <= k.hi.y);
      CHECK(coverage_check(piece, Patrol{0, pat.a, pat.a}));
    }
  }
}
