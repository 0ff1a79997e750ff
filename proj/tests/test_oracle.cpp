#include "doctest.h"

#include "polypart/oracle.hpp"
#include "polypart/polygen.hpp"

using namespace polypart;

TEST_CASE("enumeration: rectangle has no admissible cut") {
  CHECK(enumerate_admissible_cuts(fixtures::rectangle()).empty());
}

TEST_CASE("enumeration: the L-shape has exactly its two chords") {
  auto cuts = enumerate_admissible_cuts(fixtures::l_shape());
  REQUIRE(cuts.size() == 2);
  for (const LabeledCut& lc : cuts) {
    CHECK(lc.cut.kind == CutKind::one_cut);
    CHECK(lc.cut.polyline.size() == 2);
  }
}

TEST_CASE("enumeration: gate fixture needs a bent cut") {
  auto p = fixtures::bent_gate14();
  bool straight_small = false, bent_88 = false;
  for (const LabeledCut& lc : enumerate_admissible_cuts(p)) {
    if (lc.cut.polyline.size() == 2 && lc.n1() <= 8 && lc.n2() <= 8)
      straight_small = true;
    if (lc.cut.polyline.size() == 3 && lc.n1() == 8 && lc.n2() == 8)
      bent_88 = true;
  }
  CHECK(!straight_small);
  CHECK(bent_88);
}

TEST_CASE("verify_partition: identity and witnesses") {
  auto u = fixtures::u_shape();
  auto ok = verify_partition(u, {u});
  CHECK(ok.ok());

  // Missing piece leaves an uncovered cell.
  auto cut = make_cut(u, {{1, 0}, {1, 1}});
  auto sr = split(u, cut);
  auto missing = verify_partition(u, {sr.part1});
  CHECK(!missing.tiles_exactly);
  CHECK(missing.uncovered_cell.has_value());

  // Duplicated piece overlaps.
  auto dup = verify_partition(u, {sr.part1, sr.part2, sr.part2});
  CHECK(!dup.tiles_exactly);
  CHECK(dup.overlap_cell.has_value());

  // Oversized piece flagged on a 10-vertex polygon presented as one piece.
  auto big = generate(10, 1);
  auto rep = verify_partition(big, {big});
  CHECK(!rep.pieces_small);
}

TEST_CASE("verify_partition over partition output") {
  for (int seed = 0; seed < 5; ++seed) {
    auto p = generate(30, seed);
    auto res = partition(p);
    CHECK(verify_partition(p, res.pieces).ok());
  }
}

TEST_CASE("residue table is sound and its guard is necessary") {
  auto rep = verify_lemma6_table();
  CHECK(rep.checked > 1000);
  CHECK(rep.unsound == 0);
  CHECK(rep.exclusion_needed);
}

TEST_CASE("engine cut is found by the enumeration and is good") {
  for (int n : {12, 18, 26, 34}) {
    for (int seed = 0; seed < 4; ++seed) {
      RectilinearPolygon p;
      try {
        p = generate(n, seed);
      } catch (const error&) {
        continue;
      }
      CHECK(good_cut_exists_bruteforce(p));
      auto gc = find_good_cut(p);
      bool found = false;
      for (const LabeledCut& lc : enumerate_admissible_cuts(p)) {
        if (lc.cut.polyline == gc.cut.cut.polyline) {
          found = true;
          CHECK(oracle_split_within_budget(p.n(), lc.n1(), lc.n2()));
        }
      }
      CHECK(found);
    }
  }
}
