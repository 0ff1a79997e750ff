#include "polypart/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polypart {

std::vector<LabeledCut> enumerate_admissible_cuts(const RectilinearPolygon& p) {
  std::set<std::vector<Point>> seen;
  std::vector<LabeledCut> out;
  auto consider = [&](std::vector<Point> pts) {
    auto cut = try_make_cut(p, std::move(pts));
    if (!cut) return;
    if (!seen.insert(cut->polyline).second) return;
    out.push_back(label_cut(p, *cut));
  };

  const std::vector<Point> reflex = reflex_vertices(p);
  for (const Point& v : reflex) {
    for (bool horizontal : {true, false}) {
      const Chord ch = chord_from(p, v, horizontal);
      consider({ch.from, ch.to});
    }
  }
  for (size_t i = 0; i < reflex.size(); ++i) {
    for (size_t j = 0; j < reflex.size(); ++j) {
      if (i == j) continue;
      const Point& u = reflex[i];
      const Point& v = reflex[j];
      if (u.x == v.x || u.y == v.y) continue;
      consider({u, Point{u.x, v.y}, v});
      consider({u, Point{v.x, u.y}, v});
    }
  }
  std::sort(out.begin(), out.end(), [](const LabeledCut& a, const LabeledCut& b) {
    return a.cut.polyline < b.cut.polyline;
  });
  return out;
}

namespace {

struct Grid {
  std::vector<coord_t> xs, ys;
};

Grid make_grid(const RectilinearPolygon& p,
               const std::vector<RectilinearPolygon>& pieces) {
  Grid g;
  auto take = [&](const RectilinearPolygon& q) {
    for (const Point& v : q.vertices) {
      g.xs.push_back(v.x);
      g.ys.push_back(v.y);
    }
  };
  take(p);
  for (const auto& q : pieces) take(q);
  std::sort(g.xs.begin(), g.xs.end());
  g.xs.erase(std::unique(g.xs.begin(), g.xs.end()), g.xs.end());
  std::sort(g.ys.begin(), g.ys.end());
  g.ys.erase(std::unique(g.ys.begin(), g.ys.end()), g.ys.end());
  return g;
}

}  // namespace

PartitionReport verify_partition(const RectilinearPolygon& p,
                                 const std::vector<RectilinearPolygon>& pieces) {
  PartitionReport rep;

  rep.pieces_valid = true;
  rep.pieces_small = true;
  for (const auto& piece : pieces) {
    try {
      validate(piece);
    } catch (const error&) {
      rep.pieces_valid = false;
    }
    if (piece.n() > 8) rep.pieces_small = false;
  }

  try {
    rep.count_within_bound =
        static_cast<int>(pieces.size()) <= (3 * p.n() + 4) / 16;
  } catch (...) {
    rep.count_within_bound = false;
  }

  const Grid g = make_grid(p, pieces);
  rep.tiles_exactly = true;
  for (size_t i = 0; i + 1 < g.xs.size() && rep.tiles_exactly; ++i) {
    for (size_t j = 0; j + 1 < g.ys.size(); ++j) {
      const coord_t cx = g.xs[i] + g.xs[i + 1];
      const coord_t cy = g.ys[j] + g.ys[j + 1];
      int cover = 0;
      for (const auto& piece : pieces) cover += contains_half(piece, cx, cy);
      const bool in_host = contains_half(p, cx, cy);
      if (in_host && cover == 0) {
        rep.tiles_exactly = false;
        rep.uncovered_cell = Point{g.xs[i], g.ys[j]};
        break;
      }
      if (cover > 1 || (!in_host && cover > 0)) {
        rep.tiles_exactly = false;
        rep.overlap_cell = Point{g.xs[i], g.ys[j]};
        break;
      }
    }
  }

  std::ostringstream os;
  os << (rep.tiles_exactly ? "tiling ok" : "tiling broken")
     << (rep.pieces_valid ? "" : "; invalid piece")
     << (rep.pieces_small ? "" : "; oversized piece")
     << (rep.count_within_bound ? "" : "; budget exceeded");
  rep.message = os.str();
  return rep;
}

bool oracle_split_within_budget(int n, int n1, int n2) {
  auto budget = [](int k) { return (3 * k + 4) / 16; };
  if (n1 + n2 != n && n1 + n2 != n + 2) return false;
  return budget(n1) + budget(n2) <= budget(n);
}

bool good_cut_exists_bruteforce(const RectilinearPolygon& p) {
  for (const LabeledCut& lc : enumerate_admissible_cuts(p)) {
    if (oracle_split_within_budget(p.n(), lc.n1(), lc.n2())) return true;
  }
  return false;
}

Lemma6Report verify_lemma6_table() {
  Lemma6Report rep;
  for (int n = 4; n <= 260; n += 2) {
    for (int n1 = 4; n1 <= n + 2 - 4; n1 += 2) {
      // Same-size split (a straight chord between two reflex vertices).
      if (n - n1 >= 4 && lemma_tech(n, n1, CutKind::two_cut)) {
        ++rep.checked;
        if (!oracle_split_within_budget(n, n1, n - n1)) {
          ++rep.unsound;
          if (rep.first_unsound.empty()) {
            std::ostringstream os;
            os << "two-cut n=" << n << " n1=" << n1;
            rep.first_unsound = os.str();
          }
        }
      }
      // Growing split (one-cut or bent cut).
      if (n + 2 - n1 >= 4 && lemma_tech(n, n1, CutKind::one_cut)) {
        ++rep.checked;
        if (!oracle_split_within_budget(n, n1, n + 2 - n1)) {
          ++rep.unsound;
          if (rep.first_unsound.empty()) {
            std::ostringstream os;
            os << "one-cut n=" << n << " n1=" << n1;
            rep.first_unsound = os.str();
          }
        }
      }
    }
  }

  // The clause admitting residues 10/12 must keep its n % 16 != 14 guard:
  // for some n in that class the inequality genuinely fails.
  for (int n = 14; n <= 260 && !rep.exclusion_needed; n += 16) {
    for (int n1 = 10; n1 <= n - 4; n1 += 16) {
      if (n - n1 >= 4 && !oracle_split_within_budget(n, n1, n - n1))
        rep.exclusion_needed = true;
    }
    for (int n1 = 12; n1 <= n + 2 - 4; n1 += 16) {
      if (n + 2 - n1 >= 4 && !oracle_split_within_budget(n, n1, n + 2 - n1))
        rep.exclusion_needed = true;
    }
  }
  return rep;
}

}  // namespace polypart
