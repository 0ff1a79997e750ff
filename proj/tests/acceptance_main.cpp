// Acceptance suite: runs every shipping criterion and prints one PASS/FAIL
// line per criterion. Exits non-zero if any line fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polypart/cut_tree.hpp"
#include "polypart/guards.hpp"
#include "polypart/io.hpp"
#include "polypart/oracle.hpp"
#include "polypart/partition.hpp"
#include "polypart/polygen.hpp"

using namespace polypart;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Suite {
  std::vector<RectilinearPolygon> polygons;
  std::vector<PartitionResult> results;
};

}  // namespace

int main() {
  bool all_ok = true;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::printf("%s  %-24s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) all_ok = false;
  };

  // ------------------------------------------------------------------
  // Criterion 1: bound reproduction over >= 1000 random polyominoes.
  Suite suite;
  EngineStats stats;
  std::map<std::string, int> families;
  {
    const auto t0 = clock_type::now();
    int violations = 0, produced = 0;
    for (int n = 10; n <= 60; n += 2) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RectilinearPolygon p;
        try {
          p = generate(n, seed);
        } catch (const error&) {
          continue;
        }
        try {
          PartitionResult res = partition(p, &stats);
          const PartitionReport rep = verify_partition(p, res.pieces);
          if (!rep.ok() || res.count > bound(p.n())) ++violations;
          for (const AppliedCut& ac : res.cuts_applied)
            families[ac.case_label.substr(0, ac.case_label.find('/'))]++;
          suite.polygons.push_back(std::move(p));
          suite.results.push_back(std::move(res));
          ++produced;
        } catch (const std::exception&) {
          ++violations;
        }
      }
    }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d polygons, %d violations, %.2fs (expected < 10s)",
                  produced, violations, dt);
    report("bound-reproduction", produced >= 1000 && violations == 0 && dt < 10.0,
           buf);
  }

  // Case coverage across the suite and the no-fallback health check.
  {
    const bool covered = families.count("path") && families.count("corridor") &&
                         families.count("pocket") && families.count("twisted");
    std::string detail;
    for (const auto& [f, c] : families)
      detail += f + "=" + std::to_string(c) + " ";
    report("case-coverage", covered, detail);
    report("no-fallback-scans", stats.fallback_scans == 0,
           "fallback scans: " + std::to_string(stats.fallback_scans));
  }

  // ------------------------------------------------------------------
  // Criterion 2: the 14-vertex gate needs a bent cut; straight cuts fail.
  {
    const RectilinearPolygon gate = fixtures::bent_gate14();
    bool straight_small = false, bent88 = false;
    for (const LabeledCut& lc : enumerate_admissible_cuts(gate)) {
      if (lc.cut.polyline.size() == 2 && lc.n1() <= 8 && lc.n2() <= 8)
        straight_small = true;
      if (lc.cut.polyline.size() == 3 && lc.n1() == 8 && lc.n2() == 8)
        bent88 = true;
    }
    bool ok = !straight_small && bent88;
    std::string detail = "no straight 8|8 split, bent split exists";
    try {
      const PartitionResult res = partition(gate);
      ok = ok && res.count == 2 && res.cuts_applied.size() == 1 &&
           res.cuts_applied[0].cut.cut.kind == CutKind::l_cut &&
           res.pieces[0].n() == 8 && res.pieces[1].n() == 8;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report("bent-cut-necessity", ok, detail);
  }

  // ------------------------------------------------------------------
  // Criterion 3: the 52-vertex gallery stays within its budget of 10.
  {
    bool ok = false;
    std::string detail;
    try {
      const RectilinearPolygon g = fixtures::gallery52();
      const PartitionResult res = partition(g);
      const PartitionReport rep = verify_partition(g, res.pieces);
      ok = rep.ok() && res.count <= 10;
      detail = "achieved " + std::to_string(res.count) + " pieces (budget 10)";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report("gallery-52", ok, detail);
  }

  // ------------------------------------------------------------------
  // Criterion 4: the residue table is sound.
  {
    const Lemma6Report rep = verify_lemma6_table();
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "%lld entries, %lld unsound, guard needed: %s", rep.checked,
                  rep.unsound, rep.exclusion_needed ? "yes" : "no");
    report("residue-table", rep.unsound == 0 && rep.exclusion_needed, buf);
  }

  // ------------------------------------------------------------------
  // Criterion 5: the vertex-count identity in both tree orientations.
  {
    long long bad = 0, checked = 0;
    for (const RectilinearPolygon& p : suite.polygons) {
      for (bool horizontal : {true, false}) {
        const CutTree t = build_cut_tree(p, horizontal);
        int tsum = 0;
        for (const TreeEdge& e : t.edges) tsum += e.t;
        if (p.n() != 4 * static_cast<int>(t.nodes.size()) + tsum) ++bad;
        ++checked;
      }
    }
    report("tree-identity", bad == 0,
           std::to_string(checked) + " trees, " + std::to_string(bad) +
               " identity violations");
  }

  // ------------------------------------------------------------------
  // Criterion 6: the engine's cut appears in the oracle's enumeration and
  // independently satisfies the budget inequality.
  {
    long long bad = 0, checked = 0;
    for (const RectilinearPolygon& p : suite.polygons) {
      if (p.n() <= 8) continue;
      const GoodCut gc = find_good_cut(p);
      bool found = false;
      for (const LabeledCut& lc : enumerate_admissible_cuts(p)) {
        if (lc.cut.polyline == gc.cut.cut.polyline) {
          found = oracle_split_within_budget(p.n(), lc.n1(), lc.n2());
          break;
        }
      }
      if (!found) ++bad;
      ++checked;
    }
    report("oracle-cross-check", bad == 0,
           std::to_string(checked) + " polygons, " + std::to_string(bad) +
               " disagreements");
  }

  // ------------------------------------------------------------------
  // Criterion 7: a verified patrol per piece, pairwise non-crossing.
  {
    long long pieces = 0, bad_cover = 0, crossings = 0;
    const auto t0 = clock_type::now();
    for (const PartitionResult& res : suite.results) {
      std::vector<Patrol> patrols;
      for (size_t i = 0; i < res.pieces.size(); ++i) {
        try {
          Patrol pat = patrol_for_piece(res.pieces[i], static_cast<int>(i));
          if (!coverage_check(res.pieces[i], pat)) ++bad_cover;
          patrols.push_back(pat);
        } catch (const std::exception&) {
          ++bad_cover;
        }
        ++pieces;
      }
      if (!patrols_noncrossing(patrols)) ++crossings;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%lld pieces, %lld coverage failures, %lld crossing "
                  "galleries, %.2fs",
                  pieces, bad_cover, crossings, seconds_since(t0));
    report("patrols", bad_cover == 0 && crossings == 0, buf);
  }

  // ------------------------------------------------------------------
  // Criterion 8: byte-identical JSON across repeated runs.
  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 10 && ok; ++seed) {
      const RectilinearPolygon p = generate(30 + 2 * static_cast<int>(seed), seed);
      const PartitionResult r1 = partition(p);
      const PartitionResult r2 = partition(p);
      std::vector<Patrol> g1, g2;
      for (size_t i = 0; i < r1.pieces.size(); ++i)
        g1.push_back(patrol_for_piece(r1.pieces[i], static_cast<int>(i)));
      for (size_t i = 0; i < r2.pieces.size(); ++i)
        g2.push_back(patrol_for_piece(r2.pieces[i], static_cast<int>(i)));
      ok = result_to_json(p, r1, &g1) == result_to_json(p, r2, &g2);
    }
    report("determinism", ok, "repeated runs emit identical JSON");
  }

  // ------------------------------------------------------------------
  // Soft check: wall clock grows no worse than quadratically across the
  // doubling steps 20 -> 40 and 60 -> 120.
  {
    auto time_for = [](int n) {
      const auto t0 = clock_type::now();
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RectilinearPolygon p;
        try {
          p = generate(n, seed + 100);
        } catch (const error&) {
          continue;
        }
        partition(p);
      }
      return seconds_since(t0);
    };
    const double t20 = time_for(20), t40 = time_for(40);
    const double t60 = time_for(60), t120 = time_for(120);
    const double floor_s = 0.02;
    const double r1 = (t40 + floor_s) / (t20 + floor_s);
    const double r2 = (t120 + floor_s) / (t60 + floor_s);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "t20=%.3fs t40=%.3fs t60=%.3fs t120=%.3fs ratios %.1f, %.1f "
                  "(quadratic doubling = 4)",
                  t20, t40, t60, t120, r1, r2);
    report("scaling-soft-check", r1 < 16.0 && r2 < 16.0, buf);
  }

  std::printf("%s\n", all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
