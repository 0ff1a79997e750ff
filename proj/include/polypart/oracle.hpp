#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypart/partition.hpp"

namespace polypart {

/// Every admissible cut of p: maximal straight chords through reflex
/// vertices plus every interior two-segment polyline between a pair of
/// reflex vertices. Each entry has passed split(). Deterministic order.
std::vector<LabeledCut> enumerate_admissible_cuts(const RectilinearPolygon& p);

struct PartitionReport {
  bool tiles_exactly = false;
  bool pieces_valid = false;
  bool pieces_small = false;        // every piece has at most 8 vertices
  bool count_within_bound = false;
  std::optional<Point> uncovered_cell;  // lower-left corner of a witness cell
  std::optional<Point> overlap_cell;
  std::string message;

  bool ok() const {
    return tiles_exactly && pieces_valid && pieces_small && count_within_bound;
  }
};

/// Cell-exact verification that `pieces` tile p with disjoint interiors,
/// are valid polyominoes of at most 8 vertices, and respect the budget.
PartitionReport verify_partition(const RectilinearPolygon& p,
                                 const std::vector<RectilinearPolygon>& pieces);

/// Does some enumerated admissible cut keep the piece budget? Checked with
/// the oracle's own floor arithmetic.
bool good_cut_exists_bruteforce(const RectilinearPolygon& p);

/// True iff the sizes split the budget: bound(n1)+bound(n2) <= bound(n),
/// computed independently of the engine's helpers.
bool oracle_split_within_budget(int n, int n1, int n2);

struct Lemma6Report {
  long long checked = 0;
  long long unsound = 0;
  std::string first_unsound;
  bool exclusion_needed = false;  // the residue table needs its mod-16 guard
};

/// Exhaustive scan of the residue table behind lemma_tech over all sizes
/// n in [4, 260]: every claimed-good (n, n1, kind) must satisfy the budget
/// inequality. Also confirms that dropping the guard in clause (c) would
/// admit unsound entries.
Lemma6Report verify_lemma6_table();

}  // namespace polypart
