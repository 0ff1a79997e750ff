#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polypart/cut_tree.hpp"
#include "polypart/geometry.hpp"

namespace polypart {

/// Guaranteed piece budget for an n-vertex polyomino: floor((3n+4)/16).
/// Throws odd_or_too_small unless n is even and >= 4.
int bound(int n);

/// True iff cutting an n-vertex host into parts of n1 and n2 vertices keeps
/// the total budget: bound(n1) + bound(n2) <= bound(n). Sizes must be
/// admissible (n1 + n2 == n or n + 2, both even and >= 4).
bool is_induction_good(int n, int n1, int n2);

/// Residue shortcut: sufficient congruence conditions on (n, n1) under
/// which the split is budget-preserving. `kind` fixes the size arithmetic
/// (two_cut: n1+n2 == n, otherwise n1+n2 == n+2).
bool lemma_tech(int n, int n1, CutKind kind);

/// A cut of a specific host together with the two labeled parts,
/// part1/part2 in a caller-chosen order.
struct LabeledCut {
  Cut cut;
  RectilinearPolygon part1;
  RectilinearPolygon part2;
  int host_n = 0;

  int n1() const { return part1.n(); }
  int n2() const { return part2.n(); }
  bool is_two_cut() const { return n1() + n2() == host_n; }
};

/// Splits and labels: part1 is the split's canonical part1.
LabeledCut label_cut(const RectilinearPolygon& host, const Cut& cut);
/// Splits and labels: part1 is the part containing the half-lattice probe
/// point (hx/2, hy/2).
LabeledCut label_cut_probe(const RectilinearPolygon& host, const Cut& cut,
                           coord_t hx, coord_t hy);
LabeledCut flipped(LabeledCut lc);

/// Up to three nested cuts of one host whose first-part sizes (plus a +2
/// shadow for every two-cut) cover three consecutive even residues mod 16.
/// Such a family always contains a budget-preserving cut.
struct CutSystem {
  RectilinearPolygon host;
  std::vector<LabeledCut> cuts;  // 2 or 3, part1 strictly nested ascending
};

/// Validates nesting (throws not_nested) and the residue condition
/// (returns nullopt when it fails).
std::optional<CutSystem> check_cut_system(const RectilinearPolygon& host,
                                          std::vector<LabeledCut> cuts);

/// Anchor zone for extending a system: first part of the innermost cut and
/// second part of the outermost one, both minus their cut polylines.
bool kernel_contains(const CutSystem& sys, const Point& p);

/// A member cut with is_induction_good == true. An accepted system always
/// has one; failure to find it is a theorem violation.
LabeledCut extract_good_cut(const CutSystem& sys);

/// Given host = region + U (glued along one run) and an admissible split
/// (u1, u2) of U with `anchor` in u1, returns the admissible split
/// (u1 + region, u2) of the host. Throws anchor_in_wrong_part.
LabeledCut extend_partition(const RectilinearPolygon& host,
                            const RectilinearPolygon& region,
                            const RectilinearPolygon& u1,
                            const RectilinearPolygon& u2, const Point& anchor);

/// Lifts a whole system of U to host = region + U. The anchor must lie in
/// the system's kernel (throws anchor_not_in_kernel); the region joins the
/// anchor's side of every cut and the residue witness survives.
CutSystem extend_cut_system(const RectilinearPolygon& host,
                            const RectilinearPolygon& region,
                            const CutSystem& sys, const Point& anchor);

struct GoodCut {
  LabeledCut cut;
  std::string case_label;
};

/// Two vertical cuts through a high-degree rectangle with occupied BL, BR
/// and TR corners: either they assemble into an accepted system of the
/// host, or they are returned as plain candidates.
struct OppositeCornerResult {
  std::optional<CutSystem> system;
  std::vector<LabeledCut> cuts;
};
OppositeCornerResult opposite_corner_cuts(const RectilinearPolygon& host,
                                          const CutTree& tree, int node);

struct EngineStats {
  int fallback_scans = 0;  // times a case had to fall back to a full scan
};

/// One budget-preserving cut of p (n(p) > 8), found by the constructive
/// case analysis: path-shaped tree, corridor, pocket, or twisted tree. The
/// label records the branch taken. Throws theorem_violation if no case
/// yields a cut.
GoodCut find_good_cut(const RectilinearPolygon& p,
                      EngineStats* stats = nullptr);

struct AppliedCut {
  std::uint64_t host_fingerprint = 0;
  int host_n = 0;
  LabeledCut cut;
  std::string case_label;
};

struct PartitionResult {
  std::vector<RectilinearPolygon> pieces;
  std::vector<AppliedCut> cuts_applied;
  int count = 0;
};

/// Partitions p into at most bound(n) polyominoes of at most 8 vertices
/// each. Deterministic: equal inputs give equal cut traces.
PartitionResult partition(const RectilinearPolygon& p,
                          EngineStats* stats = nullptr);

/// Serializes a polygon into the error-dump format used by
/// theorem_violation payloads.
std::string dump_instance(const RectilinearPolygon& p, const std::string& why);

}  // namespace polypart
