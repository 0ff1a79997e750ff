#pragma once

#include <optional>
#include <vector>

#include "polypart/geometry.hpp"

namespace polypart {

/// Axis-parallel rectangle node of a cut tree.
struct RectNode {
  Point lo;  // lower-left
  Point hi;  // upper-right
  int id = -1;
};

RectilinearPolygon rect_polygon(const RectNode& r);

struct TreeEdge {
  int a = -1;  // node ids; a < b
  int b = -1;
  Cut cut;     // the maximal chord the edge represents
  int t = 0;   // n(Ra u Rb) - 8: 0 for a two-cut, -2 for a one-cut
};

enum class Corner { TL, TR, BL, BR };

struct CornerAdjacency {
  int node = -1;
  Corner corner = Corner::TL;
  std::optional<int> edge_index;                 // into CutTree::edges
  std::optional<RectilinearPolygon> region;      // part containing the neighbor
};

/// Tree of the rectangles obtained by slicing a polyomino along every
/// maximal chord (horizontal or vertical) through a reflex vertex. Edges
/// are those chords; two reflex vertices sharing a chord yield one edge.
struct CutTree {
  RectilinearPolygon host;
  bool horizontal = true;
  std::vector<RectNode> nodes;
  std::vector<TreeEdge> edges;
  std::vector<std::vector<int>> incident;  // node id -> edge indices, x-sorted

  int degree(int node) const { return static_cast<int>(incident[node].size()); }
  int other_end(int edge_index, int node) const {
    const TreeEdge& e = edges[edge_index];
    return e.a == node ? e.b : e.a;
  }
  bool is_path() const;
};

CutTree build_cut_tree(const RectilinearPolygon& p, bool horizontal);

/// n(Ra u Rb) - 8 for two rectangles sharing a boundary run. Throws
/// not_adjacent otherwise. Yields -4 for stacked rows of one rectangle.
int t_value(const RectNode& ra, const RectNode& rb);

/// The neighbor adjacent at a corner of `node`, if any: the neighbor must
/// contain the corner point and either absorb it as a non-vertex of the
/// two-rectangle union or miss the same side's other corner.
CornerAdjacency corner_adjacency(const CutTree& tree, int node, Corner corner);

Point corner_point(const RectNode& r, Corner c);
Corner mirror_corner_lr(Corner c);
Corner mirror_corner_tb(Corner c);

/// Degree-1 nodes whose single incident edge is a two-cut covering the
/// node's entire side.
std::vector<int> find_pockets(const CutTree& tree);
/// Degree->=2 nodes with such an incident edge.
std::vector<int> find_corridors(const CutTree& tree);

/// True when the edge's chord covers one entire side of the node's
/// rectangle.
bool cut_covers_full_side(const CutTree& tree, int edge_index, int node);

/// The part of the host on the far side of `edge_index` seen from `node`
/// (the component containing the neighboring rectangle).
RectilinearPolygon region_across(const CutTree& tree, int edge_index,
                                 int node);

}  // namespace polypart
