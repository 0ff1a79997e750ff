#include "polypart/cut_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polypart {

namespace {

[[noreturn]] void fail(errc c, const std::string& msg) { throw error(c, msg); }

void require(bool cond, const char* what) {
  if (!cond) fail(errc::internal, std::string("cut tree invariant failed: ") + what);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Segment {
  Point a, b;
  bool operator<(const Segment& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

}  // namespace

RectilinearPolygon rect_polygon(const RectNode& r) {
  return normalize({r.lo, {r.hi.x, r.lo.y}, r.hi, {r.lo.x, r.hi.y}});
}

Point corner_point(const RectNode& r, Corner c) {
  switch (c) {
    case Corner::TL: return {r.lo.x, r.hi.y};
    case Corner::TR: return r.hi;
    case Corner::BL: return r.lo;
    case Corner::BR: return {r.hi.x, r.lo.y};
  }
  fail(errc::internal, "bad corner");
}

Corner mirror_corner_lr(Corner c) {
  switch (c) {
    case Corner::TL: return Corner::TR;
    case Corner::TR: return Corner::TL;
    case Corner::BL: return Corner::BR;
    case Corner::BR: return Corner::BL;
  }
  fail(errc::internal, "bad corner");
}

Corner mirror_corner_tb(Corner c) {
  switch (c) {
    case Corner::TL: return Corner::BL;
    case Corner::BL: return Corner::TL;
    case Corner::TR: return Corner::BR;
    case Corner::BR: return Corner::TR;
  }
  fail(errc::internal, "bad corner");
}

bool CutTree::is_path() const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (degree(static_cast<int>(i)) > 2) return false;
  return true;
}

namespace {

CutTree build_horizontal(const RectilinearPolygon& p) {
  CutTree tree;
  tree.host = p;
  tree.horizontal = true;

  // Maximal horizontal chords, one per reflex vertex, merged when shared.
  std::set<Segment> chords;
  for (const Point& v : reflex_vertices(p)) {
    const Chord c = chord_from(p, v, true);
    Point a = c.from, b = c.to;
    if (b < a) std::swap(a, b);
    chords.insert(Segment{a, b});
  }

  std::vector<coord_t> xs, ys;
  for (const Point& v : p.vertices) {
    xs.push_back(v.x);
    ys.push_back(v.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const int nx = static_cast<int>(xs.size()) - 1;
  const int ny = static_cast<int>(ys.size()) - 1;
  auto cell = [&](int i, int j) { return j * nx + i; };

  std::vector<char> inside(static_cast<size_t>(nx) * ny, 0);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      inside[cell(i, j)] = contains_half(p, xs[i] + xs[i + 1], ys[j] + ys[j + 1]);

  auto covered_by_chord = [&](coord_t x1, coord_t x2, coord_t y) {
    for (const Segment& s : chords) {
      if (s.a.y == y && s.a.x <= x1 && x2 <= s.b.x) return true;
    }
    return false;
  };

  UnionFind uf(nx * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!inside[cell(i, j)]) continue;
      if (i + 1 < nx && inside[cell(i + 1, j)]) uf.unite(cell(i, j), cell(i + 1, j));
      if (j + 1 < ny && inside[cell(i, j + 1)] &&
          !covered_by_chord(xs[i], xs[i + 1], ys[j + 1]))
        uf.unite(cell(i, j), cell(i, j + 1));
    }
  }

  // Components -> rectangles.
  std::map<int, RectNode> comp;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!inside[cell(i, j)]) continue;
      const int root = uf.find(cell(i, j));
      auto it = comp.find(root);
      if (it == comp.end()) {
        comp.emplace(root, RectNode{{xs[i], ys[j]}, {xs[i + 1], ys[j + 1]}, -1});
      } else {
        RectNode& r = it->second;
        r.lo.x = std::min(r.lo.x, xs[i]);
        r.lo.y = std::min(r.lo.y, ys[j]);
        r.hi.x = std::max(r.hi.x, xs[i + 1]);
        r.hi.y = std::max(r.hi.y, ys[j + 1]);
      }
    }
  }

  std::vector<std::pair<int, RectNode>> rects(comp.begin(), comp.end());
  std::sort(rects.begin(), rects.end(), [](const auto& u, const auto& v) {
    return std::tie(u.second.lo, u.second.hi) < std::tie(v.second.lo, v.second.hi);
  });
  std::map<int, int> root_to_id;
  for (size_t k = 0; k < rects.size(); ++k) {
    rects[k].second.id = static_cast<int>(k);
    root_to_id[rects[k].first] = static_cast<int>(k);
    tree.nodes.push_back(rects[k].second);
  }

  // Every component must fill its bounding rectangle.
  {
    wide_t cells_area = 0;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j)
        if (inside[cell(i, j)]) {
          const int id = root_to_id[uf.find(cell(i, j))];
          const RectNode& r = tree.nodes[id];
          require(xs[i] >= r.lo.x && xs[i + 1] <= r.hi.x && ys[j] >= r.lo.y &&
                      ys[j + 1] <= r.hi.y,
                  "component inside its bounding box");
          cells_area += wide_t(xs[i + 1] - xs[i]) * wide_t(ys[j + 1] - ys[j]);
        }
    wide_t rect_area = 0;
    for (const RectNode& r : tree.nodes)
      rect_area += wide_t(r.hi.x - r.lo.x) * wide_t(r.hi.y - r.lo.y);
    require(2 * cells_area == area2(p) && rect_area == cells_area,
            "rectangles tile the polygon");
  }

  // Chords -> edges.
  auto grid_index = [](const std::vector<coord_t>& v, coord_t x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  for (const Segment& s : chords) {
    const int jy = grid_index(ys, s.a.y);
    const int i1 = grid_index(xs, s.a.x);
    const int i2 = grid_index(xs, s.b.x);
    int above = -1, below = -1;
    require(jy > 0 && jy < ny, "chord lies on an interior grid line");
    for (int i = i1; i < i2; ++i) {
      require(inside[cell(i, jy)] && inside[cell(i, jy - 1)],
              "chord borders interior cells");
      const int up = root_to_id[uf.find(cell(i, jy))];
      const int dn = root_to_id[uf.find(cell(i, jy - 1))];
      require(above == -1 || above == up, "single rectangle above a chord");
      require(below == -1 || below == dn, "single rectangle below a chord");
      above = up;
      below = dn;
    }
    require(above >= 0 && below >= 0 && above != below, "chord separates nodes");
    Cut cut = make_cut(p, {s.a, s.b});
    TreeEdge e;
    e.a = std::min(above, below);
    e.b = std::max(above, below);
    e.cut = cut;
    e.t = cut.kind == CutKind::two_cut ? 0 : -2;
    require(e.t == t_value(tree.nodes[e.a], tree.nodes[e.b]),
            "t weight matches the glued vertex count");
    tree.edges.push_back(std::move(e));
  }

  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& u, const TreeEdge& v) {
              return std::tie(u.cut.polyline, u.a, u.b) <
                     std::tie(v.cut.polyline, v.a, v.b);
            });

  tree.incident.assign(tree.nodes.size(), {});
  for (size_t k = 0; k < tree.edges.size(); ++k) {
    tree.incident[tree.edges[k].a].push_back(static_cast<int>(k));
    tree.incident[tree.edges[k].b].push_back(static_cast<int>(k));
  }
  for (auto& lst : tree.incident) {
    std::sort(lst.begin(), lst.end(), [&](int u, int v) {
      return std::tie(tree.edges[u].cut.a().x, tree.edges[u].cut.a().y) <
             std::tie(tree.edges[v].cut.a().x, tree.edges[v].cut.a().y);
    });
  }

  // Structural checks: spanning tree + the vertex-count identity
  // n = 4|V| + sum of t.
  require(tree.edges.size() + 1 == tree.nodes.size(), "tree edge count");
  {
    UnionFind cf(static_cast<int>(tree.nodes.size()));
    for (const TreeEdge& e : tree.edges) cf.unite(e.a, e.b);
    for (size_t k = 1; k < tree.nodes.size(); ++k)
      require(cf.find(0) == cf.find(static_cast<int>(k)), "tree connected");
    int tsum = 0;
    for (const TreeEdge& e : tree.edges) tsum += e.t;
    require(p.n() == 4 * static_cast<int>(tree.nodes.size()) + tsum,
            "vertex-count identity");
  }
  return tree;
}

}  // namespace

CutTree build_cut_tree(const RectilinearPolygon& p, bool horizontal) {
  if (horizontal) return build_horizontal(p);

  // Build on the quarter-turned polygon and map everything back.
  const DihedralElement g = DihedralElement::rot90;
  const DihedralElement ginv = inverse_of(g);
  CutTree rot = build_horizontal(transform(p, g));

  CutTree tree;
  tree.host = p;
  tree.horizontal = false;
  tree.nodes.reserve(rot.nodes.size());
  std::vector<int> remap(rot.nodes.size());
  {
    std::vector<RectNode> mapped;
    for (const RectNode& r : rot.nodes) {
      const Point c1 = apply(ginv, r.lo);
      const Point c2 = apply(ginv, r.hi);
      RectNode m;
      m.lo = {std::min(c1.x, c2.x), std::min(c1.y, c2.y)};
      m.hi = {std::max(c1.x, c2.x), std::max(c1.y, c2.y)};
      m.id = r.id;  // original id, re-sorted below
      mapped.push_back(m);
    }
    std::vector<int> order(mapped.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      return std::tie(mapped[u].lo, mapped[u].hi) <
             std::tie(mapped[v].lo, mapped[v].hi);
    });
    for (size_t k = 0; k < order.size(); ++k) {
      RectNode m = mapped[order[k]];
      m.id = static_cast<int>(k);
      remap[order[k]] = static_cast<int>(k);
      tree.nodes.push_back(m);
    }
  }
  for (const TreeEdge& e : rot.edges) {
    TreeEdge m;
    m.cut = make_cut(p, transform_polyline(e.cut.polyline, ginv));
    m.t = e.t;
    const int a = remap[e.a], b = remap[e.b];
    m.a = std::min(a, b);
    m.b = std::max(a, b);
    tree.edges.push_back(std::move(m));
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& u, const TreeEdge& v) {
              return std::tie(u.cut.polyline, u.a, u.b) <
                     std::tie(v.cut.polyline, v.a, v.b);
            });
  tree.incident.assign(tree.nodes.size(), {});
  for (size_t k = 0; k < tree.edges.size(); ++k) {
    tree.incident[tree.edges[k].a].push_back(static_cast<int>(k));
    tree.incident[tree.edges[k].b].push_back(static_cast<int>(k));
  }
  for (auto& lst : tree.incident) {
    std::sort(lst.begin(), lst.end(), [&](int u, int v) {
      return std::tie(tree.edges[u].cut.a().y, tree.edges[u].cut.a().x) <
             std::tie(tree.edges[v].cut.a().y, tree.edges[v].cut.a().x);
    });
  }
  return tree;
}

int t_value(const RectNode& ra, const RectNode& rb) {
  const RectilinearPolygon pa = rect_polygon(ra);
  const RectilinearPolygon pb = rect_polygon(rb);
  try {
    const RectilinearPolygon u = glue_union(pa, pb);
    return u.n() - 8;
  } catch (const error&) {
    throw error(errc::not_adjacent, "rectangles do not share a boundary run");
  }
}

bool cut_covers_full_side(const CutTree& tree, int edge_index, int node) {
  const TreeEdge& e = tree.edges[edge_index];
  const RectNode& r = tree.nodes[node];
  const Point& a = e.cut.a();
  const Point& b = e.cut.b();
  if (a.y == b.y) {
    const bool span = std::min(a.x, b.x) == r.lo.x && std::max(a.x, b.x) == r.hi.x;
    return span && (a.y == r.lo.y || a.y == r.hi.y);
  }
  const bool span = std::min(a.y, b.y) == r.lo.y && std::max(a.y, b.y) == r.hi.y;
  return span && (a.x == r.lo.x || a.x == r.hi.x);
}

CornerAdjacency corner_adjacency(const CutTree& tree, int node, Corner corner) {
  CornerAdjacency out;
  out.node = node;
  out.corner = corner;
  const RectNode& r = tree.nodes[node];
  const Point cp = corner_point(r, corner);
  const Corner sibling = tree.horizontal ? mirror_corner_lr(corner)
                                         : mirror_corner_tb(corner);
  const Point sp = corner_point(r, sibling);

  for (int ei : tree.incident[node]) {
    const int q = tree.other_end(ei, node);
    const RectNode& rq = tree.nodes[q];
    if (!(rq.lo.x <= cp.x && cp.x <= rq.hi.x && rq.lo.y <= cp.y && cp.y <= rq.hi.y))
      continue;
    const RectilinearPolygon uni = glue_union(rect_polygon(r), rect_polygon(rq));
    const bool absorbed = !is_vertex(uni, cp);
    const bool sibling_outside =
        !(rq.lo.x <= sp.x && sp.x <= rq.hi.x && rq.lo.y <= sp.y && sp.y <= rq.hi.y);
    if (absorbed || sibling_outside) {
      out.edge_index = ei;
      out.region = region_across(tree, ei, node);
      return out;
    }
  }
  return out;
}

RectilinearPolygon region_across(const CutTree& tree, int edge_index, int node) {
  const TreeEdge& e = tree.edges[edge_index];
  const int q = tree.other_end(edge_index, node);
  const RectNode& rq = tree.nodes[q];
  const SplitResult res = split(tree.host, e.cut);
  const coord_t cx = rq.lo.x + rq.hi.x;
  const coord_t cy = rq.lo.y + rq.hi.y;
  if (contains_half(res.part1, cx, cy)) return res.part1;
  if (!contains_half(res.part2, cx, cy))
    throw error(errc::internal, "neighbor rectangle lost by split");
  return res.part2;
}

std::vector<int> find_pockets(const CutTree& tree) {
  std::vector<int> out;
  for (const RectNode& r : tree.nodes) {
    if (tree.degree(r.id) != 1) continue;
    const int ei = tree.incident[r.id][0];
    if (tree.edges[ei].cut.kind == CutKind::two_cut &&
        cut_covers_full_side(tree, ei, r.id))
      out.push_back(r.id);
  }
  return out;
}

std::vector<int> find_corridors(const CutTree& tree) {
  std::vector<int> out;
  for (const RectNode& r : tree.nodes) {
    if (tree.degree(r.id) < 2) continue;
    for (int ei : tree.incident[r.id]) {
      if (tree.edges[ei].cut.kind == CutKind::two_cut &&
          cut_covers_full_side(tree, ei, r.id)) {
        out.push_back(r.id);
        break;
      }
    }
  }
  return out;
}

}  // namespace polypart
