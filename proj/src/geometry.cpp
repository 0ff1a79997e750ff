#include "polypart/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace polypart {

namespace {

using rational = boost::multiprecision::cpp_rational;

[[noreturn]] void fail(errc c, const std::string& msg) { throw error(c, msg); }

void check_internal(bool cond, const char* what) {
  if (!cond) fail(errc::internal, std::string("internal invariant failed: ") + what);
}

bool axis_parallel(const Point& a, const Point& b) {
  return (a.x == b.x) != (a.y == b.y);
}

// Closed point-on-segment test for an axis-parallel segment.
bool on_segment(const Point& q, const Point& a, const Point& b) {
  if (a.x == b.x) {
    return q.x == a.x && std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
  }
  return q.y == a.y && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x);
}

// Do two closed axis-parallel segments share at least one point?
bool segments_touch(const Point& a1, const Point& a2, const Point& b1,
                    const Point& b2) {
  const bool av = a1.x == a2.x, bv = b1.x == b2.x;
  if (av && bv) {
    if (a1.x != b1.x) return false;
    return std::max(std::min(a1.y, a2.y), std::min(b1.y, b2.y)) <=
           std::min(std::max(a1.y, a2.y), std::max(b1.y, b2.y));
  }
  if (!av && !bv) {
    if (a1.y != b1.y) return false;
    return std::max(std::min(a1.x, a2.x), std::min(b1.x, b2.x)) <=
           std::min(std::max(a1.x, a2.x), std::max(b1.x, b2.x));
  }
  const Point &v1 = av ? a1 : b1, &v2 = av ? a2 : b2;
  const Point &h1 = av ? b1 : a1, &h2 = av ? b2 : a2;
  return std::min(h1.x, h2.x) <= v1.x && v1.x <= std::max(h1.x, h2.x) &&
         std::min(v1.y, v2.y) <= h1.y && h1.y <= std::max(v1.y, v2.y);
}

wide_t cross(const Point& o, const Point& a, const Point& b) {
  return wide_t(a.x - o.x) * wide_t(b.y - o.y) -
         wide_t(a.y - o.y) * wide_t(b.x - o.x);
}

}  // namespace

wide_t area2(const RectilinearPolygon& p) {
  wide_t s = 0;
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % n];
    s += wide_t(a.x) * wide_t(b.y) - wide_t(b.x) * wide_t(a.y);
  }
  return s < 0 ? -s : s;
}

namespace {

wide_t signed_area2(const std::vector<Point>& v) {
  wide_t s = 0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    s += wide_t(a.x) * wide_t(b.y) - wide_t(b.x) * wide_t(a.y);
  }
  return s;
}

void rotate_to_canonical_start(std::vector<Point>& v) {
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
}

}  // namespace

RectilinearPolygon normalize(std::vector<Point> raw, NormalizeReport* report) {
  NormalizeReport rep;
  if (raw.size() < 3) fail(errc::too_few_vertices, "fewer than 3 input points");
  for (const Point& p : raw) {
    if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
      fail(errc::coordinate_out_of_range, "coordinate magnitude exceeds limit");
  }

  // Drop consecutive duplicates (cyclically).
  {
    std::vector<Point> out;
    for (const Point& p : raw) {
      if (out.empty() || !(out.back() == p)) out.push_back(p);
      else ++rep.dropped_duplicates;
    }
    while (out.size() > 1 && out.front() == out.back()) {
      out.pop_back();
      ++rep.dropped_duplicates;
    }
    raw = std::move(out);
  }
  if (raw.size() < 4) fail(errc::too_few_vertices, "fewer than 4 distinct vertices");

  for (size_t i = 0; i < raw.size(); ++i) {
    const Point& a = raw[i];
    const Point& b = raw[(i + 1) % raw.size()];
    if (!axis_parallel(a, b))
      fail(errc::non_orthogonal_edge, "edge is not axis-parallel");
  }

  // Merge collinear runs; reject zero-width spikes (a 180-degree turn).
  bool changed = true;
  while (changed) {
    changed = false;
    const int n = static_cast<int>(raw.size());
    if (n < 4) fail(errc::degenerate_area, "polygon collapsed during merging");
    for (int i = 0; i < n; ++i) {
      const Point& a = raw[(i + n - 1) % n];
      const Point& b = raw[i];
      const Point& c = raw[(i + 1) % n];
      const bool h1 = a.y == b.y, h2 = b.y == c.y;
      if (h1 != h2) continue;  // perpendicular corner
      // Same axis: merged or spike.
      const coord_t d1 = h1 ? b.x - a.x : b.y - a.y;
      const coord_t d2 = h1 ? c.x - b.x : c.y - b.y;
      if ((d1 > 0) == (d2 > 0)) {
        raw.erase(raw.begin() + i);
        ++rep.merged_collinear;
        changed = true;
        break;
      }
      fail(errc::degenerate_area, "zero-area spike in boundary");
    }
  }

  if (raw.size() < 4 || raw.size() % 2 != 0)
    fail(errc::degenerate_area, "orthogonal boundary must have an even vertex count >= 4");

  // Simplicity: non-adjacent edges must not share any point.
  {
    const int n = static_cast<int>(raw.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        if (segments_touch(raw[i], raw[(i + 1) % n], raw[j], raw[(j + 1) % n]))
          fail(errc::self_intersecting, "boundary touches or crosses itself");
      }
    }
  }

  const wide_t sa = signed_area2(raw);
  if (sa == 0) fail(errc::degenerate_area, "zero enclosed area");
  if (sa < 0) std::reverse(raw.begin(), raw.end());

  rotate_to_canonical_start(raw);

  RectilinearPolygon poly{std::move(raw)};
  validate(poly);
  if (report) *report = rep;
  return poly;
}

void validate(const RectilinearPolygon& p) {
  const int n = p.n();
  check_internal(n >= 4 && n % 2 == 0, "vertex count even and >= 4");
  int reflex = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertex(i - 1);
    const Point& b = p.vertex(i);
    const Point& c = p.vertex(i + 1);
    check_internal(axis_parallel(a, b), "axis-parallel edge");
    const wide_t cr = cross(b, Point{2 * b.x - a.x, 2 * b.y - a.y}, c);
    check_internal(cr != 0, "no collinear consecutive vertices");
    if (cr < 0) ++reflex;
  }
  check_internal(reflex == (n - 4) / 2, "reflex count equals (n-4)/2");
  check_internal(p.vertices[0] == *std::min_element(p.vertices.begin(),
                                                    p.vertices.end()),
                 "canonical start vertex");
}

std::vector<Point> reflex_vertices(const RectilinearPolygon& p) {
  std::vector<Point> out;
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertex(i - 1);
    const Point& b = p.vertex(i);
    const Point& c = p.vertex(i + 1);
    if (cross(a, b, c) < 0) out.push_back(b);
  }
  return out;
}

bool is_reflex_vertex(const RectilinearPolygon& p, const Point& v) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    if (p.vertices[i] == v)
      return cross(p.vertex(i - 1), v, p.vertex(i + 1)) < 0;
  }
  return false;
}

bool is_vertex(const RectilinearPolygon& p, const Point& v) {
  return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
}

bool on_boundary(const RectilinearPolygon& p, const Point& q) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    if (on_segment(q, p.vertices[i], p.vertex(i + 1))) return true;
  }
  return false;
}

bool contains_half(const RectilinearPolygon& p, coord_t hx, coord_t hy) {
  // Doubled-coordinate test of the point (hx/2, hy/2).
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point a{2 * p.vertices[i].x, 2 * p.vertices[i].y};
    const Point b{2 * p.vertex(i + 1).x, 2 * p.vertex(i + 1).y};
    if (on_segment(Point{hx, hy}, a, b)) return true;
  }
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertex(i + 1);
    if (a.x != b.x) continue;
    coord_t y1 = 2 * std::min(a.y, b.y), y2 = 2 * std::max(a.y, b.y);
    if (y1 <= hy && hy < y2 && 2 * a.x > hx) inside = !inside;
  }
  return inside;
}

bool contains_point(const RectilinearPolygon& p, const Point& q) {
  return contains_half(p, 2 * q.x, 2 * q.y);
}

bool strictly_inside(const RectilinearPolygon& p, const Point& q) {
  return !on_boundary(p, q) && contains_point(p, q);
}

BoundingBox bounding_box(const RectilinearPolygon& p) {
  BoundingBox bb{p.vertices[0].x, p.vertices[0].y, p.vertices[0].x,
                 p.vertices[0].y};
  for (const Point& v : p.vertices) {
    bb.min_x = std::min(bb.min_x, v.x);
    bb.min_y = std::min(bb.min_y, v.y);
    bb.max_x = std::max(bb.max_x, v.x);
    bb.max_y = std::max(bb.max_y, v.y);
  }
  return bb;
}

std::uint64_t fingerprint(const RectilinearPolygon& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(p.n()));
  for (const Point& v : p.vertices) {
    mix(static_cast<std::uint64_t>(v.x));
    mix(static_cast<std::uint64_t>(v.y));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Dihedral symmetries

Point apply(DihedralElement g, const Point& p) {
  switch (g) {
    case DihedralElement::identity: return p;
    case DihedralElement::rot90: return {-p.y, p.x};
    case DihedralElement::rot180: return {-p.x, -p.y};
    case DihedralElement::rot270: return {p.y, -p.x};
    case DihedralElement::mirror_x: return {-p.x, p.y};
    case DihedralElement::mirror_y: return {p.x, -p.y};
    case DihedralElement::mirror_d: return {p.y, p.x};
    case DihedralElement::mirror_a: return {-p.y, -p.x};
  }
  fail(errc::internal, "bad dihedral element");
}

DihedralElement inverse_of(DihedralElement g) {
  switch (g) {
    case DihedralElement::rot90: return DihedralElement::rot270;
    case DihedralElement::rot270: return DihedralElement::rot90;
    default: return g;
  }
}

RectilinearPolygon transform(const RectilinearPolygon& p, DihedralElement g) {
  std::vector<Point> v;
  v.reserve(p.vertices.size());
  for (const Point& q : p.vertices) v.push_back(apply(g, q));
  return normalize(std::move(v));
}

std::vector<Point> transform_polyline(const std::vector<Point>& pts,
                                      DihedralElement g) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& q : pts) out.push_back(apply(g, q));
  return out;
}

// ---------------------------------------------------------------------------
// Cuts

namespace {

// Cyclic boundary coordinate of a point known to lie on the boundary:
// (index of the edge it lies on, L1 offset from that edge's start). A point
// equal to a vertex belongs to the edge starting there (offset 0).
struct BoundaryPos {
  int edge = -1;
  coord_t offset = 0;
};

std::optional<BoundaryPos> locate_on_boundary(const RectilinearPolygon& p,
                                              const Point& q) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertex(i + 1);
    if (!on_segment(q, a, b)) continue;
    if (q == b) continue;  // belongs to the next edge
    return BoundaryPos{i, std::llabs(q.x - a.x) + std::llabs(q.y - a.y)};
  }
  return std::nullopt;
}

// Straightens a 3-point polyline whose middle point is collinear and
// between; rejects other degenerate shapes.
std::optional<std::vector<Point>> canonical_polyline(std::vector<Point> pts) {
  if (pts.size() == 3) {
    const bool h1 = pts[0].y == pts[1].y, h2 = pts[1].y == pts[2].y;
    if (h1 == h2) {
      if (!on_segment(pts[1], pts[0], pts[2])) return std::nullopt;
      pts.erase(pts.begin() + 1);
    }
  }
  if (pts.size() != 2 && pts.size() != 3) return std::nullopt;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1] || !axis_parallel(pts[i], pts[i + 1]))
      return std::nullopt;
  }
  if (pts.back() < pts.front()) std::reverse(pts.begin(), pts.end());
  return pts;
}

// The open polyline (endpoints excluded) must avoid the boundary entirely
// and run through the interior.
bool polyline_interior_ok(const RectilinearPolygon& host,
                          const std::vector<Point>& pts) {
  const int n = host.n();
  const Point& pa = pts.front();
  const Point& pb = pts.back();
  for (size_t s = 0; s + 1 < pts.size(); ++s) {
    const Point& u = pts[s];
    const Point& v = pts[s + 1];
    for (int i = 0; i < n; ++i) {
      const Point& e1 = host.vertices[i];
      const Point& e2 = host.vertex(i + 1);
      if (!segments_touch(u, v, e1, e2)) continue;
      // Any contact is allowed only at the polyline's global endpoints,
      // and only as a single point.
      const bool sv = u.x == v.x, ev = e1.x == e2.x;
      if (sv == ev) {
        // Parallel with contact: a shared run or an endpoint touch.
        const coord_t lo = sv ? std::max(std::min(u.y, v.y), std::min(e1.y, e2.y))
                              : std::max(std::min(u.x, v.x), std::min(e1.x, e2.x));
        const coord_t hi = sv ? std::min(std::max(u.y, v.y), std::max(e1.y, e2.y))
                              : std::min(std::max(u.x, v.x), std::max(e1.x, e2.x));
        if (lo != hi) return false;  // positive-length overlap
        const Point q = sv ? Point{u.x, lo} : Point{lo, u.y};
        if (!(q == pa || q == pb)) return false;
      } else {
        const Point q = sv ? Point{u.x, e1.y} : Point{e1.x, u.y};
        if (!(q == pa || q == pb)) return false;
      }
    }
    // No boundary contact except endpoints; one strict midpoint decides.
    if (!contains_half(host, u.x + v.x, u.y + v.y)) return false;
  }
  return true;
}

std::optional<CutKind> classify_cut(const RectilinearPolygon& host,
                                    const std::vector<Point>& pts) {
  const bool ra = is_reflex_vertex(host, pts.front());
  const bool rb = is_reflex_vertex(host, pts.back());
  if (pts.size() == 3) {
    if (ra && rb) return CutKind::l_cut;
    return std::nullopt;
  }
  if (ra && rb) return CutKind::two_cut;
  if (ra || rb) return CutKind::one_cut;
  return std::nullopt;
}

}  // namespace

std::optional<Cut> try_make_cut(const RectilinearPolygon& host,
                                std::vector<Point> polyline) {
  auto pts = canonical_polyline(std::move(polyline));
  if (!pts) return std::nullopt;
  if (!locate_on_boundary(host, pts->front()) ||
      !locate_on_boundary(host, pts->back()))
    return std::nullopt;
  if (!polyline_interior_ok(host, *pts)) return std::nullopt;
  auto kind = classify_cut(host, *pts);
  if (!kind) return std::nullopt;
  return Cut{*kind, std::move(*pts)};
}

Cut make_cut(const RectilinearPolygon& host, std::vector<Point> polyline) {
  auto pts = canonical_polyline(std::move(polyline));
  if (!pts) fail(errc::cut_endpoint_invalid, "malformed cut polyline");
  if (!locate_on_boundary(host, pts->front()) ||
      !locate_on_boundary(host, pts->back()))
    fail(errc::cut_endpoint_invalid, "cut endpoint not on the boundary");
  if (!polyline_interior_ok(host, *pts))
    fail(errc::cut_not_interior, "cut leaves the interior of the host");
  auto kind = classify_cut(host, *pts);
  if (!kind)
    fail(errc::cut_endpoint_invalid,
         "cut endpoints do not match any cut kind (reflex anchors missing)");
  return Cut{*kind, std::move(*pts)};
}

SplitResult split(const RectilinearPolygon& host, const Cut& cut) {
  // Revalidate: callers may hand-build cuts.
  const Cut checked = make_cut(host, cut.polyline);
  if (checked.kind != cut.kind)
    fail(errc::cut_endpoint_invalid, "cut kind does not match its polyline");

  const int n = host.n();
  std::vector<coord_t> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const Point& a = host.vertices[i];
    const Point& b = host.vertex(i + 1);
    prefix[i + 1] = prefix[i] + std::llabs(b.x - a.x) + std::llabs(b.y - a.y);
  }
  const coord_t total = prefix[n];
  auto scalar = [&](const BoundaryPos& bp) {
    return prefix[bp.edge] + bp.offset;
  };

  const Point A = checked.polyline.front();
  const Point B = checked.polyline.back();
  const BoundaryPos pa = *locate_on_boundary(host, A);
  const BoundaryPos pb = *locate_on_boundary(host, B);
  const coord_t sa = scalar(pa), sb = scalar(pb);
  check_internal(sa != sb, "cut endpoints on distinct boundary points");

  auto chain = [&](coord_t from, coord_t to) {
    // Vertices with boundary coordinate strictly between from and to (CCW).
    const coord_t span = ((to - from) % total + total) % total;
    std::vector<std::pair<coord_t, Point>> picked;
    for (int i = 0; i < n; ++i) {
      const coord_t rel = ((prefix[i] - from) % total + total) % total;
      if (rel > 0 && rel < span) picked.emplace_back(rel, host.vertices[i]);
    }
    std::sort(picked.begin(), picked.end());
    std::vector<Point> out;
    out.reserve(picked.size());
    for (auto& [rel, q] : picked) out.push_back(q);
    return out;
  };

  std::vector<Point> interior(checked.polyline.begin() + 1,
                              checked.polyline.end() - 1);

  std::vector<Point> raw1;
  raw1.push_back(A);
  for (const Point& q : chain(sa, sb)) raw1.push_back(q);
  raw1.push_back(B);
  for (auto it = interior.rbegin(); it != interior.rend(); ++it)
    raw1.push_back(*it);

  std::vector<Point> raw2;
  raw2.push_back(B);
  for (const Point& q : chain(sb, sa)) raw2.push_back(q);
  raw2.push_back(A);
  for (const Point& q : interior) raw2.push_back(q);

  RectilinearPolygon p1 = normalize(std::move(raw1));
  RectilinearPolygon p2 = normalize(std::move(raw2));
  if (p2.vertices[0] < p1.vertices[0]) std::swap(p1, p2);

  SplitResult res{std::move(p1), std::move(p2), 0, 0};
  res.n1 = res.part1.n();
  res.n2 = res.part2.n();

  const int expected =
      checked.kind == CutKind::two_cut ? host.n() : host.n() + 2;
  check_internal(res.n1 + res.n2 == expected, "split vertex arithmetic");
  check_internal(area2(res.part1) + area2(res.part2) == area2(host),
                 "split preserves area");
  return res;
}

Chord chord_from(const RectilinearPolygon& p, const Point& v, bool horizontal) {
  const int n = p.n();
  int vi = -1;
  for (int i = 0; i < n; ++i)
    if (p.vertices[i] == v) { vi = i; break; }
  check_internal(vi >= 0, "chord anchor is a vertex");
  check_internal(is_reflex_vertex(p, v), "chord anchor is reflex");

  const Point& prev = p.vertex(vi - 1);
  const Point& next = p.vertex(vi + 1);
  int dir = 0;
  if (horizontal) {
    if (prev.y == v.y) dir = v.x > prev.x ? 1 : -1;       // incoming edge
    else dir = next.x > v.x ? -1 : 1;                      // outgoing edge
  } else {
    if (prev.x == v.x) dir = v.y > prev.y ? 1 : -1;
    else dir = next.y > v.y ? -1 : 1;
  }

  // Nearest boundary feature along the ray: a vertex on the ray line, or a
  // perpendicular edge crossing it.
  std::optional<coord_t> best;
  auto consider = [&](coord_t c) {
    const coord_t along = horizontal ? (c - v.x) * dir : (c - v.y) * dir;
    if (along <= 0) return;
    if (!best || along < ((horizontal ? (*best - v.x) : (*best - v.y)) * dir))
      best = c;
  };
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertex(i + 1);
    if (horizontal) {
      if (a.y == v.y && !(a == v)) consider(a.x);
      if (a.x == b.x && std::min(a.y, b.y) < v.y && v.y < std::max(a.y, b.y))
        consider(a.x);
    } else {
      if (a.x == v.x && !(a == v)) consider(a.y);
      if (a.y == b.y && std::min(a.x, b.x) < v.x && v.x < std::max(a.x, b.x))
        consider(a.y);
    }
  }
  check_internal(best.has_value(), "chord hits the boundary");
  const Point to = horizontal ? Point{*best, v.y} : Point{v.x, *best};
  return Chord{v, to, is_reflex_vertex(p, to)};
}

// ---------------------------------------------------------------------------
// Region algebra

namespace {

struct DirEdge {
  Point from, to;
  bool operator<(const DirEdge& o) const {
    return std::tie(from, to) < std::tie(o.from, o.to);
  }
};

void fragment_edges(const RectilinearPolygon& p,
                    const std::set<Point>& breakpoints,
                    std::multiset<DirEdge>& out) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point a = p.vertices[i];
    const Point b = p.vertex(i + 1);
    std::vector<Point> pts{a};
    for (const Point& q : breakpoints) {
      if (!(q == a) && !(q == b) && on_segment(q, a, b)) pts.push_back(q);
    }
    pts.push_back(b);
    std::sort(pts.begin() + 1, pts.end() - 1, [&](const Point& u, const Point& v) {
      return std::llabs(u.x - a.x) + std::llabs(u.y - a.y) <
             std::llabs(v.x - a.x) + std::llabs(v.y - a.y);
    });
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      out.insert(DirEdge{pts[k], pts[k + 1]});
  }
}

}  // namespace

RectilinearPolygon glue_union(const RectilinearPolygon& a,
                              const RectilinearPolygon& b) {
  std::set<Point> breakpoints;
  for (const Point& q : a.vertices) breakpoints.insert(q);
  for (const Point& q : b.vertices) breakpoints.insert(q);

  std::multiset<DirEdge> edges;
  fragment_edges(a, breakpoints, edges);
  fragment_edges(b, breakpoints, edges);

  // Cancel opposite pairs (the shared boundary run).
  bool cancelled = true;
  while (cancelled) {
    cancelled = false;
    for (auto it = edges.begin(); it != edges.end(); ++it) {
      auto rev = edges.find(DirEdge{it->to, it->from});
      if (rev != edges.end()) {
        edges.erase(rev);
        edges.erase(edges.find(*it));
        cancelled = true;
        break;
      }
    }
  }
  if (edges.empty()) fail(errc::union_not_simple, "regions cancel entirely");

  std::map<Point, std::vector<Point>> next;
  for (const DirEdge& e : edges) next[e.from].push_back(e.to);
  for (auto& [k, v] : next) {
    if (v.size() != 1)
      fail(errc::union_not_simple, "pinch point in glued boundary");
  }

  std::vector<Point> cycle;
  const Point start = edges.begin()->from;
  Point cur = start;
  do {
    cycle.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end())
      fail(errc::union_not_simple, "open boundary chain in glued region");
    cur = it->second[0];
    if (cycle.size() > edges.size())
      fail(errc::union_not_simple, "boundary walk does not close");
  } while (!(cur == start));
  if (cycle.size() != edges.size())
    fail(errc::union_not_simple, "glued region is not a single simple cycle");

  RectilinearPolygon result = normalize(std::move(cycle));
  if (area2(result) != area2(a) + area2(b))
    fail(errc::union_not_simple, "glued parts were not interior-disjoint");
  return result;
}

std::vector<Point> shared_boundary_polyline(const RectilinearPolygon& a,
                                            const RectilinearPolygon& b) {
  std::set<Point> breakpoints;
  for (const Point& q : a.vertices) breakpoints.insert(q);
  for (const Point& q : b.vertices) breakpoints.insert(q);
  std::multiset<DirEdge> ea, eb;
  fragment_edges(a, breakpoints, ea);
  fragment_edges(b, breakpoints, eb);

  std::vector<DirEdge> shared;
  for (const DirEdge& e : ea) {
    if (eb.count(DirEdge{e.to, e.from})) shared.push_back(e);
  }
  if (shared.empty()) fail(errc::internal, "no shared boundary");

  std::map<Point, std::vector<Point>> adj;
  for (const DirEdge& e : shared) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<Point> ends;
  for (auto& [p, ns] : adj) {
    if (ns.size() == 1) ends.push_back(p);
    else if (ns.size() != 2)
      fail(errc::internal, "shared boundary branches");
  }
  if (ends.size() != 2)
    fail(errc::internal, "shared boundary is not a single chain");

  std::vector<Point> chain{std::min(ends[0], ends[1])};
  Point prev = chain[0], cur = adj[chain[0]][0];
  while (true) {
    chain.push_back(cur);
    const auto& ns = adj[cur];
    if (ns.size() == 1) break;
    const Point nxt = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
  }
  if (chain.size() != adj.size())
    fail(errc::internal, "shared boundary is disconnected");

  // Merge collinear runs.
  std::vector<Point> out;
  for (const Point& p : chain) {
    while (out.size() >= 2) {
      const Point& u = out[out.size() - 2];
      const Point& v = out.back();
      if ((u.x == v.x && v.x == p.x) || (u.y == v.y && v.y == p.y))
        out.pop_back();
      else
        break;
    }
    out.push_back(p);
  }
  return out;
}

bool region_subset(const RectilinearPolygon& inner,
                   const RectilinearPolygon& outer) {
  std::vector<coord_t> xs, ys;
  for (const Point& v : inner.vertices) { xs.push_back(v.x); ys.push_back(v.y); }
  for (const Point& v : outer.vertices) { xs.push_back(v.x); ys.push_back(v.y); }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    for (size_t j = 0; j + 1 < ys.size(); ++j) {
      const coord_t cx = xs[i] + xs[i + 1];
      const coord_t cy = ys[j] + ys[j + 1];
      if (contains_half(inner, cx, cy) && !contains_half(outer, cx, cy))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Visibility

namespace {

struct QPoint {
  rational x, y;
};

bool contains_q(const RectilinearPolygon& p, const QPoint& q) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertex(i + 1);
    if (a.x == b.x) {
      if (q.x == rational(a.x) && rational(std::min(a.y, b.y)) <= q.y &&
          q.y <= rational(std::max(a.y, b.y)))
        return true;
    } else {
      if (q.y == rational(a.y) && rational(std::min(a.x, b.x)) <= q.x &&
          q.x <= rational(std::max(a.x, b.x)))
        return true;
    }
  }
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertex(i + 1);
    if (a.x != b.x) continue;
    const rational y1(std::min(a.y, b.y)), y2(std::max(a.y, b.y));
    if (y1 <= q.y && q.y < y2 && rational(a.x) > q.x) inside = !inside;
  }
  return inside;
}

}  // namespace

bool sees(const RectilinearPolygon& p, const Point& a, const Point& b) {
  if (!contains_point(p, a) || !contains_point(p, b))
    fail(errc::point_outside, "visibility query point outside the region");
  if (a == b) return true;

  const rational dx(b.x - a.x), dy(b.y - a.y);
  std::vector<rational> ts{rational(0), rational(1)};
  auto push_t = [&](const rational& t) {
    if (t >= rational(0) && t <= rational(1)) ts.push_back(t);
  };

  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& e1 = p.vertices[i];
    const Point& e2 = p.vertex(i + 1);
    if (e1.x == e2.x) {
      const coord_t c = e1.x;
      if (dx == 0) {
        if (a.x != c) continue;
        // Collinear verticals: overlap interval endpoints.
        push_t(rational(e1.y - a.y) / dy);
        push_t(rational(e2.y - a.y) / dy);
      } else {
        const rational t = rational(c - a.x) / dx;
        if (t < rational(0) || t > rational(1)) continue;
        const rational y = rational(a.y) + t * dy;
        if (rational(std::min(e1.y, e2.y)) <= y &&
            y <= rational(std::max(e1.y, e2.y)))
          push_t(t);
      }
    } else {
      const coord_t c = e1.y;
      if (dy == 0) {
        if (a.y != c) continue;
        push_t(rational(e1.x - a.x) / dx);
        push_t(rational(e2.x - a.x) / dx);
      } else {
        const rational t = rational(c - a.y) / dy;
        if (t < rational(0) || t > rational(1)) continue;
        const rational x = rational(a.x) + t * dx;
        if (rational(std::min(e1.x, e2.x)) <= x &&
            x <= rational(std::max(e1.x, e2.x)))
          push_t(t);
      }
    }
  }

  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    const rational mid = (ts[i] + ts[i + 1]) / 2;
    const QPoint m{rational(a.x) + mid * dx, rational(a.y) + mid * dy};
    if (!contains_q(p, m)) return false;
  }
  return true;
}

}  // namespace polypart
