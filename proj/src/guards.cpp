#include "polypart/guards.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "polypart/partition.hpp"

namespace polypart {

namespace {

using rational = boost::multiprecision::cpp_rational;

struct QPoint {
  rational x, y;
};

RectilinearPolygon scaled2(const RectilinearPolygon& p) {
  std::vector<Point> v;
  v.reserve(p.vertices.size());
  for (const Point& q : p.vertices) v.push_back({2 * q.x, 2 * q.y});
  return normalize(std::move(v));
}

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

// Exact visibility between a rational point and a lattice point inside a
// closed orthogonal region.
bool sees_q(const RectilinearPolygon& p, const QPoint& a, const Point& b) {
  const rational dx = rational(b.x) - a.x;
  const rational dy = rational(b.y) - a.y;
  if (dx == 0 && dy == 0) return contains_q(p, a);

  std::vector<rational> ts{rational(0), rational(1)};
  auto push_t = [&](const rational& t) {
    if (t >= rational(0) && t <= rational(1)) ts.push_back(t);
  };
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    const Point& e1 = p.vertices[i];
    const Point& e2 = p.vertex(i + 1);
    if (e1.x == e2.x) {
      if (dx == 0) {
        if (a.x != rational(e1.x)) continue;
        push_t((rational(e1.y) - a.y) / dy);
        push_t((rational(e2.y) - a.y) / dy);
      } else {
        const rational t = (rational(e1.x) - a.x) / dx;
        if (t < rational(0) || t > rational(1)) continue;
        const rational y = a.y + t * dy;
        if (rational(std::min(e1.y, e2.y)) <= y &&
            y <= rational(std::max(e1.y, e2.y)))
          push_t(t);
      }
    } else {
      if (dy == 0) {
        if (a.y != rational(e1.y)) continue;
        push_t((rational(e1.x) - a.x) / dx);
        push_t((rational(e2.x) - a.x) / dx);
      } else {
        const rational t = (rational(e1.y) - a.y) / dy;
        if (t < rational(0) || t > rational(1)) continue;
        const rational x = a.x + t * dx;
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
    if (!contains_q(p, QPoint{a.x + mid * dx, a.y + mid * dy})) return false;
  }
  return true;
}

struct Line {
  rational a, b, c;  // a x + b y = c
};

std::vector<QPoint> clip(const std::vector<QPoint>& poly, const Line& l,
                         int side) {
  // Keeps side * (a x + b y - c) <= 0.
  std::vector<QPoint> out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const QPoint& p = poly[i];
    const QPoint& q = poly[(i + 1) % n];
    const rational sp = side * (l.a * p.x + l.b * p.y - l.c);
    const rational sq = side * (l.a * q.x + l.b * q.y - l.c);
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      const rational t = sp / (sp - sq);
      out.push_back(QPoint{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

rational area2_q(const std::vector<QPoint>& poly) {
  rational s = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const QPoint& a = poly[i];
    const QPoint& b = poly[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s < 0 ? -s : s;
}

}  // namespace

KernelRect visibility_kernel(const RectilinearPolygon& piece) {
  const BoundingBox bb = bounding_box(piece);
  KernelRect k;
  k.lo = {2 * bb.min_x, 2 * bb.min_y};
  k.hi = {2 * bb.max_x, 2 * bb.max_y};
  const int n = piece.n();
  for (int i = 0; i < n; ++i) {
    const Point& a = piece.vertices[i];
    const Point& b = piece.vertex(i + 1);
    if (a.y == b.y) {
      if (b.x > a.x) k.lo.y = std::max(k.lo.y, 2 * a.y);   // interior above
      else k.hi.y = std::min(k.hi.y, 2 * a.y);             // interior below
    } else {
      if (b.y > a.y) k.hi.x = std::min(k.hi.x, 2 * a.x);   // interior left
      else k.lo.x = std::max(k.lo.x, 2 * a.x);             // interior right
    }
  }
  return k;
}

bool coverage_check(const RectilinearPolygon& piece, const Patrol& patrol) {
  if (!contains_half(piece, patrol.a.x, patrol.a.y) ||
      !contains_half(piece, patrol.b.x, patrol.b.y))
    return false;

  const RectilinearPolygon p2 = scaled2(piece);
  const std::vector<Point> reflex = reflex_vertices(p2);
  if (reflex.empty()) return true;  // convex: everything sees everything

  // Inside a grid cell the invisible set is bounded by the lines through a
  // viewpoint and a reflex vertex; a positive-area doubly-dark face of
  // that line arrangement is a witness against coverage.
  std::vector<Line> lines;
  for (const Point& vp : {patrol.a, patrol.b}) {
    for (const Point& v : reflex) {
      if (v == vp) continue;
      lines.push_back(Line{rational(v.y - vp.y), rational(vp.x - v.x),
                           rational(v.y - vp.y) * vp.x +
                               rational(vp.x - v.x) * vp.y});
    }
  }

  std::vector<coord_t> xs, ys;
  for (const Point& v : p2.vertices) {
    xs.push_back(v.x);
    ys.push_back(v.y);
  }
  xs.push_back(patrol.a.x);
  xs.push_back(patrol.b.x);
  ys.push_back(patrol.a.y);
  ys.push_back(patrol.b.y);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    for (size_t j = 0; j + 1 < ys.size(); ++j) {
      if (!contains_half(p2, xs[i] + xs[i + 1], ys[j] + ys[j + 1])) continue;
      const std::vector<QPoint> cell{{rational(xs[i]), rational(ys[j])},
                                     {rational(xs[i + 1]), rational(ys[j])},
                                     {rational(xs[i + 1]), rational(ys[j + 1])},
                                     {rational(xs[i]), rational(ys[j + 1])}};
      // Only lines separating the cell's corners create faces inside it.
      std::vector<const Line*> relevant;
      for (const Line& l : lines) {
        bool pos = false, neg = false;
        for (const QPoint& q : cell) {
          const rational s = l.a * q.x + l.b * q.y - l.c;
          pos |= s > 0;
          neg |= s < 0;
        }
        if (pos && neg) relevant.push_back(&l);
      }
      const int k = static_cast<int>(relevant.size());
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<QPoint> face = cell;
        for (int l = 0; l < k && !face.empty(); ++l)
          face = clip(face, *relevant[l], (mask >> l) & 1 ? 1 : -1);
        if (face.size() < 3 || area2_q(face) == 0) continue;
        QPoint centroid{0, 0};
        for (const QPoint& q : face) {
          centroid.x += q.x;
          centroid.y += q.y;
        }
        centroid.x /= static_cast<int>(face.size());
        centroid.y /= static_cast<int>(face.size());
        if (!sees_q(p2, centroid, patrol.a) && !sees_q(p2, centroid, patrol.b))
          return false;
      }
    }
  }
  return true;
}

namespace {

void add_candidate(std::vector<Patrol>& out, std::set<std::pair<Point, Point>>& seen,
                   int piece_id, Point a, Point b) {
  if (b < a) std::swap(a, b);
  if (seen.insert({a, b}).second) out.push_back(Patrol{piece_id, a, b});
}

// Maximal runs of the doubled piece along a horizontal or vertical line,
// as closed doubled-coordinate segments.
std::vector<std::pair<coord_t, coord_t>> runs_on_line(
    const RectilinearPolygon& p2, bool horizontal, coord_t fixed) {
  std::vector<coord_t> events;
  for (const Point& v : p2.vertices)
    events.push_back(horizontal ? v.x : v.y);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<std::pair<coord_t, coord_t>> runs;
  std::optional<coord_t> open;
  for (size_t i = 0; i + 1 < events.size(); ++i) {
    // Quadrupled-coordinate midpoint test of the open gap.
    const coord_t m4a = events[i] + events[i + 1];
    const bool in = horizontal ? contains_half(p2, m4a, 2 * fixed)
                               : contains_half(p2, 2 * fixed, m4a);
    if (in && !open) open = events[i];
    if (!in && open) {
      runs.push_back({*open, events[i]});
      open.reset();
    }
  }
  if (open) runs.push_back({*open, events.back()});
  return runs;
}

}  // namespace

Patrol patrol_for_piece(const RectilinearPolygon& piece, int piece_id) {
  validate(piece);
  if (piece.n() > 8)
    throw error(errc::internal, "patrol synthesis expects at most 8 vertices");

  const RectilinearPolygon p2 = scaled2(piece);
  std::vector<Patrol> candidates;
  std::set<std::pair<Point, Point>> seen;

  // Tier 1: a kernel point, preferably the kernel's center.
  const KernelRect kernel = visibility_kernel(piece);
  if (!kernel.empty()) {
    const Point c{(kernel.lo.x + kernel.hi.x) / 2,
                  (kernel.lo.y + kernel.hi.y) / 2};
    add_candidate(candidates, seen, piece_id, c, c);
  }

  // Tier 2: chords through reflex vertices, pulled half a unit inward
  // along their direction when possible, then the full chords.
  for (const Point& v : reflex_vertices(piece)) {
    for (bool horizontal : {true, false}) {
      const Chord ch = chord_from(piece, v, horizontal);
      const Point a{2 * ch.from.x, 2 * ch.from.y};
      const Point b{2 * ch.to.x, 2 * ch.to.y};
      const coord_t sx = (b.x > a.x) - (b.x < a.x);
      const coord_t sy = (b.y > a.y) - (b.y < a.y);
      if (std::abs(b.x - a.x) + std::abs(b.y - a.y) >= 2)
        add_candidate(candidates, seen, piece_id,
                      Point{a.x + sx, a.y + sy}, Point{b.x - sx, b.y - sy});
      add_candidate(candidates, seen, piece_id, a, b);
    }
  }

  // Tier 3: chords along every grid line induced by the vertex coordinates
  // and their half-unit neighbours. Odd (half-unit) lines first: they never
  // carry boundary edges, so their inset chords are strictly interior.
  {
    std::set<coord_t> gx_set, gy_set;
    for (const Point& v : p2.vertices) {
      for (coord_t d : {coord_t{-1}, coord_t{0}, coord_t{1}}) {
        gx_set.insert(v.x + d);
        gy_set.insert(v.y + d);
      }
    }
    auto ordered = [](const std::set<coord_t>& s) {
      std::vector<coord_t> v(s.begin(), s.end());
      std::stable_sort(v.begin(), v.end(), [](coord_t a, coord_t b) {
        const bool oa = a & 1, ob = b & 1;
        if (oa != ob) return oa;
        return a < b;
      });
      return v;
    };
    const std::vector<coord_t> gx = ordered(gx_set), gy = ordered(gy_set);
    for (coord_t y : gy) {
      for (auto [x1, x2] : runs_on_line(p2, true, y)) {
        if (x2 - x1 >= 2)
          add_candidate(candidates, seen, piece_id, {x1 + 1, y}, {x2 - 1, y});
        add_candidate(candidates, seen, piece_id, {x1, y}, {x2, y});
      }
    }
    for (coord_t x : gx) {
      for (auto [y1, y2] : runs_on_line(p2, false, x)) {
        if (y2 - y1 >= 2)
          add_candidate(candidates, seen, piece_id, {x, y1 + 1}, {x, y2 - 1});
        add_candidate(candidates, seen, piece_id, {x, y1}, {x, y2});
      }
    }
  }

  for (const Patrol& cand : candidates) {
    if (!contains_half(piece, cand.a.x, cand.a.y) ||
        !contains_half(piece, cand.b.x, cand.b.y))
      continue;
    if (coverage_check(piece, cand)) return cand;
  }
  throw theorem_violation("no covering patrol for a small piece",
                          dump_instance(piece, "no covering patrol"));
}

bool patrols_noncrossing(const std::vector<Patrol>& patrols) {
  auto interior_point = [](const Patrol& s, const Point& q) {
    if (s.stationary()) return false;
    if (q == s.a || q == s.b) return false;
    if (s.a.x == s.b.x)
      return q.x == s.a.x && std::min(s.a.y, s.b.y) < q.y &&
             q.y < std::max(s.a.y, s.b.y);
    return q.y == s.a.y && std::min(s.a.x, s.b.x) < q.x &&
           q.x < std::max(s.a.x, s.b.x);
  };
  auto on_seg = [](const Patrol& s, const Point& q) {
    if (s.a.x == s.b.x)
      return q.x == s.a.x && std::min(s.a.y, s.b.y) <= q.y &&
             q.y <= std::max(s.a.y, s.b.y);
    return q.y == s.a.y && std::min(s.a.x, s.b.x) <= q.x &&
           q.x <= std::max(s.a.x, s.b.x);
  };

  for (size_t i = 0; i < patrols.size(); ++i) {
    for (size_t j = i + 1; j < patrols.size(); ++j) {
      const Patrol& s = patrols[i];
      const Patrol& t = patrols[j];
      // Collinear overlap of positive length is a crossing.
      const bool sv = s.a.x == s.b.x, tv = t.a.x == t.b.x;
      if (!s.stationary() && !t.stationary() && sv == tv) {
        if (sv && s.a.x == t.a.x) {
          const coord_t lo = std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y));
          const coord_t hi = std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
          if (lo < hi) return false;
        }
        if (!sv && s.a.y == t.a.y) {
          const coord_t lo = std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x));
          const coord_t hi = std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x));
          if (lo < hi) return false;
        }
      }
      // Point contacts: bad iff the shared point is interior to one side.
      for (const Point& q : {s.a, s.b}) {
        if (on_seg(t, q) || (t.stationary() && q == t.a))
          if (interior_point(t, q)) return false;
      }
      for (const Point& q : {t.a, t.b}) {
        if (on_seg(s, q)) {
          if (interior_point(s, q)) return false;
        }
      }
      // Proper perpendicular crossings.
      if (!s.stationary() && !t.stationary() && sv != tv) {
        const Patrol& v = sv ? s : t;
        const Patrol& h = sv ? t : s;
        const Point q{v.a.x, h.a.y};
        if (on_seg(v, q) && on_seg(h, q) &&
            (interior_point(v, q) || interior_point(h, q)))
          return false;
      }
    }
  }
  return true;
}

}  // namespace polypart
