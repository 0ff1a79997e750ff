#include "polypart/io.hpp"

#include <sstream>

#include "json.hpp"

namespace polypart {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  throw error(errc::syntax_error, os.str());
}

}  // namespace

RectilinearPolygon parse_polygon_text(const std::string& text) {
  std::vector<long long> numbers;
  std::vector<int> number_lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) syntax(lineno, "not an integer: '" + tok + "'");
        numbers.push_back(v);
        number_lines.push_back(lineno);
      } catch (const error&) {
        throw;
      } catch (...) {
        syntax(lineno, "not an integer: '" + tok + "'");
      }
    }
  }
  if (numbers.empty()) syntax(lineno, "missing vertex count");
  const long long n = numbers[0];
  if (n < 3 || n > 1000000) syntax(number_lines[0], "unreasonable vertex count");
  if (static_cast<long long>(numbers.size()) != 1 + 2 * n)
    syntax(lineno, "expected " + std::to_string(2 * n) + " coordinates after the count");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i)
    pts.push_back(Point{numbers[1 + 2 * i], numbers[2 + 2 * i]});
  return normalize(std::move(pts));
}

std::string emit_polygon_text(const RectilinearPolygon& p) {
  std::ostringstream os;
  os << p.n() << "\n";
  for (const Point& v : p.vertices) os << v.x << " " << v.y << "\n";
  return os.str();
}

namespace {

ordered_json polygon_json(const RectilinearPolygon& p) {
  ordered_json j;
  j["n"] = p.n();
  auto& vs = j["vertices"] = ordered_json::array();
  for (const Point& v : p.vertices) vs.push_back({v.x, v.y});
  return j;
}

const char* kind_name(CutKind k) {
  switch (k) {
    case CutKind::one_cut: return "1-cut";
    case CutKind::two_cut: return "2-cut";
    case CutKind::l_cut: return "L-cut";
  }
  return "?";
}

std::string hex_fingerprint(std::uint64_t fp) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

}  // namespace

std::string result_to_json(const RectilinearPolygon& input,
                           const PartitionResult& result,
                           const std::vector<Patrol>* patrols) {
  ordered_json j;
  j["input"] = polygon_json(input);
  j["bound"] = bound(input.n());
  j["piece_count"] = result.count;
  auto& pieces = j["pieces"] = ordered_json::array();
  for (const RectilinearPolygon& piece : result.pieces)
    pieces.push_back(polygon_json(piece));
  auto& cuts = j["cuts"] = ordered_json::array();
  int order = 1;
  for (const AppliedCut& ac : result.cuts_applied) {
    ordered_json c;
    c["order"] = order++;
    c["host"] = hex_fingerprint(ac.host_fingerprint);
    c["host_n"] = ac.host_n;
    c["kind"] = kind_name(ac.cut.cut.kind);
    c["case"] = ac.case_label;
    auto& poly = c["polyline"] = ordered_json::array();
    for (const Point& q : ac.cut.cut.polyline) poly.push_back({q.x, q.y});
    cuts.push_back(std::move(c));
  }
  if (patrols) {
    j["patrol_scale"] = 2;  // patrol coordinates are doubled
    auto& ps = j["patrols"] = ordered_json::array();
    for (const Patrol& pt : *patrols) {
      ordered_json e;
      e["piece"] = pt.piece_id;
      e["a"] = {pt.a.x, pt.a.y};
      e["b"] = {pt.b.x, pt.b.y};
      ps.push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

std::vector<RectilinearPolygon> pieces_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw error(errc::syntax_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw error(errc::syntax_error, "JSON has no pieces array");
  std::vector<RectilinearPolygon> out;
  for (const auto& pj : j["pieces"]) {
    std::vector<Point> pts;
    for (const auto& vj : pj.at("vertices"))
      pts.push_back(Point{vj.at(0).get<coord_t>(), vj.at(1).get<coord_t>()});
    out.push_back(normalize(std::move(pts)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr int kUnit = 24;   // px per lattice unit
constexpr int kMargin = 24;

struct SvgMapper {
  coord_t min_x, max_y;
  coord_t px(coord_t x) const { return kMargin + kUnit * (x - min_x); }
  coord_t py(coord_t y) const { return kMargin + kUnit * (max_y - y); }
  // Doubled coordinates map at half scale.
  coord_t px2(coord_t x2) const { return kMargin + kUnit * (x2 - 2 * min_x) / 2; }
  coord_t py2(coord_t y2) const { return kMargin + kUnit * (2 * max_y - y2) / 2; }
};

const char* kPalette[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#fcbba1",
                          "#dadaeb", "#fff7bc", "#d9d9d9", "#a6dcef",
                          "#e5c4e8", "#d7e8a9"};

void path_for(std::ostringstream& os, const RectilinearPolygon& p,
              const SvgMapper& m) {
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    const Point& v = p.vertices[i];
    os << (i == 0 ? "M" : "L") << m.px(v.x) << " " << m.py(v.y) << " ";
  }
  os << "Z";
}

}  // namespace

std::string result_to_svg(const RectilinearPolygon& input,
                          const PartitionResult& result,
                          const std::vector<Patrol>* patrols) {
  const BoundingBox bb = bounding_box(input);
  const SvgMapper m{bb.min_x, bb.max_y};
  const coord_t w = kUnit * (bb.max_x - bb.min_x) + 2 * kMargin;
  const coord_t h = kUnit * (bb.max_y - bb.min_y) + 2 * kMargin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";

  int color = 0;
  for (const RectilinearPolygon& piece : result.pieces) {
    os << "  <path d=\"";
    path_for(os, piece, m);
    os << "\" fill=\"" << kPalette[color++ % 10]
       << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }

  os << "  <path d=\"";
  path_for(os, input, m);
  os << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"/>\n";

  int order = 1;
  for (const AppliedCut& ac : result.cuts_applied) {
    const auto& pl = ac.cut.cut.polyline;
    os << "  <polyline points=\"";
    for (const Point& q : pl) os << m.px(q.x) << "," << m.py(q.y) << " ";
    os << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" "
          "stroke-dasharray=\"6 3\"/>\n";
    const Point mid = pl.size() == 3
                          ? pl[1]
                          : Point{(pl[0].x + pl[1].x) / 2, (pl[0].y + pl[1].y) / 2};
    os << "  <circle cx=\"" << m.px(mid.x) << "\" cy=\"" << m.py(mid.y)
       << "\" r=\"10\" fill=\"#ffffff\" stroke=\"#d62728\"/>\n";
    os << "  <text x=\"" << m.px(mid.x) << "\" y=\"" << m.py(mid.y) + 4
       << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#d62728\">"
       << order++ << "</text>\n";
  }

  if (patrols) {
    for (const Patrol& pt : *patrols) {
      if (pt.stationary()) {
        os << "  <circle cx=\"" << m.px2(pt.a.x) << "\" cy=\"" << m.py2(pt.a.y)
           << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
      } else {
        os << "  <line x1=\"" << m.px2(pt.a.x) << "\" y1=\"" << m.py2(pt.a.y)
           << "\" x2=\"" << m.px2(pt.b.x) << "\" y2=\"" << m.py2(pt.b.y)
           << "\" stroke=\"#1f77b4\" stroke-width=\"5\" "
              "stroke-linecap=\"round\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polypart
