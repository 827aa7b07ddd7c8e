#ifndef MAXREGION_PLOT_HPP
#define MAXREGION_PLOT_HPP

// SVG rendering of regions in the (1/p, 1/q) unit square.
//
// Region and line geometry is written in data coordinates inside one flipped
// <g transform="matrix(...)">, each coordinate being the exact rational rounded
// to 6 decimals, so anchors can be read back from the file.

#include "maxregion/region.hpp"

#include <sstream>

namespace maxregion {

struct PlotRegion {
  Region region;
  std::string fill;
  std::string label;
  double opacity = 0.8;
};

struct PlotLine {
  Line line;  // a x + b y = c, drawn across the unit square
  std::string stroke = "#555555";
  bool dashed = true;
};

struct PlotSegment {
  Point a, b;
  std::string label;
  std::string stroke = "#d62828";
};

struct MarkedPoint {
  Point p;
  std::string label;
  bool filled = false;
};

struct PlotSpec {
  std::string title;
  std::vector<PlotRegion> regions;  // drawn in order, later on top
  std::vector<PlotLine> lines;
  std::vector<PlotSegment> segments;
  std::vector<MarkedPoint> marked_points;
  int width = 720;
  int height = 500;
};

/// r rounded half away from zero to `digits` decimals.
inline std::string decimal(const Rational& r, unsigned digits = 6) {
  Integer scale = 1;
  for (unsigned k = 0; k < digits; ++k) scale *= 10;
  const Integer num = abs(r.get_num()) * scale * 2 + r.get_den();
  Integer q = num / (r.get_den() * 2);
  std::string s = q.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (r < 0 && q != 0) s.insert(0, "-");
  return s;
}

/// Segment of a x + b y = c inside the unit square, if any.
inline std::optional<std::pair<Point, Point>> clip_to_unit_square(const Line& l) {
  std::vector<Point> hits;
  auto add = [&](const Rational& x, const Rational& y) {
    if (x < 0 || x > 1 || y < 0 || y > 1) return;
    const Point p{x, y};
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  if (l.b != 0) {
    for (int x : {0, 1}) add(Rational(x), (l.c - l.a * x) / l.b);
  }
  if (l.a != 0) {
    for (int y : {0, 1}) add((l.c - l.b * y) / l.a, Rational(y));
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::make_pair(hits.front(), hits.back());
}

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string data_xy(const Point& p) { return decimal(p.x) + " " + decimal(p.y); }

inline std::string segment_path(const Point& a, const Point& b) { return "M " + data_xy(a) + " L " + data_xy(b); }

struct Frame {
  Integer left = 50, top = 40, side = 400;
  Rational px(const Rational& x) const { return Rational(left) + Rational(side) * x; }
  Rational py(const Rational& y) const { return Rational(top + side) - Rational(side) * y; }
  std::string at(const Point& p) const { return "x=\"" + decimal(px(p.x), 2) + "\" y=\"" + decimal(py(p.y), 2) + "\""; }
};

}  // namespace detail

/// Standalone SVG 1.1 document; a pure function of its input.
inline std::string render(const PlotSpec& spec) {
  using detail::xml_escape;
  const detail::Frame f;
  const std::string stroke_w = "0.004";  // data units, 1.6 px
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
    << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  o << "<title>" << xml_escape(spec.title) << "</title>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"#ffffff\"/>\n";

  // Axes: unit frame, ticks at 0, 1/2, 1.
  o << "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  o << "<rect x=\"" << f.left << "\" y=\"" << f.top << "\" width=\"" << f.side << "\" height=\"" << f.side
    << "\" stroke=\"#bbbbbb\"/>\n";
  o << "<path d=\"M " << f.left << " " << f.top + f.side << " H " << f.left + f.side << " M " << f.left << " "
    << f.top + f.side << " V " << f.top << "\"/>\n";
  o << "</g>\n";
  o << "<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  for (const Rational& t : {Rational(0), make_rational(1, 2), Rational(1)}) {
    const std::string label = t.get_str();
    o << "<text " << f.at({t, Rational(0)}) << " dy=\"16\" text-anchor=\"middle\">" << label << "</text>\n";
    o << "<text " << f.at({Rational(0), t}) << " dx=\"-6\" dy=\"4\" text-anchor=\"end\">" << label << "</text>\n";
  }
  o << "<text " << f.at({Rational(1), Rational(0)}) << " dx=\"10\" dy=\"4\">1/p</text>\n";
  o << "<text " << f.at({Rational(0), Rational(1)}) << " dy=\"-8\" text-anchor=\"middle\">1/q</text>\n";
  o << "</g>\n";

  // Geometry in data coordinates.
  o << "<g id=\"data\" transform=\"matrix(" << f.side << " 0 0 -" << f.side << " " << f.left << " " << f.top + f.side
    << ")\">\n";
  for (const auto& r : spec.regions) {
    if (r.region.is_empty()) continue;
    const auto& v = r.region.vertices();
    o << "<path class=\"region\" data-label=\"" << xml_escape(r.label) << "\" d=\"M " << detail::data_xy(v[0]);
    for (std::size_t k = 1; k < v.size(); ++k) o << " L " << detail::data_xy(v[k]);
    o << " Z\" fill=\"" << r.fill << "\" fill-opacity=\"" << r.opacity << "\" stroke=\"none\"/>\n";
    // Closed edges solid, open edges dashed.
    const std::size_t edges = v.size() == 1 ? 0 : v.size() == 2 ? 1 : v.size();
    for (std::size_t k = 0; k < edges; ++k) {
      const Point& a = v[k];
      const Point& b = v[(k + 1) % v.size()];
      o << "<path class=\"edge\" d=\"" << detail::segment_path(a, b) << "\" stroke=\"#000000\" stroke-width=\""
        << stroke_w << "\" fill=\"none\"" << (r.region.edge_closed(k) ? "" : " stroke-dasharray=\"0.012 0.008\"")
        << "/>\n";
    }
  }
  for (const auto& l : spec.lines) {
    const auto seg = clip_to_unit_square(l.line);
    if (!seg) continue;
    o << "<path class=\"line\" data-label=\"" << xml_escape(l.line.label) << "\" d=\""
      << detail::segment_path(seg->first, seg->second) << "\" stroke=\"" << l.stroke << "\" stroke-width=\"" << stroke_w
      << "\" fill=\"none\"" << (l.dashed ? " stroke-dasharray=\"0.006 0.006\"" : "") << "/>\n";
  }
  for (const auto& s : spec.segments) {
    o << "<path class=\"segment\" data-label=\"" << xml_escape(s.label) << "\" d=\"" << detail::segment_path(s.a, s.b)
      << "\" stroke=\"" << s.stroke << "\" stroke-width=\"0.008\" fill=\"none\"/>\n";
  }
  for (const auto& m : spec.marked_points) {
    o << "<circle class=\"mark\" cx=\"" << decimal(m.p.x) << "\" cy=\"" << decimal(m.p.y)
      << "\" r=\"0.008\" stroke=\"#000000\" stroke-width=\"" << stroke_w << "\" fill=\""
      << (m.filled ? "#000000" : "#ffffff") << "\"/>\n";
  }
  o << "</g>\n";

  // Text in pixel coordinates so it is not mirrored.
  o << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#000000\">\n";
  for (const auto& m : spec.marked_points)
    o << "<text " << f.at(m.p) << " dx=\"6\" dy=\"14\">" << xml_escape(m.label) << "</text>\n";
  for (const auto& l : spec.lines) {
    const auto seg = clip_to_unit_square(l.line);
    if (!seg || l.line.label.empty()) continue;
    o << "<text " << f.at(seg->second) << " dx=\"4\" dy=\"-4\" fill=\"" << l.stroke << "\">" << xml_escape(l.line.label)
      << "</text>\n";
  }
  o << "</g>\n";

  // Legend to the right of the frame.
  o << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  const Integer lx = f.left + f.side + 30;
  Integer ly = f.top + 10;
  if (!spec.title.empty()) {
    o << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-weight=\"bold\">" << xml_escape(spec.title) << "</text>\n";
    ly += 22;
  }
  for (const auto& r : spec.regions) {
    if (r.label.empty()) continue;
    o << "<rect x=\"" << lx << "\" y=\"" << ly - 10 << "\" width=\"14\" height=\"12\" fill=\"" << r.fill
      << "\" fill-opacity=\"" << r.opacity << "\"/>\n";
    o << "<text x=\"" << lx + 20 << "\" y=\"" << ly << "\">" << xml_escape(r.label) << "</text>\n";
    ly += 20;
  }
  for (const auto& s : spec.segments) {
    if (s.label.empty()) continue;
    o << "<path d=\"M " << lx << " " << ly - 4 << " h 14\" stroke=\"" << s.stroke << "\" stroke-width=\"3\"/>\n";
    o << "<text x=\"" << lx + 20 << "\" y=\"" << ly << "\">" << xml_escape(s.label) << "</text>\n";
    ly += 20;
  }
  o << "</g>\n";
  o << "</svg>\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<std::string>& palette() {
  static const std::vector<std::string> p{"#1d3557", "#457b9d", "#a8dadc", "#e9c46a", "#f4a261", "#e76f51"};
  return p;
}

inline std::vector<MarkedPoint> delta0_marks() {
  return {{{Rational(0), Rational(0)}, "O1", true},
          {{make_rational(2, 3), make_rational(2, 3)}, "O2"},
          {{make_rational(2, 3), make_rational(1, 3)}, "O3"},
          {{make_rational(3, 5), make_rational(1, 5)}, "O4"}};
}

inline std::string height_label(const Rational& h) { return "h = " + h.get_str(); }

}  // namespace detail

/// Delta0 clipped by the height half-plane for each h (largest region first),
/// with the clip lines; c_nonzero selects the second family.
inline PlotSpec figure_height_family(const std::vector<Rational>& heights, bool c_nonzero) {
  PlotSpec spec;
  spec.title = c_nonzero ? "(h+1)x - y < 1" : "(h+1)(x - y) < 1";
  std::vector<Rational> hs = heights;
  std::sort(hs.begin(), hs.end());
  spec.regions.push_back({delta0(), "#dddddd", "Delta0", 1.0});
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const HalfPlane hp = height_halfplane(hs[k], c_nonzero);
    spec.regions.push_back({intersect(delta0(), hp), detail::palette()[(k + 1) % detail::palette().size()],
                            detail::height_label(hs[k]), 0.85});
    spec.lines.push_back({Line{hp.a, hp.b, hp.c, detail::height_label(hs[k])}, "#333333", true});
  }
  spec.marked_points = detail::delta0_marks();
  return spec;
}

/// Delta_M with its reference lines. For c = 0 a Type B sector with m = M
/// gives all of Delta_M; the darker part is the clip by (m/2+1)(x-y) < 1 for a
/// larger degree m (default M + 2).
inline PlotSpec figure_deltaM(unsigned M, std::optional<unsigned> m = std::nullopt) {
  const unsigned deg = m.value_or(M + 2);
  PlotSpec spec;
  spec.title = "Delta_M, M = " + std::to_string(M);
  const Rational h = make_rational(deg, 2);
  const Region dm = deltaM(M);
  spec.regions.push_back({dm, "#a8dadc", "m = M", 0.9});
  spec.regions.push_back({intersect(dm, height_halfplane(h, false)), "#1d3557", "m = " + std::to_string(deg), 0.85});
  for (const auto& l : reference_lines(M, h)) spec.lines.push_back({l, "#555555", true});
  const DeltaMVertices v = deltaM_vertices(M);
  spec.marked_points = {{v.p1, "P1", true}, {v.p2, "P2"}, {v.p3, "P3"}, {v.p4, "P4"}};
  if (v.p5) spec.marked_points.push_back({*v.p5, "P5"});
  return spec;
}

/// Sufficiency (dark) over necessary (light) for one classification, with the
/// undecided boundary segment when there is one.
inline PlotSpec figure_regions(const Classification& c, bool c_nonzero) {
  PlotSpec spec;
  spec.title = c.phi.to_string() + (c_nonzero ? ", c != 0" : ", c = 0");
  spec.regions.push_back({necessary_region(c, c_nonzero), "#a8dadc", "necessary", 0.9});
  spec.regions.push_back({sufficiency_region(c, c_nonzero), "#1d3557", "sufficient", 0.85});
  if (const auto gap = gap_segment(c.profile, c_nonzero)) spec.segments.push_back({gap->first, gap->second, "undecided"});
  return spec;
}

}  // namespace maxregion

#endif  // MAXREGION_PLOT_HPP
