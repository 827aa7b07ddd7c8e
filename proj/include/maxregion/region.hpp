#ifndef MAXREGION_REGION_HPP
#define MAXREGION_REGION_HPP

// Exact convex polygons in the (1/p, 1/q) unit square with per-edge and
// per-vertex inclusion flags, and the specific regions built from them.

#include "maxregion/classify.hpp"

#include <optional>

namespace maxregion {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x.get_str() << "," << p.y.get_str() << ")";
}

/// a*x + b*y < c (strict) or <= c.
struct HalfPlane {
  Rational a, b, c;
  bool strict = true;

  static HalfPlane lt(Rational a, Rational b, Rational c) { return {std::move(a), std::move(b), std::move(c), true}; }
  static HalfPlane le(Rational a, Rational b, Rational c) { return {std::move(a), std::move(b), std::move(c), false}; }

  Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }
  bool contains(const Point& p) const {
    const int s = sgn(eval(p));
    return s < 0 || (s == 0 && !strict);
  }
  HalfPlane closure() const { return {a, b, c, false}; }
};

/// The line a*x + b*y = c with a display label.
struct Line {
  Rational a, b, c;
  std::string label;
  bool contains(const Point& p) const { return a * p.x + b * p.y == c; }
};

namespace detail {

inline Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

// p on the open segment (a, b); a != b.
inline bool on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0) return false;
  const Rational d = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  const Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return d > 0 && d < len;
}

}  // namespace detail

/// Convex polygon (possibly degenerate or empty) with counter-clockwise
/// vertices. Edge k joins vertex k to vertex k+1. The set it denotes is the
/// open interior together with every boundary feature (open edge or
/// vertex) whose flag is set.
class Region {
 public:
  Region() = default;

  /// Build from vertices in either orientation. Flags default to closed.
  /// Throws std::invalid_argument for non-convex input.
  static Region polygon(std::vector<Point> vertices, std::vector<bool> edge_closed = {},
                        std::vector<bool> vertex_in = {}) {
    const std::size_t n = vertices.size();
    if (edge_closed.empty()) edge_closed.assign(n, true);
    if (vertex_in.empty()) vertex_in.assign(n, true);
    if (edge_closed.size() != n || vertex_in.size() != n)
      throw std::invalid_argument("Region: flag count differs from vertex count");
    Region r;
    r.v_ = std::move(vertices);
    r.e_ = std::move(edge_closed);
    r.in_ = std::move(vertex_in);
    if (r.signed_area2() < 0) r.reverse();
    r.canonicalize();
    if (!r.is_convex()) throw std::invalid_argument("Region: polygon is not convex");
    return r;
  }

  static Region closed_polygon(std::vector<Point> vertices) { return polygon(std::move(vertices)); }

  static Region unit_square() {
    return closed_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }

  std::size_t size() const { return v_.size(); }
  bool is_empty() const { return v_.empty(); }
  const Point& vertex(std::size_t k) const { return v_.at(k); }
  bool edge_closed(std::size_t k) const { return e_.at(k); }
  bool vertex_in(std::size_t k) const { return in_.at(k); }
  const std::vector<Point>& vertices() const { return v_; }

  /// Twice the (non-negative) area.
  Rational area2() const { return signed_area2(); }
  bool has_area() const { return signed_area2() > 0; }

  /// Same polygon with every boundary feature included.
  Region closure() const {
    Region r = *this;
    std::fill(r.e_.begin(), r.e_.end(), true);
    std::fill(r.in_.begin(), r.in_.end(), true);
    r.canonicalize();
    return r;
  }

  bool contains(const Point& p) const {
    if (v_.empty()) return false;
    const std::size_t n = v_.size();
    bool on_feature = false, all_in = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (p == v_[k]) {
        on_feature = true;
        all_in = all_in && in_[k];
      } else if (n > 1 && v_[k] != v_[(k + 1) % n] && detail::on_open_segment(p, v_[k], v_[(k + 1) % n])) {
        on_feature = true;
        all_in = all_in && e_[k];
      }
    }
    if (on_feature) return all_in;
    if (!has_area()) return false;
    for (std::size_t k = 0; k < n; ++k)
      if (detail::cross(v_[k], v_[(k + 1) % n], p) <= 0) return false;
    return true;
  }

  /// Structural equality of canonical forms (equal as point sets).
  friend bool operator==(const Region& a, const Region& b) {
    return a.v_ == b.v_ && a.e_ == b.e_ && a.in_ == b.in_;
  }
  friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

  friend Region intersect(const Region& r, const HalfPlane& h);

 private:
  Rational signed_area2() const {
    Rational s = 0;
    const std::size_t n = v_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Point& p = v_[k];
      const Point& q = v_[(k + 1) % n];
      s += p.x * q.y - p.y * q.x;
    }
    return s;
  }

  void reverse() {
    const std::size_t n = v_.size();
    std::vector<Point> v(n);
    std::vector<bool> e(n), in(n);
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = v_[n - 1 - k];
      in[k] = in_[n - 1 - k];
      // Reversed edge k joins old vertices n-1-k and n-2-k.
      e[k] = e_[(2 * n - 2 - k) % n];
    }
    v_ = std::move(v);
    e_ = std::move(e);
    in_ = std::move(in);
  }

  bool is_convex() const {
    const std::size_t n = v_.size();
    if (n < 3) return true;
    for (std::size_t k = 0; k < n; ++k)
      if (detail::cross(v_[k], v_[(k + 1) % n], v_[(k + 2) % n]) < 0) return false;
    return true;
  }

  void erase_vertex(std::size_t k) {
    v_.erase(v_.begin() + static_cast<std::ptrdiff_t>(k));
    in_.erase(in_.begin() + static_cast<std::ptrdiff_t>(k));
    e_.erase(e_.begin() + static_cast<std::ptrdiff_t>(k));
  }

  void canonicalize() {
    // Merge coincident neighbours: a vertex is in if either copy is, and the
    // outgoing edge is that of the later copy.
    bool changed = true;
    while (changed && v_.size() > 1) {
      changed = false;
      for (std::size_t k = 0; k < v_.size() && v_.size() > 1; ++k) {
        const std::size_t nx = (k + 1) % v_.size();
        if (v_[k] != v_[nx]) continue;
        in_[nx] = in_[nx] || in_[k];
        erase_vertex(k);
        changed = true;
        break;
      }
    }
    // Drop collinear vertices strictly between their neighbours unless the
    // inclusion flags change there.
    changed = true;
    while (changed && v_.size() > 2) {
      changed = false;
      const std::size_t n = v_.size();
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t pv = (k + n - 1) % n, nx = (k + 1) % n;
        if (!detail::on_open_segment(v_[k], v_[pv], v_[nx])) continue;
        if (e_[pv] != e_[k] || e_[k] != in_[k]) continue;
        erase_vertex(k);
        changed = true;
        break;
      }
    }
    if (v_.size() == 2) {
      // A segment is traversed twice; a point of it belongs to the set only
      // if both traversals include it.
      const bool both = e_[0] && e_[1];
      e_[0] = e_[1] = both;
    }
    if (!has_area()) {
      const bool any = std::any_of(in_.begin(), in_.end(), [](bool b) { return b; }) ||
                       (v_.size() > 1 && std::any_of(e_.begin(), e_.end(), [](bool b) { return b; }));
      if (!any) {
        v_.clear();
        e_.clear();
        in_.clear();
      }
    }
    if (v_.size() == 1) e_[0] = false;
    // Start at the lexicographically smallest vertex.
    if (!v_.empty()) {
      const auto k = static_cast<std::ptrdiff_t>(std::min_element(v_.begin(), v_.end()) - v_.begin());
      std::rotate(v_.begin(), v_.begin() + k, v_.end());
      std::rotate(e_.begin(), e_.begin() + k, e_.end());
      std::rotate(in_.begin(), in_.begin() + k, in_.end());
    }
  }

  std::vector<Point> v_;
  std::vector<bool> e_;
  std::vector<bool> in_;
};

inline std::ostream& operator<<(std::ostream& os, const Region& r) {
  if (r.is_empty()) return os << "{}";
  os << "{";
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) os << " ";
    os << r.vertex(k) << (r.vertex_in(k) ? "*" : "o") << (r.edge_closed(k) ? " =" : " -");
  }
  return os << "}";
}

/// Clip a region by a half-plane (Sutherland-Hodgman, flag aware).
inline Region intersect(const Region& r, const HalfPlane& h) {
  struct Out {
    Point p;
    bool in;
    bool next;
  };
  const std::size_t n = r.v_.size();
  if (n == 0) return r;
  std::vector<Out> out;
  const bool open_line = !h.strict;
  auto crossing = [&](const Point& p, const Point& q, const Rational& sp, const Rational& sq) {
    const Rational t = sp / (sp - sq);
    return Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = r.v_[k];
    const Point& q = r.v_[(k + 1) % n];
    const Rational sp = h.eval(p), sq = h.eval(q);
    const bool e = r.e_[k];
    if (sp <= 0) {
      const bool vin = sp < 0 ? r.in_[k] : (r.in_[k] && open_line);
      if (sq <= 0) {
        out.push_back({p, vin, (sp == 0 && sq == 0) ? (e && open_line) : e});
      } else if (sp < 0) {
        out.push_back({p, vin, e});
        out.push_back({crossing(p, q, sp, sq), e && open_line, open_line});
      } else {
        out.push_back({p, vin, open_line});
      }
    } else if (sq < 0) {
      out.push_back({crossing(p, q, sp, sq), e && open_line, e});
    }
  }
  Region res;
  for (const auto& o : out) {
    res.v_.push_back(o.p);
    res.in_.push_back(o.in);
    res.e_.push_back(o.next);
  }
  res.canonicalize();
  return res;
}

inline Region intersect(Region r, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) r = intersect(r, h);
  return r;
}

namespace detail {

// Every point of the closed segment [a, b] that `include` selects (the
// open segment when `open_part`, the endpoints per flags) lies in r.
inline bool segment_in(const Point& a, const Point& b, const Region& r) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const std::size_t n = r.size();
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p = r.vertex(k);
    const Point& q = r.vertex((k + 1) % n);
    // Where the segment meets the line through edge k.
    const Rational ex = q.x - p.x, ey = q.y - p.y;
    const Rational den = dx * ey - dy * ex;
    if (den != 0) {
      const Rational t = ((p.x - a.x) * ey - (p.y - a.y) * ex) / den;
      if (t > 0 && t < 1) ts.push_back(t);
    }
    if (on_open_segment(p, a, b)) {
      const Rational t = dx != 0 ? (p.x - a.x) / dx : (p.y - a.y) / dy;
      ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  auto at = [&](const Rational& t) { return Point{a.x + t * dx, a.y + t * dy}; };
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (k > 0 && !r.contains(at(ts[k]))) return false;
    if (!r.contains(at((ts[k] + ts[k + 1]) / 2))) return false;
  }
  return true;
}

}  // namespace detail

/// a is a subset of b as point sets (b must be convex, which every Region is).
inline bool subset(const Region& a, const Region& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  if (a.has_area()) {
    if (!b.has_area()) return false;
    const Region cb = b.closure();
    for (const auto& v : a.vertices())
      if (!cb.contains(v)) return false;
  }
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a.vertex_in(k) && !b.contains(a.vertex(k))) return false;
    if (n > 1 && a.edge_closed(k) && !detail::segment_in(a.vertex(k), a.vertex((k + 1) % n), b)) return false;
  }
  return true;
}

/// closure(a) is contained in closure(b).
inline bool subset_closure(const Region& a, const Region& b) {
  if (a.is_empty()) return true;
  const Region cb = b.closure();
  for (const auto& v : a.vertices())
    if (!cb.contains(v)) return false;
  return true;
}

inline bool equal(const Region& a, const Region& b) { return a == b; }
inline bool equal_closure(const Region& a, const Region& b) { return a.closure() == b.closure(); }

// ---------------------------------------------------------------------------
// Specific regions
// ---------------------------------------------------------------------------

namespace detail {

// Open convex polygon plus the half-open diagonal from its first vertex
// (the origin, included) to its last (excluded). Vertices counter-clockwise.
inline Region with_half_open_diagonal(std::vector<Point> ccw) {
  const std::size_t n = ccw.size();
  std::vector<bool> edges(n, false), verts(n, false);
  edges[n - 1] = true;
  verts[0] = true;
  return Region::polygon(std::move(ccw), std::move(edges), std::move(verts));
}

inline Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// The quadrilateral O1 = (0,0), O4 = (3/5,1/5), O3 = (2/3,1/3),
/// O2 = (2/3,2/3): open, plus the diagonal O1O2 with O1 in and O2 out.
inline Region delta0() {
  using detail::R;
  return detail::with_half_open_diagonal({{R(0), R(0)}, {R(3, 5), R(1, 5)}, {R(2, 3), R(1, 3)}, {R(2, 3), R(2, 3)}});
}

/// Vertices P1..P5 of Delta_M (P5 only for M = 5).
struct DeltaMVertices {
  Point p1, p2, p3, p4;
  std::optional<Point> p5;
};

inline DeltaMVertices deltaM_vertices(unsigned M) {
  if (M < 3) throw UnsupportedM("M = " + std::to_string(M) + " < 3");
  const Rational m(M);
  DeltaMVertices d;
  d.p1 = {0, 0};
  const Rational diag = (m + 1) / (2 * m);
  d.p2 = {diag, diag};
  if (M >= 6) {
    d.p3 = {4 / (m + 2), 2 / (m + 2)};
  } else {
    d.p3 = {(2 * m + 4) / (5 * m + 2), (m + 2) / (5 * m + 2)};
  }
  if (M == 3) {
    d.p4 = {(3 * m + 6) / (8 * m + 4), (m + 2) / (8 * m + 4)};
  } else {
    d.p4 = {3 / (m + 2), 1 / (m + 2)};
  }
  if (M == 5) d.p5 = Point{Rational(1, 2), (m - 2) / (2 * (m + 2))};
  return d;
}

/// Delta_M: open polygon P1 P4 (P5) P3 P2 plus the half-open diagonal P1P2.
inline Region deltaM(unsigned M) {
  DeltaMVertices d = deltaM_vertices(M);
  std::vector<Point> ccw{d.p1, d.p4};
  if (d.p5) ccw.push_back(*d.p5);
  ccw.push_back(d.p3);
  ccw.push_back(d.p2);
  return detail::with_half_open_diagonal(std::move(ccw));
}

/// Scaling form (h+1)x - (h+1)y < 1 (c = 0) or shift form (h+1)x - y < 1.
inline HalfPlane height_halfplane(const Rational& h, bool c_nonzero, bool strict = true) {
  const Rational k = h + 1;
  HalfPlane hp{k, c_nonzero ? Rational(-1) : Rational(-k), Rational(1), strict};
  return hp;
}

/// Reference lines for Delta_M and the height constraint with parameter h.
inline std::vector<Line> reference_lines(unsigned M, const Rational& h) {
  const Rational m(M);
  return {
      {1, 0, (m + 1) / (2 * m), "L1"},
      {(3 * m + 2) / (m + 2), -1, 1, "L2"},
      {m / 2 + 1, -(m / 2 + 1), 1, "L3"},
      {1, -2, 0, "L4"},
      {1, -3, 0, "L5"},
      {h + 1, -(h + 1), 1, "L6"},
  };
}

namespace detail {

inline void require_regions(const Classification& c) {
  if (c.case_tag() != CaseTag::III)
    throw NotApplicable(std::string("case ") + to_string(c.case_tag()) + " has no region");
  if (c.profile.hessian_identically_zero) throw NotApplicable("Hessian determinant vanishes identically");
}

}  // namespace detail

/// Global sufficient region from the height profile.
inline Region sufficiency_region(const HeightProfile& profile, bool c_nonzero) {
  if (profile.case_tag != CaseTag::III) throw NotApplicable(std::string("case ") + to_string(profile.case_tag) + " has no region");
  if (profile.hessian_identically_zero) throw NotApplicable("Hessian determinant vanishes identically");
  Region base = profile.z_inclusion ? delta0() : deltaM(*profile.m_phi);
  return intersect(base, height_halfplane(profile.h_phi, c_nonzero));
}

/// Sufficient region for one sector.
inline Region per_sector_region(const SectorReport& s, unsigned m, bool c_nonzero) {
  if (s.type == SectorType::A) return intersect(delta0(), height_halfplane(*s.h, c_nonzero));
  return intersect(deltaM(*s.M), height_halfplane(make_rational(m, 2), c_nonzero));
}

/// Closed half-planes bounding closure(Delta0): x <= 3y, 2x - y <= 1,
/// x <= 2/3, y <= x.
inline std::vector<HalfPlane> delta0_closure_constraints() {
  return {HalfPlane::le(1, -3, 0), HalfPlane::le(2, -1, 1), HalfPlane::le(1, 0, Rational(2, 3)),
          HalfPlane::le(-1, 1, 0)};
}

/// Closed half-planes cutting one sector's necessary region out of the unit square.
inline std::vector<HalfPlane> necessary_constraints(const SectorReport& s, unsigned m, bool c_nonzero) {
  const Rational half_m = make_rational(m, 2);
  if (s.type == SectorType::A) {
    auto hs = delta0_closure_constraints();
    hs.push_back(height_halfplane(*s.h, c_nonzero, false));
    return hs;
  }
  const HalfPlane below_diag = HalfPlane::le(-1, 1, 0);  // y <= x
  const HalfPlane above_l5 = HalfPlane::le(1, -3, 0);    // x <= 3y
  std::vector<HalfPlane> hs{height_halfplane(half_m, c_nonzero, false), below_diag, above_l5};
  if (c_nonzero) return hs;
  const unsigned M = *s.M;
  const Rational mm(M);
  const HalfPlane l1 = HalfPlane::le(1, 0, (mm + 1) / (2 * mm));
  const HalfPlane l2 = HalfPlane::le((3 * mm + 2) / (mm + 2), -1, 1);
  const HalfPlane l3 = HalfPlane::le(mm / 2 + 1, -(mm / 2 + 1), 1);
  hs.push_back(l1);
  if (M >= 5) hs.push_back(l3);
  if (M <= 5) hs.push_back(l2);
  return hs;
}

/// Closed necessary region for one sector.
inline Region necessary_sector_region(const SectorReport& s, unsigned m, bool c_nonzero) {
  return intersect(Region::unit_square(), necessary_constraints(s, m, c_nonzero));
}

/// Intersection over sectors of the closed necessary regions. Without
/// sectors the Type A form with h = m/2 is used.
inline Region necessary_region(const std::vector<SectorReport>& sectors, unsigned m, bool c_nonzero) {
  Region r = Region::unit_square();
  if (sectors.empty()) {
    r = intersect(r, delta0_closure_constraints());
    return intersect(r, height_halfplane(make_rational(m, 2), c_nonzero, false));
  }
  for (const auto& s : sectors) r = intersect(r, necessary_constraints(s, m, c_nonzero));
  return r;
}

inline Region sufficiency_region(const Classification& c, bool c_nonzero) {
  detail::require_regions(c);
  return sufficiency_region(c.profile, c_nonzero);
}

inline Region necessary_region(const Classification& c, bool c_nonzero) {
  detail::require_regions(c);
  return necessary_region(c.sectors, c.m(), c_nonzero);
}

/// The open segment P2P3 of Delta_{M^Phi} on which the c = 0 result may
/// fail; present only when some sector is Type B and c = 0.
inline std::optional<std::pair<Point, Point>> gap_segment(const HeightProfile& profile, bool c_nonzero) {
  if (c_nonzero || profile.z_inclusion || !profile.m_phi) return std::nullopt;
  const auto d = deltaM_vertices(*profile.m_phi);
  return std::make_pair(d.p2, d.p3);
}

}  // namespace maxregion

#endif  // MAXREGION_REGION_HPP
