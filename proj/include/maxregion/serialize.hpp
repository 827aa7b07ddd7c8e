#ifndef MAXREGION_SERIALIZE_HPP
#define MAXREGION_SERIALIZE_HPP

// JSON views of classification results and regions. Key order is fixed
// (ordered_json) so serialized output is byte-stable.

#include "maxregion/classify.hpp"
#include "maxregion/region.hpp"

#include "json.hpp"

namespace maxregion {

using Json = nlohmann::ordered_json;

/// Reduced "p/q" (or "p" for integers).
inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline Json to_json(const SectorReport& s) {
  Json j;
  j["slope"] = s.line.slope_string();
  j["type"] = to_string(s.type);
  j["n"] = s.n;
  j["omega"] = s.omega;
  j["M"] = s.M ? Json(*s.M) : Json(nullptr);
  j["h"] = s.h ? Json(rational_string(*s.h)) : Json(nullptr);
  return j;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["polynomial"] = c.phi.to_string();
  j["case"] = to_string(c.case_tag());
  j["m"] = c.m();
  j["h_phi"] = rational_string(c.profile.h_phi);
  j["ordd_phi"] = c.profile.ordd_phi;
  j["m_phi"] = c.profile.m_phi ? Json(*c.profile.m_phi) : Json(nullptr);
  j["z_inclusion"] = c.profile.z_inclusion;
  j["hessian_identically_zero"] = c.profile.hessian_identically_zero;
  Json sectors = Json::array();
  for (const auto& s : c.sectors) sectors.push_back(to_json(s));
  j["sectors"] = std::move(sectors);
  if (!c.notice.empty()) j["notice"] = c.notice;
  return j;
}

inline Json to_json(const Point& p) { return Json::array({rational_string(p.x), rational_string(p.y)}); }

inline Json to_json(const Region& r) {
  Json j;
  Json verts = Json::array(), edges = Json::array(), vflags = Json::array();
  for (std::size_t k = 0; k < r.size(); ++k) {
    verts.push_back(to_json(r.vertex(k)));
    edges.push_back(r.edge_closed(k) ? "closed" : "open");
    vflags.push_back(r.vertex_in(k) ? "closed" : "open");
  }
  j["vertices"] = std::move(verts);
  j["edge_flags"] = std::move(edges);
  j["vertex_flags"] = std::move(vflags);
  return j;
}

/// Sufficiency and necessary regions for one sign of c, with the undecided
/// boundary segment (null when there is none).
inline Json region_report(const Classification& c, bool c_nonzero) {
  Json j;
  j["polynomial"] = c.phi.to_string();
  j["case"] = to_string(c.case_tag());
  j["c"] = c_nonzero ? "nonzero" : "zero";
  j["sufficiency"] = to_json(sufficiency_region(c, c_nonzero));
  j["necessary"] = to_json(necessary_region(c, c_nonzero));
  const auto gap = gap_segment(c.profile, c_nonzero);
  j["gap_segment"] = gap ? Json::array({to_json(gap->first), to_json(gap->second)}) : Json(nullptr);
  return j;
}

/// Serialized form used by every command: two-space indent, one trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace maxregion

#endif  // MAXREGION_SERIALIZE_HPP
