#ifndef MAXREGION_TESTS_SUPPORT_HPP
#define MAXREGION_TESTS_SUPPORT_HPP

// Helpers shared by the unit tests and the acceptance runner.

#include "maxregion/serialize.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <regex>
#include <sstream>

namespace maxregion::testing {

inline nlohmann::json load_data(const std::string& file) {
  std::ifstream in(std::string(MAXREGION_TEST_DATA) + "/" + file);
  if (!in) throw std::runtime_error("missing test data " + file);
  return nlohmann::json::parse(in);
}

/// A product of real linear factors and irreducible quadratics with known
/// multiplicities along each rational line.
struct KnownProduct {
  HomoPoly phi;
  std::vector<std::pair<RootLine, unsigned>> lines;  // rational or vertical
};

inline KnownProduct random_product(std::mt19937_64& rng, unsigned max_degree = 10, int max_mult = 3) {
  std::uniform_int_distribution<int> pick(0, 9), small(-4, 4), den(1, 3), mult(1, max_mult);
  KnownProduct out;
  out.phi = HomoPoly::monomial(Rational(1 + pick(rng) % 3), 0, 0);
  std::vector<Rational> used;
  bool have_vertical = false;
  unsigned vertical_mult = 0;
  while (out.phi.degree() < 2 || (out.phi.degree() < max_degree && pick(rng) < 7)) {
    const int kind = pick(rng);
    unsigned e = static_cast<unsigned>(mult(rng));
    if (out.phi.degree() + e > max_degree) e = 1;
    if (out.phi.degree() + e > max_degree) break;
    HomoPoly f;
    if (kind < 5) {
      Rational a(small(rng), den(rng));
      a.canonicalize();
      if (std::find(used.begin(), used.end(), a) != used.end()) continue;
      used.push_back(a);
      f = HomoPoly(1, {Rational(-a), Rational(1)});  // x2 - a x1
      out.lines.push_back({RootLine{a, 0}, e});
    } else if (kind < 7) {
      if (have_vertical) continue;
      have_vertical = true;
      vertical_mult = e;
      f = HomoPoly::monomial(Rational(1), 1, 0);
    } else {
      if (out.phi.degree() + 2 * e > max_degree) e = 1;
      if (out.phi.degree() + 2 * e > max_degree) continue;
      // x2^2 + b x1 x2 + c x1^2 with b^2 < 4c
      const int b = small(rng);
      const int c = b * b / 4 + 1 + pick(rng) % 3;
      f = HomoPoly(2, {Rational(c), Rational(b), Rational(1)});
    }
    for (unsigned k = 0; k < e; ++k) out.phi = out.phi * f;
  }
  if (have_vertical) out.lines.push_back({RootLine{InfiniteSlope{}, 0}, vertical_mult});
  return out;
}

inline std::string describe_slope(const nlohmann::json& s) {
  return s.is_string() ? s.get<std::string>() : s.dump();
}

/// Compare a classification (as JSON) with an oracle entry. Returns an empty
/// string on agreement, otherwise a description of the first difference.
inline std::string compare_with_oracle(const Classification& c, const nlohmann::json& want) {
  const Json got = to_json(c);
  std::ostringstream err;
  for (const char* key : {"case", "m", "h_phi", "ordd_phi", "m_phi", "z_inclusion"}) {
    if (nlohmann::json::parse(got[key].dump()) != want[key]) {
      err << key << ": got " << got[key].dump() << ", want " << want[key].dump();
      return err.str();
    }
  }
  if (got["sectors"].size() != want["sectors"].size()) {
    err << "sector count " << got["sectors"].size() << " vs " << want["sectors"].size();
    return err.str();
  }
  for (std::size_t k = 0; k < c.sectors.size(); ++k) {
    const auto& s = c.sectors[k];
    const auto& w = want["sectors"][k];
    const auto& g = got["sectors"][k];
    for (const char* key : {"type", "n", "omega", "M", "h"}) {
      if (nlohmann::json::parse(g[key].dump()) != w[key]) {
        err << "sector " << k << " " << key << ": got " << g[key].dump() << ", want " << w[key].dump();
        return err.str();
      }
    }
    const auto& ws = w["slope"];
    if (ws.is_string()) {
      if (g["slope"].get<std::string>() != ws.get<std::string>()) {
        err << "sector " << k << " slope " << g["slope"] << " vs " << ws;
        return err.str();
      }
      continue;
    }
    // Algebraic: same minimal polynomial and the isolating interval holds
    // the reference root.
    if (!s.line.is_algebraic()) {
      err << "sector " << k << " expected an algebraic slope " << describe_slope(ws);
      return err.str();
    }
    std::vector<Rational> coeffs;
    for (const auto& v : ws["minpoly"]) coeffs.emplace_back(v.get<std::string>());
    for (auto& v : coeffs) v.canonicalize();
    const auto& alg = s.line.algebraic();
    const double root = ws["approx"].get<double>();
    if (alg.factor != QPoly(coeffs) || !(alg.interval.lo.get_d() < root && root < alg.interval.hi.get_d())) {
      err << "sector " << k << " slope " << s.line.slope_string() << " vs " << ws.dump();
      return err.str();
    }
  }
  return {};
}

struct RenderedPath {
  std::string label;
  std::vector<std::pair<double, double>> anchors;
};

/// Region paths (class="region") of a rendered SVG with their anchors in
/// data coordinates.
inline std::vector<RenderedPath> region_paths(const std::string& svg) {
  std::vector<RenderedPath> out;
  const std::regex path(R"re(<path class="region" data-label="([^"]*)" d="([^"]*)")re");
  const std::regex pair(R"((-?\d+\.\d+) (-?\d+\.\d+))");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator(); ++it) {
    RenderedPath p;
    p.label = (*it)[1];
    const std::string d = (*it)[2];
    for (auto jt = std::sregex_iterator(d.begin(), d.end(), pair); jt != std::sregex_iterator(); ++jt)
      p.anchors.emplace_back(std::stod((*jt)[1]), std::stod((*jt)[2]));
    out.push_back(std::move(p));
  }
  return out;
}

/// Largest distance between a rendered anchor and the exact vertex, or
/// infinity when the counts differ.
inline double anchor_error(const RenderedPath& p, const Region& r) {
  if (p.anchors.size() != r.size()) return std::numeric_limits<double>::infinity();
  double err = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    err = std::max(err, std::abs(p.anchors[k].first - r.vertex(k).x.get_d()));
    err = std::max(err, std::abs(p.anchors[k].second - r.vertex(k).y.get_d()));
  }
  return err;
}

}  // namespace maxregion::testing

#endif  // MAXREGION_TESTS_SUPPORT_HPP
