// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed below.

#include "maxregion/numverify.hpp"
#include "maxregion/plot.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace maxregion;
using maxregion::testing::load_data;

namespace {

constexpr double kFlatnessCoeffTol = 1e-6;
constexpr double kTypeATol = 1e-6;
constexpr double kTypeBRelTol = 0.05;
constexpr double kAnchorTol = 1e-6;

const std::vector<std::string> kSuite{"x1^3+x2^3",  "x1^2*x2^2",     "x2^2*(x1^2+x2^2)",
                                      "x1^4+x2^4", "x1*x2*(x2-x1)", "x1^2+x2^2"};

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char timing[96];
  if (limit_s > 0) {
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, limit_s);
    if (secs >= limit_s) {
      r.ok = false;
      r.detail += " (too slow)";
    }
  } else {
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
  }
  if (!r.ok) ++failures;
  std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << r.detail << " [" << timing << "]"
            << std::endl;
}

const SectorReport* sector_with_slope(const Classification& c, const std::string& slope) {
  for (const auto& s : c.sectors)
    if (s.line.slope_string() == slope) return &s;
  return nullptr;
}

// c z1^m + z2^M P(z1, z2) with P(1, 0) != 0, sheared by lambda: the line of
// slope -lambda is of Type B with flatness M by construction.
struct ConstructedTypeB {
  HomoPoly phi;
  std::string slope;
  unsigned M = 0;
};

ConstructedTypeB constructed_type_b(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(3, 8), coef(-5, 5), lead(1, 3);
  const unsigned m = deg(rng);
  std::uniform_int_distribution<unsigned> flat(3, m);
  const unsigned M = flat(rng);
  std::vector<Rational> pc(m - M + 1);
  for (auto& x : pc) x = coef(rng);
  if (pc[0] == 0) pc[0] = 1;
  const HomoPoly base = HomoPoly::monomial(Rational(lead(rng)), m, 0) + HomoPoly::monomial(Rational(1), 0, M) * HomoPoly(m - M, pc);
  const Rational lambda = detail::random_rational(rng, 4);
  return {shear(base, lambda), Rational(-lambda).get_str(), M};
}

Outcome classification_suite() {
  const auto oracle = load_data("classify_oracle.json");
  int agree = 0;
  std::string first_diff;
  for (const auto& want : oracle["suite"]) {
    const std::string text = want["polynomial"];
    const std::string diff = maxregion::testing::compare_with_oracle(classify(parse(text)), want);
    if (diff.empty())
      ++agree;
    else if (first_diff.empty())
      first_diff = text + ": " + diff;
  }
  const int total = static_cast<int>(oracle["suite"].size());
  return {total == 6 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " match the oracle" +
                                            (first_diff.empty() ? "" : "; " + first_diff)};
}

Outcome height_identity() {
  std::mt19937_64 rng(20240601);
  int checked = 0, bad = 0, with_type_a = 0;
  std::string first;
  while (checked < 250) {
    const auto kp = maxregion::testing::random_product(rng, 10, 4);
    if (detect_case(kp.phi) != CaseTag::III) continue;
    ++checked;
    // Height from the known factor multiplicities, independent of the classifier.
    unsigned ordd = 0;
    for (const auto& [line, mult] : kp.lines) ordd = std::max(ordd, mult);
    const Rational half_m = make_rational(kp.phi.degree(), 2);
    const Rational h_phi = ordd > half_m ? Rational(ordd) : half_m;
    std::optional<Rational> max_a;
    for (const auto& s : sector_reports(kp.phi))
      if (s.type == SectorType::A) max_a = max_a ? std::max(*max_a, *s.h) : *s.h;
    if (max_a) ++with_type_a;
    const bool ok = max_a ? *max_a == h_phi : h_phi == half_m;
    if (!ok && bad++ == 0) first = kp.phi.to_string();
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " products (" +
                        std::to_string(with_type_a) + " with a Type A sector)" + (first.empty() ? "" : "; first failure " + first)};
}

Outcome flatness_orders() {
  FlatnessConfig cfg;
  cfg.coeff_tol = kFlatnessCoeffTol;
  int suite_lines = 0, random_lines = 0, bad = 0;
  std::string first;
  for (const auto& text : kSuite) {
    const Classification c = classify(parse(text));
    for (const auto& s : c.sectors) {
      if (s.type != SectorType::B) continue;
      ++suite_lines;
      const unsigned order = flatness_order(c.phi, s.line, cfg);
      if (order != s.omega + 2 && bad++ == 0) first = text + " slope " + s.line.slope_string();
    }
  }
  std::mt19937_64 rng(77);
  while (random_lines < 20) {
    const ConstructedTypeB t = constructed_type_b(rng);
    const Classification c = classify(t.phi);
    const SectorReport* s = sector_with_slope(c, t.slope);
    if (!s || s->type != SectorType::B) {
      if (bad++ == 0) first = t.phi.to_string() + ": constructed line not a Type B sector";
      ++random_lines;
      continue;
    }
    ++random_lines;
    const unsigned order = flatness_order(c.phi, s->line, cfg);
    if ((order != s->omega + 2 || order != t.M) && bad++ == 0)
      first = t.phi.to_string() + " slope " + t.slope + ": order " + std::to_string(order) + ", omega+2 = " +
              std::to_string(s->omega + 2);
  }
  return {bad == 0 && suite_lines == 6, std::to_string(suite_lines) + " suite + " + std::to_string(random_lines) +
                                            " random Type B lines, " + std::to_string(bad) + " mismatches, coeff_tol 1e-6" +
                                            (first.empty() ? "" : "; first " + first)};
}

Outcome polygon_identity() {
  const std::vector<std::pair<unsigned, unsigned>> pairs{{3, 3}, {4, 3}, {4, 4}, {5, 4}, {6, 5}, {8, 6}, {12, 8}};
  // {y <= x < 3y}
  const Region wedge = intersect(Region::unit_square(), {HalfPlane::le(Rational(-1), Rational(1), Rational(0)),
                                                         HalfPlane::lt(Rational(1), Rational(-3), Rational(0))});
  int ok = 0;
  std::string first;
  for (const auto& [m, M] : pairs) {
    const HalfPlane height = HalfPlane::lt(make_rational(m, 2) + 1, Rational(-1), Rational(1));
    const Region lhs = intersect(deltaM(M), height);
    const Region rhs = intersect(wedge, height);
    if (equal_closure(lhs, rhs))
      ++ok;
    else if (first.empty())
      first = "(m, M) = (" + std::to_string(m) + ", " + std::to_string(M) + ")";
  }
  return {ok == 7, std::to_string(ok) + "/7 (m, M) pairs agree up to closure" + (first.empty() ? "" : "; first " + first)};
}

Outcome shear_exactness() {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> deg(2, 6), coef(-9, 9);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = deg(rng);
    std::vector<Rational> c(m + 1);
    for (auto& x : c) x = make_rational(coef(rng), 1 + std::abs(coef(rng)));
    if (c[0] == 0 && c[m] == 0) c[0] = 1;
    const Rational lambda = detail::random_rational(rng), tau = detail::random_rational(rng);
    if (shear_check(HomoPoly(m, c), lambda, tau)) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 random (f, lambda, tau), deg f <= 6, exact"};
}

Outcome knapp_exponents() {
  const KnappConfig cfg = KnappConfig::defaults();
  struct Line {
    HomoPoly phi;
    RootLine line;
    unsigned n;
  };
  std::vector<Line> type_a;
  for (const char* text : {"x1^2*x2^2", "x2^2*(x1^2+x2^2)"}) {
    const Classification c = classify(parse(text));
    for (const auto& s : c.sectors)
      if (s.type == SectorType::A && !s.line.is_algebraic()) type_a.push_back({c.phi, s.line, s.n});
  }
  std::mt19937_64 rng(4242);
  while (type_a.size() < 10) {
    const auto kp = maxregion::testing::random_product(rng, 8, 4);
    if (detect_case(kp.phi) != CaseTag::III) continue;
    for (const auto& s : sector_reports(kp.phi))
      if (s.type == SectorType::A && !s.line.is_algebraic() && type_a.size() < 10) type_a.push_back({kp.phi, s.line, s.n});
  }
  double worst_a = 0;
  for (const auto& t : type_a) {
    const TypeAFit fit = typeA_volume_fit(t.phi, t.line, cfg);
    double err = std::abs(fit.slope - (t.n + 1.0));
    if (fit.exact_order != t.n + 1) err = std::numeric_limits<double>::infinity();
    worst_a = std::max(worst_a, err);
  }

  std::vector<std::pair<std::string, std::string>> type_b{
      {"x1^3+x2^3", "0"}, {"x1^3+x2^3", "inf"}, {"x1^4+x2^4", "0"}, {"x1^4+x2^4", "inf"}, {"x1^3+(x2-3*x1)^3", "3"}};
  double worst_b = 0;
  for (const auto& [text, slope] : type_b) {
    const Classification c = classify(parse(text));
    const SectorReport* s = sector_with_slope(c, slope);
    if (!s || s->type != SectorType::B) return {false, text + " has no Type B line of slope " + slope};
    const TypeBFit fit = typeB_box_sweep(c.phi, s->line, cfg, *s->M);
    const double expected = *s->M / 2.0 + 1;
    worst_b = std::max(worst_b, std::abs(fit.slope - expected) / expected);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "Type A: %zu lines, max |slope - (n+1)| = %.2e (tol 1e-6); Type B: %zu lines, max rel err %.2e (tol 5%%)",
                type_a.size(), worst_a, type_b.size(), worst_b);
  return {type_a.size() == 10 && worst_a <= kTypeATol && worst_b <= kTypeBRelTol, buf};
}

Outcome sharpness_containment() {
  int ok = 0, total = 0;
  std::string first;
  for (const auto& text : kSuite) {
    const Classification c = classify(parse(text));
    for (bool nz : {false, true}) {
      ++total;
      if (subset(sufficiency_region(c, nz), necessary_region(c, nz).closure()))
        ++ok;
      else if (first.empty())
        first = text + (nz ? ", c != 0" : ", c = 0");
    }
  }
  return {ok == total && total == 12,
          std::to_string(ok) + "/" + std::to_string(total) + " (polynomial, c) pairs" + (first.empty() ? "" : "; first " + first)};
}

Outcome spherical_coincidence() {
  const Point o4{make_rational(3, 5), make_rational(1, 5)};
  const HalfPlane clip = height_halfplane(make_rational(3, 2), false);
  const bool on_line = clip.eval(o4) == 0;
  const Region d0 = delta0();
  const Region d1 = intersect(d0, clip);
  auto sorted = [](std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const bool same_vertices = sorted(d1.vertices()) == sorted(d0.vertices());
  // Flag changes may only touch O4 or the edges meeting it.
  bool flags_ok = same_vertices && d1.size() == d0.size();
  int changes = 0;
  if (flags_ok) {
    for (std::size_t k = 0; k < d0.size(); ++k) {
      const std::size_t j = static_cast<std::size_t>(
          std::find(d1.vertices().begin(), d1.vertices().end(), d0.vertex(k)) - d1.vertices().begin());
      const Point& next = d0.vertex((k + 1) % d0.size());
      const bool touches_o4 = d0.vertex(k) == o4 || next == o4;
      if (d0.vertex_in(k) != d1.vertex_in(j)) {
        ++changes;
        flags_ok = flags_ok && d0.vertex(k) == o4;
      }
      if (d0.edge_closed(k) != d1.edge_closed(j)) {
        ++changes;
        flags_ok = flags_ok && touches_o4;
      }
    }
  }
  return {on_line && same_vertices && flags_ok,
          std::string("O4 on (5/2)(x-y)=1: ") + (on_line ? "yes" : "no") + "; vertex sets equal: " +
              (same_vertices ? "yes" : "no") + "; flag changes: " + std::to_string(changes) + (flags_ok ? "" : " (outside O4)")};
}

Outcome figure_reproduction() {
  double worst = 0;
  int nesting_ok = 0, nesting_total = 0;
  // Heights.
  const std::vector<Rational> hs{make_rational(3, 2), Rational(2), Rational(3)};
  const PlotSpec heights = figure_height_family(hs, false);
  const auto hpaths = maxregion::testing::region_paths(render(heights));
  if (hpaths.size() != heights.regions.size()) return {false, "height figure path count"};
  for (std::size_t k = 0; k < hpaths.size(); ++k)
    worst = std::max(worst, maxregion::testing::anchor_error(hpaths[k], heights.regions[k].region));
  // regions[1..3] are h = 3/2, 2, 3: each later one sits inside the previous.
  auto nested = [&](const Region& inner, const Region& outer, const maxregion::testing::RenderedPath& inner_path) {
    ++nesting_total;
    bool ok = subset(inner, outer);
    for (const auto& [x, y] : inner_path.anchors) {
      // Decoded anchors, rounded to the 6-digit grid, must lie in the outer closure up to that rounding.
      const Rational px(x), py(y);
      bool near = outer.closure().contains({px, py});
      for (int dx = -1; dx <= 1 && !near; ++dx)
        for (int dy = -1; dy <= 1 && !near; ++dy)
          near = outer.closure().contains({px + make_rational(dx, 1000000), py + make_rational(dy, 1000000)});
      ok = ok && near;
    }
    if (ok) ++nesting_ok;
  };
  for (std::size_t k = 2; k < heights.regions.size(); ++k)
    nested(heights.regions[k].region, heights.regions[k - 1].region, hpaths[k]);
  // Delta_M for M = 3..6.
  std::vector<Region> dms;
  std::vector<maxregion::testing::RenderedPath> dpaths;
  for (unsigned M = 3; M <= 6; ++M) {
    const auto paths = maxregion::testing::region_paths(render(figure_deltaM(M)));
    if (paths.empty()) return {false, "Delta_M figure has no region path"};
    worst = std::max(worst, maxregion::testing::anchor_error(paths[0], deltaM(M)));
    dms.push_back(deltaM(M));
    dpaths.push_back(paths[0]);
  }
  for (std::size_t k = 1; k < dms.size(); ++k) nested(dms[k], dms[k - 1], dpaths[k]);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max anchor error %.2e (tol 1e-6); nesting %d/%d", worst, nesting_ok, nesting_total);
  return {worst <= kAnchorTol && nesting_ok == nesting_total && nesting_total == 5, buf};
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(MAXREGION_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  VerifyOptions opt;
  opt.seed = 2718;
  std::string first, second;
  for (const auto& text : kSuite) first += dump(to_json(verify(classify(parse(text)), opt)));
  for (const auto& text : kSuite) second += dump(to_json(verify(classify(parse(text)), opt)));
  std::string cli_a, cli_b;
  for (const auto& text : kSuite) cli_a += run_cli("verify '" + text + "' --seed 2718");
  for (const auto& text : kSuite) cli_b += run_cli("verify '" + text + "' --seed 2718");
  const bool ok = first == second && !first.empty() && cli_a == cli_b && cli_a == first;
  return {ok, "library reports " + std::string(first == second ? "identical" : "differ") + ", CLI reports " +
                  (cli_a == cli_b ? "identical" : "differ") + ", CLI == library: " + (cli_a == first ? "yes" : "no") +
                  " (" + std::to_string(first.size()) + " bytes)"};
}

}  // namespace

int main() {
  criterion(1, "classification suite matches the CAS oracle", 1, classification_suite);
  criterion(2, "max Type A height equals h_Phi on random products", 30, height_identity);
  criterion(3, "flatness order equals omega + 2 on Type B lines", 60, flatness_orders);
  criterion(4, "Delta_M and the wedge agree under (m/2+1)x - y < 1", 1, polygon_identity);
  criterion(5, "Hessian commutes with shears", 10, shear_exactness);
  criterion(6, "Knapp volume exponents", 60, knapp_exponents);
  criterion(7, "sufficiency region inside closure of necessary region", 1, sharpness_containment);
  criterion(8, "h = 3/2 clip coincides with Delta0", 0, spherical_coincidence);
  criterion(9, "figure anchors and nesting", 2, figure_reproduction);
  criterion(10, "verify reports are byte-identical across runs", 0, determinism);
  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
