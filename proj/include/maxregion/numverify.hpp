#ifndef MAXREGION_NUMVERIFY_HPP
#define MAXREGION_NUMVERIFY_HPP

// Independent numerical and symbolic checks of a classification: Euler and
// shear identities, the flatness order of level curves along Type B lines,
// and the scaling exponents of Knapp-type box volumes.

#include "maxregion/classify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "json.hpp"

namespace maxregion {

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return make_rational(num(rng), den(rng));
}

}  // namespace detail

/// (m-1) Phi_i = x1 Phi_i1 + x2 Phi_i2 for i = 1, 2, symbolically and at
/// `trials` random rational points.
inline bool euler_check(const HomoPoly& p, unsigned trials, std::uint64_t seed) {
  if (p.degree() < 2) throw DegreeTooSmall("Euler check needs m >= 2");
  const Rational m1(p.degree() - 1);
  std::mt19937_64 rng(seed);
  for (int i : {1, 2}) {
    const HomoPoly pi = partial(p, i);
    const HomoPoly lhs = pi * m1;
    const HomoPoly rhs = mul_x1(partial(pi, 1)) + mul_x2(partial(pi, 2));
    if (lhs != rhs) return false;
    for (unsigned k = 0; k < trials; ++k) {
      const Rational x1 = detail::random_rational(rng), x2 = detail::random_rational(rng);
      if (m1 * pi.eval(x1, x2) != x1 * partial(pi, 1).eval(x1, x2) + x2 * partial(pi, 2).eval(x1, x2)) return false;
    }
  }
  return true;
}

/// p(r x) = r^m p(x) at random rational r and x.
inline bool homogeneity_probe(const HomoPoly& p, unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < trials; ++k) {
    Rational r = detail::random_rational(rng);
    if (r == 0) r = 1;
    const Rational x1 = detail::random_rational(rng), x2 = detail::random_rational(rng);
    Rational rm = 1;
    for (unsigned e = 0; e < p.degree(); ++e) rm *= r;
    if (p.eval(Rational(r * x1), Rational(r * x2)) != rm * p.eval(x1, x2)) return false;
  }
  return true;
}

/// H(f(x1, x2 + lambda x1)) = (Hf)(x1, x2 + lambda x1) and the same for the
/// shear x1 -> x1 + tau x2.
inline bool shear_check(const HomoPoly& f, const Rational& lambda, const Rational& tau) {
  return hessian_det(shear(f, lambda)) == shear(hessian_det(f), lambda) &&
         hessian_det(shear_x1(f, tau)) == shear_x1(hessian_det(f), tau);
}

// ---------------------------------------------------------------------------
// Flatness of the level curve along a Type B line
// ---------------------------------------------------------------------------

struct FlatnessConfig {
  double s_max = 0.1;
  unsigned n_grid = 41;
  double newton_tol = 1e-12;
  unsigned fit_degree = 10;
  double coeff_tol = 1e-6;
  unsigned retries = 4;  // halvings of s_max after a Newton failure
};

struct LevelSetSample {
  double lambda = 0;   // shear (0 for the vertical line, after swapping)
  double tangent = 0;  // kappa: Psi here is the sheared curve's Psi plus kappa * z2
  double z2_scale = 1; // mu: s measures mu^-1 z2
  int sign = 1;        // level sign * Phi_lambda(z1, mu s) / |Phi_lambda(1, 0)| = 1, so Psi(0) = 1
  double s_max = 0;    // after any shrinking
  std::vector<std::pair<double, double>> grid;  // (s, Psi(s))
  std::vector<double> fit_coeffs;               // in powers of s
  unsigned order = 0;
};

namespace detail {

using Real = long double;

inline Real to_real(const Rational& r) {
  return static_cast<Real>(r.get_num().get_d()) / static_cast<Real>(r.get_den().get_d());
}

// c (by z2 exponent) of f(z1, z2 + lambda z1).
inline std::vector<Real> shear_real(const std::vector<Real>& c, Real lambda) {
  const std::size_t m = c.size() - 1;
  std::vector<Real> out(m + 1, 0.0L);
  for (std::size_t j = 0; j <= m; ++j) {
    if (c[j] == 0) continue;
    Real binom = 1;
    for (std::size_t k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * static_cast<Real>(j - k + 1) / static_cast<Real>(k);
      out[k] += c[j] * binom * std::pow(lambda, static_cast<Real>(j - k));
    }
  }
  return out;
}

// c of f(z1 + tau z2, z2).
inline std::vector<Real> shear_x1_real(std::vector<Real> c, Real tau) {
  std::reverse(c.begin(), c.end());
  c = shear_real(c, tau);
  std::reverse(c.begin(), c.end());
  return c;
}

// Coefficients (by z2 exponent) of Phi(z1, z2 + lambda z1), or Phi(z2, z1)
// for the vertical line, divided by |coefficient of z1^m|.
inline std::vector<Real> sheared_coeffs(const HomoPoly& p, const RootLine& line, Real& lam) {
  const unsigned m = p.degree();
  std::vector<Real> out(m + 1, 0.0L);
  if (line.is_infinite() || line.is_rational()) {
    const HomoPoly q = line.is_infinite() ? swap(p) : shear(p, line.rational());
    for (unsigned k = 0; k <= m; ++k) out[k] = to_real(q.by_x2(k));
    lam = line.is_infinite() ? 0 : to_real(line.rational());
  } else {
    const auto& alg = line.algebraic();
    const IsolatingInterval iv = refine(alg.factor, alg.interval, Rational(Integer(1), Integer(1) << 50));
    lam = to_real((iv.lo + iv.hi) / 2);
    for (unsigned j = 0; j <= m; ++j) out[j] = to_real(p.by_x2(j));
    out = shear_real(out, lam);
  }
  const Real scale = std::abs(out[0]);
  if (scale == 0) throw NotApplicable("Phi vanishes along slope " + line.slope_string());
  for (auto& c : out) c /= scale;
  return out;
}

// mu with max_k |c_k| mu^k = 1 over k >= 1; substituting z2 -> mu z2 keeps the
// level curve's Taylor coefficients and radius of convergence of order one.
inline Real balancing_scale(const std::vector<Real>& c) {
  Real r = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) r = std::max(r, std::pow(std::abs(c[k]), 1.0L / static_cast<Real>(k)));
  return r == 0 ? 1 : 1 / r;
}

inline Real eval_form(const std::vector<Real>& c, Real z1, Real z2) {
  const std::size_t m = c.size() - 1;
  Real acc = 0;
  for (std::size_t k = 0; k <= m; ++k)
    if (c[k] != 0) acc += c[k] * std::pow(z1, static_cast<Real>(m - k)) * std::pow(z2, static_cast<Real>(k));
  return acc;
}

inline Real eval_d1(const std::vector<Real>& c, Real z1, Real z2) {
  const std::size_t m = c.size() - 1;
  Real acc = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (c[k] != 0)
      acc += c[k] * static_cast<Real>(m - k) * std::pow(z1, static_cast<Real>(m - k - 1)) * std::pow(z2, static_cast<Real>(k));
  return acc;
}

// Newton for sign * Phi(z1, s) = 1 from `start`; iterates until the step
// stalls once the residual is under tol.
inline bool newton(const std::vector<Real>& c, int sign, Real s, Real start, double tol, Real& out) {
  Real z = start;
  for (int it = 0; it < 80; ++it) {
    const Real f = sign * eval_form(c, z, s) - 1;
    const Real df = sign * eval_d1(c, z, s);
    if (df == 0 || !std::isfinite(static_cast<double>(f))) return false;
    const Real step = f / df;
    z -= step;
    if (std::abs(static_cast<double>(sign * eval_form(c, z, s) - 1)) <= tol && std::abs(step) <= 1e-18L * std::abs(z)) {
      out = z;
      return true;
    }
  }
  const Real f = sign * eval_form(c, z, s) - 1;
  if (std::abs(static_cast<double>(f)) <= tol) {
    out = z;
    return true;
  }
  return false;
}

}  // namespace detail

/// Order of the first nonvanishing derivative (k >= 2) at 0 of the level
/// curve z1 = Psi(z2) of Phi sheared so the line becomes z2 = 0. The line must
/// not be a zero line of Phi.
inline LevelSetSample flatness_sample(const HomoPoly& p, const RootLine& line, const FlatnessConfig& cfg = {}) {
  using detail::Real;
  if (mult_along(p, line) != 0) throw NotApplicable("flatness order needs a line where Phi does not vanish");
  if (cfg.n_grid < 3) throw std::invalid_argument("n_grid must be at least 3");
  LevelSetSample out;
  Real lam = 0;
  auto c = detail::sheared_coeffs(p, line, lam);
  out.lambda = static_cast<double>(lam);
  // Remove the tangential slope: Psi gains the linear term tangent * s only.
  const Real kappa = c[1] / (static_cast<Real>(c.size() - 1) * c[0]);
  c = detail::shear_x1_real(c, -kappa);
  c[1] = 0;
  out.tangent = static_cast<double>(kappa);
  const Real mu = detail::balancing_scale(c);
  out.z2_scale = static_cast<double>(mu);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] *= std::pow(mu, static_cast<Real>(k));
  out.sign = c[0] > 0 ? 1 : -1;
  const Real z0 = 1;

  double s_max = cfg.s_max;
  std::vector<Real> s_vals, psi;
  for (unsigned attempt = 0;; ++attempt) {
    s_vals.assign(cfg.n_grid, 0);
    psi.assign(cfg.n_grid, 0);
    const unsigned mid = cfg.n_grid / 2;
    bool ok = true;
    for (unsigned k = 0; k < cfg.n_grid; ++k)
      s_vals[k] = static_cast<Real>(s_max) * (2.0L * k / (cfg.n_grid - 1) - 1.0L);
    // Continuation outward from the grid point nearest 0.
    ok = detail::newton(c, out.sign, s_vals[mid], z0, cfg.newton_tol, psi[mid]);
    for (unsigned k = mid + 1; ok && k < cfg.n_grid; ++k)
      ok = detail::newton(c, out.sign, s_vals[k], psi[k - 1], cfg.newton_tol, psi[k]);
    for (unsigned k = mid; ok && k-- > 0;) ok = detail::newton(c, out.sign, s_vals[k], psi[k + 1], cfg.newton_tol, psi[k]);
    if (ok) {
      for (unsigned k = 0; k < cfg.n_grid; ++k)
        ok = ok && psi[k] > 0 && std::abs(psi[k] - z0) < 0.5L * z0;
    }
    if (ok) break;
    if (attempt >= cfg.retries)
      throw SolverDiverged("Newton failed on the level curve at slope " + line.slope_string());
    s_max /= 2;
  }
  out.s_max = s_max;

  const unsigned deg = std::min(cfg.fit_degree, cfg.n_grid - 1);
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> V(cfg.n_grid, deg + 1);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> rhs(cfg.n_grid);
  for (unsigned r = 0; r < cfg.n_grid; ++r) {
    const Real u = s_vals[r] / static_cast<Real>(s_max);
    Real pw = 1;
    for (unsigned k = 0; k <= deg; ++k) {
      V(r, k) = pw;
      pw *= u;
    }
    rhs(r) = psi[r];
    out.grid.emplace_back(static_cast<double>(s_vals[r]), static_cast<double>(psi[r]));
  }
  Eigen::Matrix<Real, Eigen::Dynamic, 1> a = V.householderQr().solve(rhs);
  Real scale = 1;
  for (unsigned k = 0; k <= deg; ++k) {
    out.fit_coeffs.push_back(static_cast<double>(a(k) / scale));
    scale *= static_cast<Real>(s_max);
  }
  for (unsigned k = 2; k <= deg; ++k) {
    if (std::abs(out.fit_coeffs[k]) > cfg.coeff_tol) {
      out.order = k;
      return out;
    }
  }
  throw OrderUndetected("all fitted coefficients below " + std::to_string(cfg.coeff_tol) + " at slope " +
                        line.slope_string());
}

inline unsigned flatness_order(const HomoPoly& p, const RootLine& line, const FlatnessConfig& cfg = {}) {
  return flatness_sample(p, line, cfg).order;
}

// ---------------------------------------------------------------------------
// Knapp-type volumes
// ---------------------------------------------------------------------------

/// Scales for the volume fits; all strictly decreasing inside (0, eps1/8).
struct KnappConfig {
  Rational eps1 = make_rational(1, 2);
  std::vector<Rational> eps2_series;   // Type A
  std::vector<Rational> delta_series;  // Type B
  std::uint64_t seed = 0;

  static KnappConfig defaults() {
    KnappConfig k;
    for (int e = 30; e <= 50; e += 2) k.eps2_series.push_back(make_rational(1, Integer(1) << e));
    for (int e = 6; e <= 14; ++e) k.delta_series.push_back(make_rational(1, Integer(1) << e));
    return k;
  }

  void validate() const {
    for (const auto* series : {&eps2_series, &delta_series}) {
      if (series->size() < 2) throw std::invalid_argument("KnappConfig: need at least two scales");
      for (std::size_t k = 0; k < series->size(); ++k) {
        const Rational& v = (*series)[k];
        if (v <= 0 || v >= eps1 / 8) throw std::invalid_argument("KnappConfig: scale outside (0, eps1/8)");
        if (k > 0 && !(v < (*series)[k - 1])) throw std::invalid_argument("KnappConfig: scales must decrease");
      }
    }
  }
};

struct ScalingFit {
  double slope = 0;
  double expected = 0;
  double residual = 0;  // max |log value - affine fit|
  std::vector<std::pair<double, double>> samples;  // (log scale, log measure)
};

struct TypeAFit : ScalingFit {
  unsigned exact_order = 0;  // lowest power of eps2 in the exact integral
};

namespace detail {

// Natural log of |r| for rationals far outside the double range.
inline double log_abs(const Rational& r) {
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::log(std::abs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

inline ScalingFit fit_line(std::vector<std::pair<double, double>> xy) {
  ScalingFit f;
  const double n = static_cast<double>(xy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - f.slope * sx) / n;
  for (auto [x, y] : xy) f.residual = std::max(f.residual, std::abs(y - (icpt + f.slope * x)));
  f.samples = std::move(xy);
  return f;
}

// Phi moved so that the line becomes x2 = 0.
inline HomoPoly to_horizontal(const HomoPoly& p, const RootLine& line) {
  if (line.is_infinite()) return swap(p);
  if (line.is_rational()) return shear(p, line.rational());
  throw NotApplicable("algebraic slope " + line.slope_string() + " has no exact frame");
}

}  // namespace detail

/// |T(eps2)| = |int_1^2 int int t^2 G dx2 dx1 dt| with G = Phi - x1 Phi_1 - x2 Phi_2
/// over eps1/2 <= x1 <= eps1, eps2/2 <= x2 <= eps2 in the frame where the line is
/// x2 = 0. Exact; returned as a polynomial in eps2 (coefficient k of eps2^k).
inline std::vector<Rational> typeA_integral(const HomoPoly& p, const RootLine& line, const Rational& eps1) {
  const HomoPoly phi = detail::to_horizontal(p, line);
  const HomoPoly g = phi - mul_x1(partial(phi, 1)) - mul_x2(partial(phi, 2));
  const unsigned m = p.degree();
  const Rational t_int = make_rational(7, 3);  // int_1^2 t^2 dt
  std::vector<Rational> poly(m + 2, Rational(0));
  for (unsigned j = 0; j <= m; ++j) {
    const Rational& gj = g.by_x2(j);
    if (gj == 0) continue;
    const unsigned e1 = m - j + 1;
    Rational hi = 1, lo = 1;
    for (unsigned k = 0; k < e1; ++k) {
      hi *= eps1;
      lo *= eps1 / 2;
    }
    const Rational x1_part = (hi - lo) / e1;
    Rational half_pow = 1;
    for (unsigned k = 0; k <= j; ++k) half_pow /= 2;
    const Rational x2_part = (1 - half_pow) / (j + 1);  // times eps2^(j+1)
    poly[j + 1] += t_int * gj * x1_part * x2_part;
  }
  return poly;
}

/// Fit of log|T| against log eps2; the exponent should be n + 1.
inline TypeAFit typeA_volume_fit(const HomoPoly& p, const RootLine& line, const KnappConfig& cfg) {
  cfg.validate();
  const unsigned n = mult_along(p, line);
  if (n == 0) throw NotApplicable("Type A volume fit needs a zero line of Phi");
  const auto poly = typeA_integral(p, line, cfg.eps1);
  TypeAFit out;
  out.exact_order = 0;
  while (out.exact_order < poly.size() && poly[out.exact_order] == 0) ++out.exact_order;
  if (out.exact_order == poly.size()) throw DegenerateIntegrand("integral vanishes identically at slope " + line.slope_string());
  std::vector<std::pair<double, double>> xy;
  for (const auto& eps2 : cfg.eps2_series) {
    Rational val = 0, pw = 1;
    for (const auto& c : poly) {
      val += c * pw;
      pw *= eps2;
    }
    if (val == 0) throw DegenerateIntegrand("integral vanishes at eps2 = " + eps2.get_str());
    xy.emplace_back(detail::log_abs(eps2), detail::log_abs(val));
  }
  static_cast<ScalingFit&>(out) = detail::fit_line(std::move(xy));
  out.expected = n + 1;
  return out;
}

/// Measure of the union over t in [t0, t1] of the boxes R_t, split into the
/// box itself and the part swept out by moving it along t*a.
struct BoxSweepMeasure {
  double box_term = 0;
  double sweep_term = 0;
  double total() const { return box_term + sweep_term; }
};

struct TypeBFrame {
  HomoPoly phi;        // normalized so the line is x2 = 0 and d2 Phi(1, 0) = 0
  Rational kappa;      // x1-shear applied after moving the line (0 if none)
  unsigned M = 0;      // nu2(H phi) + 2
};

/// Move the line to x2 = 0 and remove the tangential slope so the frame
/// e1 = (1, 0, k), e2 = (0, 1, 0), e3 = (-k, 0, 1) applies.
inline TypeBFrame typeB_frame(const HomoPoly& p, const RootLine& line) {
  HomoPoly phi0 = detail::to_horizontal(p, line);
  if (phi0.by_x2(0) == 0) throw FrameDegenerate("Phi vanishes along slope " + line.slope_string());
  TypeBFrame f;
  const Rational d1 = phi0.by_x2(0) * phi0.degree();  // d1 Phi0 (1, 0)
  const Rational d2 = phi0.by_x2(1);                  // d2 Phi0 (1, 0)
  f.kappa = d2 / d1;
  f.phi = f.kappa == 0 ? phi0 : shear_x1(phi0, Rational(-f.kappa));
  if (f.phi.by_x2(1) != 0) throw InternalInconsistency("tangential slope not removed");
  const HomoPoly h = hessian_det(f.phi);
  if (h.is_zero()) throw FrameDegenerate("Hessian vanishes identically");
  unsigned nu2 = 0;
  while (h.by_x2(nu2) == 0) ++nu2;
  f.M = nu2 + 2;
  return f;
}

inline BoxSweepMeasure typeB_measure(const TypeBFrame& f, const Rational& eps1, double delta, double t0 = 1.0,
                                     double t1 = 2.0) {
  const unsigned m = f.phi.degree();
  const double e1 = eps1.get_d();
  const double c0 = f.phi.by_x2(0).get_d();
  const double k = m * std::pow(e1, m - 1) * c0;
  const double norm2 = 1 + k * k;
  const double M = f.M;
  const double w1 = std::pow(delta, M / 2), w2 = delta, w3 = std::pow(delta, M);
  // a = (eps1, 0, eps1^m c0); d = (t1 - t0) a expressed against e1 and e3.
  const double a3 = std::pow(e1, m) * c0;
  const double d1 = (t1 - t0) * (e1 + k * a3);
  const double d3 = (t1 - t0) * (-k * e1 + a3);
  BoxSweepMeasure out;
  out.box_term = 8 * w1 * w2 * w3 / norm2;
  out.sweep_term = 4 * (std::abs(d1) * w2 * w3 + std::abs(d3) * w1 * w2) / norm2;
  return out;
}

struct TypeBFit : ScalingFit {
  unsigned M = 0;
  Rational kappa;
};

/// Fit of log |union R_t| against log delta; the exponent should be M/2 + 1.
inline TypeBFit typeB_box_sweep(const HomoPoly& p, const RootLine& line, const KnappConfig& cfg,
                                std::optional<unsigned> expected_M = std::nullopt) {
  cfg.validate();
  const TypeBFrame f = typeB_frame(p, line);
  if (expected_M && *expected_M != f.M)
    throw InternalInconsistency("normalized frame has M = " + std::to_string(f.M) + ", expected " +
                                std::to_string(*expected_M));
  std::vector<std::pair<double, double>> xy;
  for (const auto& d : cfg.delta_series) {
    const double delta = d.get_d();
    xy.emplace_back(std::log(delta), std::log(typeB_measure(f, cfg.eps1, delta).total()));
  }
  TypeBFit out;
  static_cast<ScalingFit&>(out) = detail::fit_line(std::move(xy));
  out.expected = f.M / 2.0 + 1;
  out.M = f.M;
  out.kappa = f.kappa;
  return out;
}

// ---------------------------------------------------------------------------
// Verification report
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  std::string status;  // pass | fail | skipped
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  nlohmann::ordered_json tolerance;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  FlatnessConfig flatness;
  KnappConfig knapp = KnappConfig::defaults();
  unsigned euler_trials = 8;
  double typeA_tol = 1e-6;      // absolute, on the fitted exponent
  double typeB_rel_tol = 0.05;  // relative, on the fitted exponent
};

struct VerificationReport {
  std::string polynomial;
  std::vector<Check> checks;
  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
  }
};

namespace detail {

inline Check bool_check(std::string name, bool ok) {
  return {std::move(name), ok ? "pass" : "fail", true, ok, nullptr};
}

inline Check skipped(std::string name, nlohmann::ordered_json expected, const std::string& why) {
  return {std::move(name), "skipped", std::move(expected), why, nullptr};
}

}  // namespace detail

inline VerificationReport verify(const Classification& c, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.polynomial = c.phi.to_string();
  const HomoPoly& p = c.phi;
  std::mt19937_64 rng(opt.seed);
  auto sub_seed = [&] { return rng(); };

  rep.checks.push_back(detail::bool_check("euler_identity", euler_check(p, opt.euler_trials, sub_seed())));
  rep.checks.push_back(detail::bool_check("homogeneity_probe", homogeneity_probe(p, opt.euler_trials, sub_seed())));
  {
    const Rational lam = detail::random_rational(rng), tau = detail::random_rational(rng);
    rep.checks.push_back(detail::bool_check("hessian_shear_covariance", shear_check(p, lam, tau)));
  }

  for (const auto& s : c.sectors) {
    const std::string at = " slope=" + s.line.slope_string();
    if (s.type == SectorType::B) {
      const std::string name = "flatness_order" + at;
      try {
        const unsigned order = flatness_order(p, s.line, opt.flatness);
        rep.checks.push_back({name, order == *s.M ? "pass" : "fail", *s.M, order, 0});
      } catch (const Error& e) {
        rep.checks.push_back({name, "fail", *s.M, e.what(), 0});
      }
      const std::string vname = "typeB_volume_exponent" + at;
      const double expected = *s.M / 2.0 + 1;
      if (s.line.is_algebraic()) {
        rep.checks.push_back(detail::skipped(vname, expected, "algebraic slope"));
        continue;
      }
      try {
        const TypeBFit fit = typeB_box_sweep(p, s.line, opt.knapp, *s.M);
        const bool ok = std::abs(fit.slope - expected) <= opt.typeB_rel_tol * expected;
        rep.checks.push_back({vname, ok ? "pass" : "fail", expected, fit.slope, opt.typeB_rel_tol});
      } catch (const Error& e) {
        rep.checks.push_back({vname, "fail", expected, e.what(), opt.typeB_rel_tol});
      }
    } else {
      const std::string name = "typeA_volume_exponent" + at;
      const double expected = s.n + 1.0;
      if (s.line.is_algebraic()) {
        rep.checks.push_back(detail::skipped(name, expected, "algebraic slope"));
        continue;
      }
      try {
        const TypeAFit fit = typeA_volume_fit(p, s.line, opt.knapp);
        const bool ok = std::abs(fit.slope - expected) <= opt.typeA_tol && fit.exact_order == s.n + 1;
        rep.checks.push_back({name, ok ? "pass" : "fail", expected, fit.slope, opt.typeA_tol});
      } catch (const Error& e) {
        rep.checks.push_back({name, "fail", expected, e.what(), opt.typeA_tol});
      }
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["polynomial"] = r.polynomial;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["tolerance"] = c.tolerance;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace maxregion

#endif  // MAXREGION_NUMVERIFY_HPP
