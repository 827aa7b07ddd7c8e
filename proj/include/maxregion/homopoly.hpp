#ifndef MAXREGION_HOMOPOLY_HPP
#define MAXREGION_HOMOPOLY_HPP

// Exact bivariate homogeneous polynomials Phi(x1, x2) of degree m.

#include "maxregion/error.hpp"
#include "maxregion/factor.hpp"
#include "maxregion/upoly.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <string_view>
#include <variant>

namespace maxregion {

/// One monomial c * x1^i * x2^j.
struct Term {
  unsigned i = 0;
  unsigned j = 0;
  Rational c;
};

/// Homogeneous polynomial of degree m with exact rational coefficients.
///
/// Coefficients are held densely by x2-exponent: slot j is the coefficient
/// of x1^(m-j) x2^j. The zero polynomial keeps a nominal degree so that,
/// e.g., the x1-derivative of x2^3 is "the zero form of degree 2".
class HomoPoly {
 public:
  HomoPoly() = default;
  HomoPoly(unsigned degree, std::vector<Rational> by_x2) : m_(degree), c_(std::move(by_x2)) {
    if (c_.size() != m_ + 1) c_.resize(m_ + 1, Rational(0));
  }

  static HomoPoly zero(unsigned degree) { return HomoPoly(degree, {}); }
  static HomoPoly monomial(Rational c, unsigned i, unsigned j) {
    HomoPoly p = zero(i + j);
    p.c_[j] = std::move(c);
    return p;
  }
  /// The form p(x1, x2) = x1^deg(q) q(x2/x1) of a univariate q(t).
  static HomoPoly homogenize(const QPoly& q, unsigned degree) {
    if (q.degree() > static_cast<int>(degree)) throw std::domain_error("homogenize: degree too small");
    return HomoPoly(degree, q.coeffs());
  }

  unsigned degree() const { return m_; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
  }

  /// Coefficient of x1^(m-j) x2^j.
  const Rational& by_x2(unsigned j) const { return c_.at(j); }
  Rational coeff(unsigned i, unsigned j) const { return (i + j == m_) ? c_[j] : Rational(0); }

  /// Nonzero monomials, x1-exponent descending.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (unsigned j = 0; j <= m_; ++j)
      if (c_[j] != 0) out.push_back({m_ - j, j, c_[j]});
    return out;
  }

  template <class X>
  X eval(const X& x1, const X& x2) const {
    // Horner in x2/x1 is not usable at x1 = 0, so use powers directly.
    X acc(0);
    for (unsigned j = 0; j <= m_; ++j) {
      if (c_[j] == 0) continue;
      acc += X(c_[j]) * ipow(x1, m_ - j) * ipow(x2, j);
    }
    return acc;
  }

  double eval_double(double x1, double x2) const {
    double acc = 0.0;
    for (unsigned j = 0; j <= m_; ++j) {
      if (c_[j] == 0) continue;
      acc += c_[j].get_d() * std::pow(x1, static_cast<double>(m_ - j)) * std::pow(x2, static_cast<double>(j));
    }
    return acc;
  }

  /// p(1, t).
  QPoly dehomogenize() const { return QPoly(c_); }

  /// Canonical text: monomials in descending x1 exponent, "c*x1^i*x2^j" with
  /// unit exponents and unit coefficients omitted; "0" for the zero form.
  std::string to_string() const {
    std::string s;
    for (const auto& t : terms()) {
      Rational mag = abs(t.c);
      if (t.c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      std::string mono;
      if (t.i > 0) mono += t.i == 1 ? "x1" : "x1^" + std::to_string(t.i);
      if (t.j > 0) {
        if (!mono.empty()) mono += "*";
        mono += t.j == 1 ? "x2" : "x2^" + std::to_string(t.j);
      }
      if (mono.empty())
        s += mag.get_str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.get_str() + "*" + mono;
    }
    return s.empty() ? "0" : s;
  }

  HomoPoly& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend HomoPoly operator*(HomoPoly p, const Rational& s) { return p *= s; }
  friend HomoPoly operator*(const Rational& s, HomoPoly p) { return p *= s; }

  friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) { return combine(a, b, 1); }
  friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return combine(a, b, -1); }
  friend HomoPoly operator-(HomoPoly a) { return a *= Rational(-1); }

  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    HomoPoly r = zero(a.m_ + b.m_);
    for (unsigned i = 0; i <= a.m_; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; j <= b.m_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// Equal as polynomials; zero forms compare equal regardless of nominal degree.
  friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
    const bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return az && bz;
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const HomoPoly& a, const HomoPoly& b) { return !(a == b); }

 private:
  template <class X>
  static X ipow(const X& x, unsigned e) {
    X r(1);
    for (unsigned k = 0; k < e; ++k) r *= x;
    return r;
  }

  static HomoPoly combine(const HomoPoly& a, const HomoPoly& b, int sign) {
    if (a.is_zero()) return sign > 0 ? b : -b;
    if (b.is_zero()) return a;
    if (a.m_ != b.m_) throw NotHomogeneous("sum of forms of degree " + std::to_string(a.m_) + " and " + std::to_string(b.m_));
    HomoPoly r = a;
    for (unsigned j = 0; j <= a.m_; ++j) r.c_[j] += sign > 0 ? b.c_[j] : Rational(-b.c_[j]);
    return r;
  }

  unsigned m_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

inline std::ostream& operator<<(std::ostream& os, const HomoPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

// General (not necessarily homogeneous) bivariate polynomial used while parsing.
using Sparse2 = std::map<std::pair<unsigned, unsigned>, Rational>;

inline void sparse_clean(Sparse2& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0)
      it = p.erase(it);
    else
      ++it;
  }
}

inline Sparse2 sparse_mul(const Sparse2& a, const Sparse2& b) {
  Sparse2 r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  sparse_clean(r);
  return r;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(normalize(text)) {}

  Sparse2 parse() {
    Sparse2 p = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 64;

  // Drops whitespace and maps the Unicode minus sign to '-'.
  static std::string normalize(std::string_view in) {
    std::string out;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (in.compare(k, 3, "\xE2\x88\x92") == 0) {
        out += '-';
        k += 2;
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(in[k]))) out += in[k];
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse2 expr() {
    Sparse2 acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        break;
      Sparse2 t = term();
      for (const auto& [e, c] : t) acc[e] += sign * c;
      first = false;
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    sparse_clean(acc);
    return acc;
  }

  Sparse2 term() {
    Sparse2 acc = factor();
    while (true) {
      if (eat('*')) {
        acc = sparse_mul(acc, factor());
      } else if (eat('/')) {
        Sparse2 d = factor();
        if (d.empty()) fail("division by zero");
        if (d.size() != 1 || d.begin()->first != std::make_pair(0u, 0u)) fail("division by a non-constant");
        Rational inv = 1 / d.begin()->second;
        for (auto& [e, c] : acc) c *= inv;
      } else {
        return acc;
      }
    }
  }

  Sparse2 factor() {
    Sparse2 base = primary();
    if (!eat('^')) return base;
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(digits));
    Sparse2 r{{{0, 0}, Rational(1)}};
    for (unsigned k = 0; k < e; ++k) r = sparse_mul(r, base);
    return r;
  }

  Sparse2 primary() {
    if (eat('(')) {
      Sparse2 inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (eat('x')) {
      if (eat('1')) return {{{1, 0}, Rational(1)}};
      if (eat('2')) return {{{0, 1}, Rational(1)}};
      fail("unknown variable (expected x1 or x2)");
    }
    std::string num = read_digits();
    if (num.empty()) {
      if (pos_ >= s_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    Integer n(num);
    Integer d(1);
    if (eat('/')) {
      std::string den = read_digits();
      if (den.empty()) fail("expected denominator");
      d = Integer(den);
      if (d == 0) fail("zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    Sparse2 r;
    if (q != 0) r[{0, 0}] = q;
    return r;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse "c*x1^i*x2^j + ..." (rational literals a/b, parentheses and
/// integer powers allowed) into a homogeneous polynomial.
inline HomoPoly parse(std::string_view text) {
  detail::Sparse2 sp = detail::PolyParser(text).parse();
  if (sp.empty()) throw ZeroPolynomial("input expands to 0");
  const unsigned m = sp.begin()->first.first + sp.begin()->first.second;
  HomoPoly p = HomoPoly::zero(m);
  std::vector<Rational> c(m + 1, Rational(0));
  for (const auto& [e, v] : sp) {
    if (e.first + e.second != m)
      throw NotHomogeneous("monomials of total degree " + std::to_string(m) + " and " +
                           std::to_string(e.first + e.second));
    c[e.second] = v;
  }
  return HomoPoly(m, std::move(c));
}

// ---------------------------------------------------------------------------
// Calculus and substitutions
// ---------------------------------------------------------------------------

/// Partial derivative in x1 (var = 1) or x2 (var = 2).
inline HomoPoly partial(const HomoPoly& p, int var) {
  if (var != 1 && var != 2) throw std::invalid_argument("partial: var must be 1 or 2");
  const unsigned m = p.degree();
  if (m == 0) return HomoPoly::zero(0);
  std::vector<Rational> c(m, Rational(0));
  for (unsigned j = 0; j <= m; ++j) {
    const Rational& v = p.by_x2(j);
    if (v == 0) continue;
    if (var == 1) {
      if (m - j > 0) c[j] = v * (m - j);
    } else if (j > 0) {
      c[j - 1] = v * j;
    }
  }
  return HomoPoly(m - 1, std::move(c));
}

/// Phi_11 * Phi_22 - Phi_12^2, a form of degree 2m - 4 (zero when m < 2).
inline HomoPoly hessian_det(const HomoPoly& p) {
  if (p.degree() < 2) return HomoPoly::zero(0);
  HomoPoly p1 = partial(p, 1), p2 = partial(p, 2);
  HomoPoly p11 = partial(p1, 1), p22 = partial(p2, 2), p12 = partial(p1, 2);
  return p11 * p22 - p12 * p12;
}

inline HomoPoly mul_x1(const HomoPoly& p) { return p * HomoPoly::monomial(Rational(1), 1, 0); }
inline HomoPoly mul_x2(const HomoPoly& p) { return p * HomoPoly::monomial(Rational(1), 0, 1); }

/// Phi(x2, x1).
inline HomoPoly swap(const HomoPoly& p) {
  const unsigned m = p.degree();
  std::vector<Rational> c(m + 1);
  for (unsigned j = 0; j <= m; ++j) c[j] = p.by_x2(m - j);
  return HomoPoly(m, std::move(c));
}

/// Phi(z1, z2 + lambda z1).
inline HomoPoly shear(const HomoPoly& p, const Rational& lambda) {
  const unsigned m = p.degree();
  std::vector<Rational> c(m + 1, Rational(0));
  // (z2 + lambda z1)^j = sum_k C(j,k) z2^k lambda^(j-k) z1^(j-k)
  for (unsigned j = 0; j <= m; ++j) {
    const Rational& v = p.by_x2(j);
    if (v == 0) continue;
    Integer binom = 1;
    for (unsigned k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * (j - k + 1) / k;
      Rational lp = 1;
      for (unsigned e = 0; e < j - k; ++e) lp *= lambda;
      c[k] += v * Rational(binom) * lp;
    }
  }
  return HomoPoly(m, std::move(c));
}

/// Phi(x1 + tau x2, x2).
inline HomoPoly shear_x1(const HomoPoly& p, const Rational& tau) { return swap(shear(swap(p), tau)); }

// ---------------------------------------------------------------------------
// Factorization and real root lines
// ---------------------------------------------------------------------------

/// One irreducible factor f(t) of p(1, t) / t^nu2 over Q.
struct LineFactor {
  QPoly poly;  // primitive, integer coefficients, positive leading coefficient
  unsigned multiplicity = 0;
  unsigned real_roots = 0;
};

/// p = leading * x1^nu1 * x2^nu2 * prod homog(f_k)^e_k.
struct Factorization {
  unsigned nu1 = 0;
  unsigned nu2 = 0;
  std::vector<LineFactor> factors;
  Rational leading;

  HomoPoly expand() const {
    HomoPoly r = HomoPoly::monomial(leading, nu1, nu2);
    for (const auto& f : factors) {
      HomoPoly h = HomoPoly::homogenize(f.poly, static_cast<unsigned>(f.poly.degree()));
      for (unsigned k = 0; k < f.multiplicity; ++k) r = r * h;
    }
    return r;
  }
};

inline Factorization factorize(const HomoPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cannot factor the zero form");
  const unsigned m = p.degree();
  Factorization out;
  unsigned lo = 0, hi = m;
  while (p.by_x2(lo) == 0) ++lo;
  while (p.by_x2(hi) == 0) --hi;
  out.nu2 = lo;
  out.nu1 = m - hi;
  std::vector<Rational> core;
  for (unsigned j = lo; j <= hi; ++j) core.push_back(p.by_x2(j));
  QPoly q(std::move(core));
  QFactorization qf = factor_over_q(q);
  out.leading = qf.unit;
  for (auto& f : qf.factors) {
    auto roots = static_cast<unsigned>(SturmSequence(f.poly).count_all());
    out.factors.push_back({f.poly, f.multiplicity, roots});
  }
  return out;
}

/// An algebraic slope: the unique real root of an irreducible `factor`
/// (degree >= 2) inside the open rational interval.
struct AlgebraicSlope {
  QPoly factor;
  IsolatingInterval interval;
  friend bool operator==(const AlgebraicSlope&, const AlgebraicSlope&) = default;
};

struct InfiniteSlope {
  friend bool operator==(const InfiniteSlope&, const InfiniteSlope&) = default;
};

/// The line x2 = lambda x1 through the origin (x1 = 0 when lambda is infinite).
struct RootLine {
  std::variant<Rational, AlgebraicSlope, InfiniteSlope> slope;
  unsigned mult_in_source = 0;

  bool is_infinite() const { return std::holds_alternative<InfiniteSlope>(slope); }
  bool is_rational() const { return std::holds_alternative<Rational>(slope); }
  bool is_algebraic() const { return std::holds_alternative<AlgebraicSlope>(slope); }
  const Rational& rational() const { return std::get<Rational>(slope); }
  const AlgebraicSlope& algebraic() const { return std::get<AlgebraicSlope>(slope); }

  /// Floating approximation of the slope (infinity for the vertical line).
  double approx() const {
    if (is_infinite()) return HUGE_VAL;
    if (is_rational()) return rational().get_d();
    const auto& a = algebraic();
    IsolatingInterval iv = refine(a.factor, a.interval, Rational(Integer(1), Integer(1) << 52));
    return Rational((iv.lo + iv.hi) / 2).get_d();
  }

  /// "0", "-1/2", "inf", or "interval[lo,hi] of f(t)".
  std::string slope_string() const {
    if (is_infinite()) return "inf";
    if (is_rational()) return rational().get_str();
    const auto& a = algebraic();
    return "interval[" + a.interval.lo.get_str() + "," + a.interval.hi.get_str() + "] of " + a.factor.to_string("t");
  }

  /// Same line (multiplicities ignored). Algebraic slopes compare by
  /// defining factor and interval overlap.
  bool same_line(const RootLine& o) const {
    if (is_infinite() || o.is_infinite()) return is_infinite() && o.is_infinite();
    if (is_rational() && o.is_rational()) return rational() == o.rational();
    if (is_algebraic() && o.is_algebraic()) {
      const auto& a = algebraic();
      const auto& b = o.algebraic();
      return a.factor == b.factor && a.interval.lo < b.interval.hi && b.interval.lo < a.interval.hi;
    }
    return false;
  }
};

namespace detail {

inline unsigned linear_multiplicity(QPoly q, const Rational& root) {
  unsigned k = 0;
  const QPoly lin{Rational(-root), Rational(1)};
  while (!q.is_zero() && q.eval(root) == 0) {
    q = q / lin;
    ++k;
  }
  return k;
}

inline unsigned factor_multiplicity(QPoly q, const QPoly& f) {
  unsigned k = 0;
  while (!q.is_zero()) {
    auto [quo, r] = divmod(q, f);
    if (!r.is_zero()) break;
    q = std::move(quo);
    ++k;
  }
  return k;
}

inline const Rational& lower(const RootLine& l) {
  return l.is_rational() ? l.rational() : l.algebraic().interval.lo;
}
inline const Rational& upper(const RootLine& l) {
  return l.is_rational() ? l.rational() : l.algebraic().interval.hi;
}

}  // namespace detail

/// Multiplicity of the line's linear factor in p (0 if p does not vanish on it).
inline unsigned mult_along(const HomoPoly& p, const RootLine& line) {
  if (p.is_zero()) throw ZeroPolynomial("multiplicity along a line of the zero form");
  if (line.is_infinite()) {
    unsigned hi = p.degree();
    while (p.by_x2(hi) == 0) --hi;
    return p.degree() - hi;
  }
  if (line.is_rational()) return detail::linear_multiplicity(p.dehomogenize(), line.rational());
  return detail::factor_multiplicity(p.dehomogenize(), line.algebraic().factor);
}

/// All real lines through the origin on which p vanishes, ordered by slope
/// with the vertical line last. Algebraic isolating intervals are refined
/// until pairwise disjoint and free of the rational slopes.
inline std::vector<RootLine> real_root_lines(const HomoPoly& p) {
  Factorization f = factorize(p);
  std::vector<RootLine> finite;
  if (f.nu2 > 0) finite.push_back({Rational(0), f.nu2});
  for (const auto& lf : f.factors) {
    if (lf.poly.degree() == 1) {
      Rational root = -lf.poly.coeff(0) / lf.poly.coeff(1);
      finite.push_back({root, lf.multiplicity});
      continue;
    }
    for (const auto& iv : isolate_real_roots(lf.poly)) finite.push_back({AlgebraicSlope{lf.poly, iv}, lf.multiplicity});
  }
  // Separate overlapping intervals by bisection.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < finite.size(); ++a) {
      for (std::size_t b = 0; b < finite.size(); ++b) {
        if (a == b || !finite[a].is_algebraic()) continue;
        auto& alg = std::get<AlgebraicSlope>(finite[a].slope);
        const Rational& lo = detail::lower(finite[b]);
        const Rational& hi = detail::upper(finite[b]);
        const bool overlap = finite[b].is_rational() ? (alg.interval.lo < lo && lo < alg.interval.hi)
                                                     : (alg.interval.lo < hi && lo < alg.interval.hi);
        if (!overlap) continue;
        alg.interval = refine(alg.factor, alg.interval, (alg.interval.hi - alg.interval.lo) / 2);
        changed = true;
      }
    }
  }
  std::sort(finite.begin(), finite.end(),
            [](const RootLine& a, const RootLine& b) {
              // An algebraic root lies strictly above its interval's lower end.
              const int c = cmp(detail::lower(a), detail::lower(b));
              return c != 0 ? c < 0 : (a.is_rational() && !b.is_rational());
            });
  if (f.nu1 > 0) finite.push_back({InfiniteSlope{}, f.nu1});
  return finite;
}

}  // namespace maxregion

#endif  // MAXREGION_HOMOPOLY_HPP
