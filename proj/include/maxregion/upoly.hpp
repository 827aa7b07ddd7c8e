#ifndef MAXREGION_UPOLY_HPP
#define MAXREGION_UPOLY_HPP

// Dense univariate polynomials over Z and Q, with the pieces of classical
// computer algebra the classifier needs: Euclidean division, gcd, Yun's
// square-free decomposition, Sturm sequences and real root isolation.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxregion {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Dense polynomial in one variable, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class Coeff>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(Coeff v) { return UPoly(std::vector<Coeff>{std::move(v)}); }
  static UPoly monomial(Coeff v, std::size_t k) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[k] = std::move(v);
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  const Coeff& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return UPoly(std::move(d));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UPoly operator*(UPoly a, const Coeff& s) { return a *= s; }
  friend UPoly operator*(const Coeff& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Human-readable form in variable `var`, highest degree first, e.g. "2*t^2-1".
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Coeff& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      Coeff mag = abs(v);
      if (v < 0)
        os << "-";
      else if (!first)
        os << "+";
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using QPoly = UPoly<Rational>;
using ZPoly = UPoly<Integer>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const UPoly<Coeff>& p) {
  return os << p.to_string();
}

/// Euclidean division over Q: returns (quotient, remainder).
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lb;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

inline QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
inline QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

inline bool divides(const QPoly& d, const QPoly& a) { return (a % d).is_zero(); }

inline QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

/// Monic gcd over Q (zero when both inputs are zero).
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Yun's algorithm. Returns monic a_1, ..., a_k (some possibly 1) with
/// f = lc(f) * a_1 * a_2^2 * ... * a_k^k and the a_i pairwise coprime and
/// square-free. Requires deg f >= 1.
inline std::vector<QPoly> squarefree_decomposition(const QPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<QPoly> out;
  QPoly a = monic(f);
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = a / c;
  QPoly y = b / c;
  QPoly z = y - w.derivative();
  while (w.degree() > 0) {
    QPoly g = gcd(w, z);
    out.push_back(g);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// Multiply through by the lcm of denominators and divide out the content;
/// the result has integer coefficients, gcd 1, and a positive leading coefficient.
inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  ints.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    Integer n = v.get_num() * (den / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& n : ints) out.emplace_back(Integer(n / content));
  return QPoly(std::move(out));
}

inline ZPoly to_zpoly(const QPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw std::domain_error("to_zpoly: non-integral coefficient");
    c.push_back(v.get_num());
  }
  return ZPoly(std::move(c));
}

inline QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

inline int sign_of(const Rational& r) { return sgn(r); }

/// Sturm sequence of a polynomial over Q; counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("Sturm sequence of zero polynomial");
    seq_.push_back(f);
    if (f.degree() < 1) return;
    seq_.push_back(f.derivative());
    while (true) {
      QPoly r = seq_[seq_.size() - 2] % seq_.back();
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& p : seq_) signs.push_back(sign_of(p.eval(x)));
    return count_changes(signs);
  }

  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& p : seq_) {
      int s = sign_of(p.leading());
      if (!positive && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_changes(signs);
  }

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }

  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

  const std::vector<QPoly>& polys() const { return seq_; }

 private:
  static int count_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }
  std::vector<QPoly> seq_;
};

/// Open interval (lo, hi) with rational endpoints that are not roots.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Strict upper bound on the absolute value of every complex root.
inline Rational cauchy_bound(const QPoly& f) {
  Rational m = 0;
  const Rational& lc = f.leading();
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = abs(f.coeffs()[static_cast<std::size_t>(k)] / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

namespace detail {

// A split point inside (lo, hi) that is not a root of f.
inline Rational nonroot_split(const QPoly& f, const Rational& lo, const Rational& hi) {
  for (int denom = 2;; ++denom) {
    for (int num = 1; num < denom; ++num) {
      Rational t(num, denom);
      t.canonicalize();
      Rational x = lo + (hi - lo) * t;
      if (f.eval(x) != 0) return x;
    }
  }
}

inline void isolate_rec(const QPoly& f, const SturmSequence& s, const Rational& lo, const Rational& hi, int n,
                        std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = nonroot_split(f, lo, hi);
  int left = s.count(lo, mid);
  isolate_rec(f, s, lo, mid, left, out);
  isolate_rec(f, s, mid, hi, n - left, out);
}

}  // namespace detail

/// Isolating intervals for the real roots of a square-free polynomial, in
/// increasing order. Each interval contains exactly one root and its
/// endpoints are not roots.
inline std::vector<IsolatingInterval> isolate_real_roots(const QPoly& f) {
  std::vector<IsolatingInterval> out;
  if (f.degree() < 1) return out;
  SturmSequence s(f);
  Rational b = cauchy_bound(f);
  detail::isolate_rec(f, s, -b, b, s.count(-b, b), out);
  return out;
}

/// Bisect an isolating interval of a square-free f until hi - lo <= width.
inline IsolatingInterval refine(const QPoly& f, IsolatingInterval iv, const Rational& width) {
  int slo = sign_of(f.eval(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rational mid = detail::nonroot_split(f, iv.lo, iv.hi);
    int sm = sign_of(f.eval(mid));
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

}  // namespace maxregion

#endif  // MAXREGION_UPOLY_HPP
