#ifndef MAXREGION_FACTOR_HPP
#define MAXREGION_FACTOR_HPP

// Irreducible factorization of univariate polynomials over Q.
//
// Square-free parts come from Yun's decomposition (upoly.hpp); each
// primitive square-free part is factored by Zassenhaus: Cantor-Zassenhaus
// modulo a small prime, multifactor quadratic Hensel lifting to p^k above
// the Mignotte bound, then recombination of modular factors by subsets.

#include "maxregion/upoly.hpp"

#include <cstdint>
#include <numeric>
#include <random>

namespace maxregion {

namespace modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // lowest degree first, trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
inline u64 inv(u64 a, u64 p) { return powm(a, p - 2, p); }

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  const int db = deg(b);
  if (deg(a) < db) return {Poly{}, a};
  Poly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
  const u64 il = inv(b.back(), p);
  for (int k = deg(a); k >= db; --k) {
    u64 c = mulm(a[static_cast<std::size_t>(k)], il, p);
    if (!c) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k - db + j);
      a[idx] = (a[idx] + p - mulm(c, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

inline Poly make_monic(Poly a, u64 p) {
  if (a.empty()) return a;
  const u64 il = inv(a.back(), p);
  for (auto& v : a) v = mulm(v, il, p);
  return a;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

/// s*a + t*b = 1 (mod p) for coprime a, b.
inline std::pair<Poly, Poly> ext_gcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant
  const u64 il = inv(r0[0], p);
  for (auto& v : s0) v = mulm(v, il, p);
  for (auto& v : t0) v = mulm(v, il, p);
  return {s0, t0};
}

inline Poly powmod(Poly base, const Integer& e, const Poly& m, u64 p) {
  Poly r{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

inline Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = mulm(a[k], k % p, p);
  trim(d);
  return d;
}

inline Poly reduce(const ZPoly& f, u64 p) {
  Poly r;
  r.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    Integer m = c % Integer(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

// Equal-degree splitting of a monic square-free g whose irreducible factors
// all have degree d (Cantor-Zassenhaus, p odd).
inline void equal_degree_split(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(deg(g)));
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly h = gcd(a, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    h = gcd(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic square-free polynomial over F_p.
inline std::vector<Poly> factor_squarefree(Poly f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly x{0, 1};
  Poly h = x;
  const Integer pp(static_cast<unsigned long>(p));
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = powmod(h, pp, f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(make_monic(f, p));
  return out;
}

}  // namespace modp

namespace detail {

// Polynomials with integer coefficients reduced into (-M/2, M/2].
using ZVec = std::vector<Integer>;

inline void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r > m / 2) r -= m;
  return r;
}

inline ZVec zmod(ZVec a, const Integer& m) {
  for (auto& v : a) v = symmetric_mod(v, m);
  ztrim(a);
  return a;
}

inline ZVec zadd(ZVec a, const ZVec& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zmod(std::move(a), m);
}

inline ZVec zsub(ZVec a, const ZVec& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zmod(std::move(a), m);
}

inline ZVec zmul(const ZVec& a, const ZVec& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zmod(std::move(r), m);
}

// Division by a monic polynomial modulo m.
inline std::pair<ZVec, ZVec> zdivmod_monic(ZVec a, const ZVec& b, const Integer& m) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {ZVec{}, a};
  ZVec q(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (int k = da; k >= db; --k) {
    Integer c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

inline ZVec lift(const modp::Poly& a) {
  ZVec r;
  r.reserve(a.size());
  for (auto v : a) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw std::logic_error("inverse_mod: not invertible");
  return r;
}

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) to the same
// relations modulo m^2, with h monic and deg g, deg h preserved.
inline void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Integer& m) {
  const Integer m2 = m * m;
  ZVec e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZVec g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZVec h2 = zadd(h, r, m2);
  ZVec b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZVec{Integer(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), h2, m2);
  ZVec s2 = zsub(s, d, m2);
  ZVec t2 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lift f = lc(f) * prod(u_i) (mod p), u_i monic, to modulus `target` (a power
// of p). Returns monic lifted factors, reduced symmetrically.
inline std::vector<ZVec> multifactor_lift(const ZVec& f, const std::vector<modp::Poly>& u, modp::u64 p,
                                          const Integer& target) {
  if (u.size() == 1) {
    Integer il = inverse_mod(f.back(), target);
    ZVec r = f;
    for (auto& v : r) v *= il;
    return {zmod(std::move(r), target)};
  }
  const std::size_t half = u.size() / 2;
  modp::Poly a{1}, b{1};
  for (std::size_t i = 0; i < half; ++i) a = modp::mul(a, u[i], p);
  for (std::size_t i = half; i < u.size(); ++i) b = modp::mul(b, u[i], p);
  const Integer pz(static_cast<unsigned long>(p));
  ZVec lcv = ZVec{symmetric_mod(f.back(), pz)};
  modp::Poly g0 = modp::mul(modp::reduce(ZPoly(ZVec(lcv)), p), a, p);
  auto [s0, t0] = modp::ext_gcd(g0, b, p);
  ZVec g = zmod(lift(g0), pz), h = zmod(lift(b), pz), s = zmod(lift(s0), pz), t = zmod(lift(t0), pz);
  Integer m = pz;
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  g = zmod(std::move(g), target);
  h = zmod(std::move(h), target);
  std::vector<modp::Poly> ua(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<modp::Poly> ub(u.begin() + static_cast<std::ptrdiff_t>(half), u.end());
  auto left = multifactor_lift(g, ua, p, target);
  auto right = multifactor_lift(h, ub, p, target);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline ZPoly primitive(const ZVec& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  ZVec r = v;
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return ZPoly(std::move(r));
}

// Exact division over Z; returns false when b does not divide a.
inline bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
  if (!r.is_zero()) return false;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  quotient = to_zpoly(q);
  return true;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Irreducible factors over Z of a primitive, square-free polynomial with
/// positive leading coefficient. Factors are primitive with positive leading
/// coefficients, sorted by (degree, coefficients).
inline std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
  if (f.degree() <= 1) return {f};
  using detail::ZVec;
  const ZVec fv = f.coeffs();

  // Pick, among the first few admissible primes, the one with fewest modular factors.
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<modp::Poly> best;
  modp::u64 best_p = 0;
  int admissible = 0;
  for (unsigned long p = 3; admissible < 6 && p < 100000; p += 2) {
    if (!detail::is_prime(p)) continue;
    if (f.leading() % Integer(p) == 0) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (modp::deg(modp::gcd(fp, modp::derivative(fp, p), p)) > 0) continue;
    ++admissible;
    auto facs = modp::factor_squarefree(modp::make_monic(fp, p), p, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("factor: no admissible prime");
  if (best.size() == 1) return {f};

  // Mignotte-type bound on coefficients of any factor times lc(f).
  Integer norm2 = 0;
  for (const auto& c : fv) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(f.leading()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  bound = 2 * bound + 1;
  Integer target = best_p;
  while (target <= bound) target *= static_cast<unsigned long>(best_p);

  std::vector<ZVec> lifted = detail::multifactor_lift(fv, best, best_p, target);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  std::size_t k = 1;
  while (2 * k <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      ZVec g{Integer(rest.leading())};
      for (auto i : idx) g = detail::zmul(g, lifted[alive[i]], target);
      if (g.empty()) continue;
      ZPoly cand = detail::primitive(g);
      ZPoly quo;
      if (cand.degree() >= 1 && detail::exact_divide(rest, cand, quo)) {
        result.push_back(cand);
        rest = quo;
        std::vector<std::size_t> next;
        for (std::size_t j = 0, w = 0; j < alive.size(); ++j) {
          if (w < idx.size() && idx[w] == j) {
            ++w;
            continue;
          }
          next.push_back(alive[j]);
        }
        alive = std::move(next);
        found = true;
        break;
      }
    } while (detail::next_combination(idx, alive.size()));
    if (!found) ++k;
  }
  if (rest.degree() >= 1) result.push_back(detail::primitive(rest.coeffs()));
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  return result;
}

/// One irreducible factor over Q: primitive integer coefficients, positive
/// leading coefficient.
struct QFactor {
  QPoly poly;
  unsigned multiplicity = 0;
};

/// f = unit * prod(poly_i ^ multiplicity_i), each poly_i irreducible over Q.
struct QFactorization {
  Rational unit;
  std::vector<QFactor> factors;

  QPoly expand() const {
    QPoly r = QPoly::constant(unit);
    for (const auto& f : factors)
      for (unsigned k = 0; k < f.multiplicity; ++k) r = r * f.poly;
    return r;
  }
};

inline QFactorization factor_over_q(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor_over_q: zero polynomial");
  QFactorization out;
  if (f.degree() == 0) {
    out.unit = f.leading();
    return out;
  }
  auto parts = squarefree_decomposition(f);
  Rational unit = f.leading();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    const auto mult = static_cast<unsigned>(i + 1);
    for (const auto& z : factor_squarefree_primitive(to_zpoly(primitive_part(parts[i])))) {
      QPoly q = to_qpoly(z);
      Rational l = q.leading();
      for (unsigned k = 0; k < mult; ++k) unit /= l;
      out.factors.push_back({q, mult});
    }
  }
  out.unit = unit;
  return out;
}

}  // namespace maxregion

#endif  // MAXREGION_FACTOR_HPP
