#ifndef MAXREGION_CLASSIFY_HPP
#define MAXREGION_CLASSIFY_HPP

// Case detection, per-sector reports and the height profile of a
// homogeneous polynomial.

#include "maxregion/homopoly.hpp"

#include <optional>

namespace maxregion {

enum class CaseTag { I, II, III };
enum class SectorType { A, B };

inline const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    default: return "III";
  }
}
inline const char* to_string(SectorType t) { return t == SectorType::A ? "A" : "B"; }

/// Data attached to one real root line of the Hessian determinant.
struct SectorReport {
  RootLine line;
  SectorType type = SectorType::B;
  unsigned n = 0;        // multiplicity of the line in Phi
  unsigned omega = 0;    // multiplicity of the line in H_Phi
  std::optional<unsigned> M;  // omega + 2, Type B only
  std::optional<Rational> h;  // max(m/2, n), Type A only
};

struct HeightProfile {
  CaseTag case_tag = CaseTag::III;
  Rational h_phi;
  unsigned ordd_phi = 0;
  std::optional<unsigned> m_phi;
  bool z_inclusion = true;
  bool hessian_identically_zero = false;
};

struct Classification {
  HomoPoly phi;
  HeightProfile profile;
  std::vector<SectorReport> sectors;  // empty outside case III
  std::string notice;                 // set for cases I and II

  unsigned m() const { return phi.degree(); }
  CaseTag case_tag() const { return profile.case_tag; }
};

namespace detail {

inline void require_degree(const HomoPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("the zero form has no classification");
  if (p.degree() < 2) throw DegreeTooSmall("degree " + std::to_string(p.degree()) + " < 2");
}

}  // namespace detail

inline CaseTag detect_case(const HomoPoly& p) {
  detail::require_degree(p);
  Factorization f = factorize(p);
  const unsigned m = p.degree();
  if (f.nu1 == m || f.nu2 == m) return CaseTag::I;
  if (f.factors.size() == 1 && f.factors[0].poly.degree() == 1 && f.factors[0].multiplicity == m) return CaseTag::II;
  return CaseTag::III;
}

/// One report per real root line of H_Phi, in slope order (vertical last).
/// Requires case III; an identically vanishing Hessian yields no sectors.
inline std::vector<SectorReport> sector_reports(const HomoPoly& p) {
  detail::require_degree(p);
  const HomoPoly hess = hessian_det(p);
  std::vector<SectorReport> out;
  if (hess.is_zero()) return out;
  const Rational half_m = make_rational(p.degree(), 2);
  for (const auto& line : real_root_lines(hess)) {
    SectorReport r;
    r.line = line;
    r.omega = line.mult_in_source;
    r.n = mult_along(p, line);
    if (r.n >= 1) {
      r.type = SectorType::A;
      r.h = r.n > half_m ? Rational(r.n) : half_m;
    } else {
      r.type = SectorType::B;
      r.M = r.omega + 2;
      if (*r.M > p.degree())
        throw InternalInconsistency("Type B sector with M = " + std::to_string(*r.M) + " > m");
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline HeightProfile profile_from(const HomoPoly& p, const std::vector<SectorReport>& sectors, CaseTag tag) {
  HeightProfile hp;
  hp.case_tag = tag;
  hp.hessian_identically_zero = hessian_det(p).is_zero();
  for (const auto& line : real_root_lines(p)) hp.ordd_phi = std::max(hp.ordd_phi, line.mult_in_source);
  const Rational half_m = make_rational(p.degree(), 2);
  hp.h_phi = hp.ordd_phi > half_m ? Rational(hp.ordd_phi) : half_m;
  std::optional<Rational> max_type_a;
  for (const auto& s : sectors) {
    if (s.type == SectorType::B) {
      hp.z_inclusion = false;
      hp.m_phi = std::max(hp.m_phi.value_or(0), *s.M);
    } else if (!max_type_a || *s.h > *max_type_a) {
      max_type_a = s.h;
    }
  }
  // Z_H = whole plane when H vanishes identically.
  if (hp.hessian_identically_zero) hp.z_inclusion = false;
  if (tag == CaseTag::III && !hp.hessian_identically_zero) {
    const Rational expected = max_type_a ? *max_type_a : half_m;
    if (expected != hp.h_phi)
      throw InternalInconsistency("height " + hp.h_phi.get_str() + " differs from sector maximum " + expected.get_str());
  }
  return hp;
}

}  // namespace detail

/// Height profile; in cases I and II no sectors are considered.
inline HeightProfile height_profile(const HomoPoly& p) {
  const CaseTag tag = detect_case(p);
  const auto sectors = tag == CaseTag::III ? sector_reports(p) : std::vector<SectorReport>{};
  return detail::profile_from(p, sectors, tag);
}

/// Full classification. Cases I and II stop at a notice naming the model
/// surface they reduce to.
inline Classification classify(const HomoPoly& p) {
  Classification c;
  c.phi = p;
  const CaseTag tag = detect_case(p);
  if (tag == CaseTag::III) c.sectors = sector_reports(p);
  c.profile = detail::profile_from(p, c.sectors, tag);
  if (tag != CaseTag::III) {
    const std::string m = std::to_string(p.degree());
    c.notice = std::string("case ") + to_string(tag) + ": after a linear change of variables the surface is " +
               "S = {(x1, x2, x2^" + m + " + c)}; no region is computed";
  } else if (c.profile.hessian_identically_zero) {
    c.notice = "Hessian determinant vanishes identically; no region is computed";
  }
  return c;
}

}  // namespace maxregion

#endif  // MAXREGION_CLASSIFY_HPP
