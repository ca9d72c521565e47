#pragma once

// Noether-Lefschetz admissibility predicates and minimal-parameter searches.

#include <string>
#include <vector>

#include "hkmod/walls.hpp"

namespace hkmod {

/// One named condition of a predicate together with the numbers it compared.
struct Condition {
  std::string name;
  bool holds;
  std::string detail;
};

struct Verdict {
  bool admissible = true;
  std::vector<Condition> conditions;

  void add(std::string name, bool holds, std::string detail);
  const Condition* find(const std::string& name) const;
};

struct NefIsotropic {
  LatVec ray;
  Integer pairing_with_h;
};

struct NefIsotropicReport {
  std::vector<NefIsotropic> classes;  // f first, then the primitive part of 2d h - e f
  bool unique;                        // q(alpha', h) != d, equivalently e does not divide 2d
};

NefIsotropicReport nef_isotropic_classes(const Integer& e, const Integer& d);

/// d > (e+1) r^2 (v^2 + 2 r^2) / 8 and e does not divide 2d. Whether e
/// divides d is reported as an extra, non-gating condition.
/// Takes the rank and Mukai square of v.
Verdict nl_k3_admissible(const Integer& e, const Integer& d, const Integer& r, const Integer& v_square);

/// d > 10 (e+1), e does not divide 2d, d even when i = 2.
Verdict nl_hk_admissible(const Integer& e, const Integer& d, int i);

/// d > max(a0 (e+1) / 2, 10 (e+1)), i | d, d even when i = 2, e does not
/// divide 2d and gcd(m i, d / i) = 1.
Verdict propriostab_admissible(const Integer& e, const Integer& d, int i, const Rational& a0, const Integer& m);

struct SearchOptions {
  /// Maximum number of candidates examined before SearchCapExhausted.
  Integer cap = 10'000'000;
};

/// (5/16) r0^6 (r0^2 - 1) (e + 1).
Rational pazienza_bound(const Integer& r0, const Integer& e);

/// Least d above the pazienza bound with e not dividing 2d and d even when
/// i = 2. Throws MathFailure when no d can qualify (e | 2i).
Integer buonacompt_min_d(const Integer& r0, const Integer& e, int i, SearchOptions options = {});

/// Least d above max(a0 (e+1)/2, 10(e+1)) passing propriostab_admissible.
Integer propriostab_min_d(const Integer& e, int i, const Rational& a0, const Integer& m, SearchOptions options = {});

/// (2 m0 + 1) r0^2 (r0^2 - 1) / 4.
Rational digrande_bound(const Integer& m0, const Integer& r0);

/// Least d0 coprime to r0 exceeding the digrande bound.
Integer rigsuk_min_d0(const Integer& m0, const Integer& r0, SearchOptions options = {});

}  // namespace hkmod
