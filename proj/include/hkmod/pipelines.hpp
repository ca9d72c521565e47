#pragma once

// Hypothesis pipelines that compose the lower modules into TheoremReports.

#include <optional>

#include "hkmod/mukai.hpp"
#include "hkmod/report.hpp"
#include "hkmod/walls.hpp"

namespace hkmod {

/// v^2 >= -2 and gcd(r, q(f, l)) = 1 gate the verdict; a(v), n(v), the
/// predicted dimension v^2 + 2 and the a(v)-suitability of h are reported.
/// h defaults to the basis polarization.
TheoremReport vbk3ell_pipeline(const EllipticNS& ns, const MukaiVector& v, std::optional<LatVec> h = std::nullopt);

/// v^2 >= -2, r coprime to the content of l, and h a(v)-generic.
TheoremReport casoprim_pipeline(const EllipticNS& ns, const MukaiVector& v, const LatVec& h);

struct MultaccaResult {
  MukaiVector w;              // v times exp(N h)
  std::optional<Integer> x;   // l + r N h = x h' with h' the primitive part of h, when proportional
  std::optional<bool> coprime;  // gcd(r, x) = 1
};

MultaccaResult multacca_normalize(const IntLattice& NS, const MukaiVector& v, const LatVec& h, const Integer& N);

}  // namespace hkmod
