#pragma once

// Mukai-vector bookkeeping for bundles on an elliptic K3 surface: stable
// bundles on the fibers, the rigid vector attached to v, elementary
// modifications along a fiber and semistable-reduction traces.
//
// Throughout, the degree on a fiber of a class l is k = q(f, l).

#include <vector>

#include "hkmod/mukai.hpp"

namespace hkmod {

struct AtiyahResult {
  bool exists;  // a stable bundle of this rank and degree exists on a genus-one curve
  bool unique;  // and it is unique up to isomorphism once the determinant is fixed
};

AtiyahResult atiyah_exists(const Integer& r, const Integer& deg);

struct BezoutPair {
  Integer r0;
  Integer d0;
};

/// The unique (r0, d0) with k r0 - r d0 = 1 and 0 < r0 < r.
BezoutPair bezout_r0_d0(const Integer& r, const Integer& k);

/// w = (r, l + n (r - r0) f, s + n (k - d0)) with n = n(v); w^2 = -2 is asserted.
MukaiVector rigid_vector(const IntLattice& NS, const MukaiVector& v, const LatVec& f);

/// Quotient B of the restriction to a fiber: rank r_B and degree deg_B.
struct ModificationStep {
  Integer r_B;
  Integer deg_B;
};

struct ModificationOptions {
  /// Accept deg_B / r_B == k / r (semistable boundary) instead of requiring
  /// a strict slope drop.
  bool allow_equal_slope = false;
};

/// w - (0, r_B f, deg_B); the square law w1^2 = w^2 - 2 (r_B k - r deg_B)
/// is asserted.
MukaiVector elementary_modification(const IntLattice& NS, const MukaiVector& w, const ModificationStep& step,
                                    const LatVec& f, ModificationOptions options = {});

struct ReductionTrace {
  MukaiVector start;
  std::vector<ModificationStep> steps;
  std::vector<MukaiVector> vectors;  // start followed by each modification
  std::vector<Integer> squares;      // strictly decreasing, all >= -2
};

/// Applies the steps in order. Throws MathFailure if a square would drop
/// below -2, which no sequence of modifications of a stable bundle can do.
ReductionTrace reduction_trace(const IntLattice& NS, const MukaiVector& w0, const std::vector<ModificationStep>& steps,
                               const LatVec& f, ModificationOptions options = {});

struct HomCount {
  Integer value;      // k r0 - r d0
  bool is_bezout;     // (r0, d0) is the Bezout pair of (r, k)
};

/// Euler characteristic of Hom from a stable (r0, d0) bundle to a stable
/// (r, k) bundle on a genus-one fiber.
HomCount hom_count_check(const Integer& k, const Integer& r, const Integer& r0, const Integer& d0);

struct DimensionIdentity {
  Integer lhs;  // (r, l, s + len)^2 + 2 + len (r + 1)
  Integer rhs;  // 2 n(v) - (r - 1) len
  bool contradiction;  // lhs < 2 n(v)
};

/// Parameter count for sheaves whose double dual has a length-`len`
/// quotient; lhs = rhs is asserted.
DimensionIdentity nonlocally_free_dim_identity(const IntLattice& NS, const MukaiVector& v, const Integer& len);

}  // namespace hkmod
