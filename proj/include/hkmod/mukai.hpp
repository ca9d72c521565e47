#pragma once

// Mukai vectors (r, l, s) on a K3 surface with Neron-Severi lattice NS.

#include "hkmod/lattice.hpp"

namespace hkmod {

struct MukaiVector {
  Integer r;
  LatVec l;  // class in NS(S), integral
  Integer s;

  bool operator==(const MukaiVector& other) const = default;
};

std::string to_string(const MukaiVector& v);

/// <v, w> = l.l' - r s' - r' s.
Integer mukai_pairing(const IntLattice& NS, const MukaiVector& v, const MukaiVector& w);
Integer mukai_square(const IntLattice& NS, const MukaiVector& v);

/// (r, c1, c1^2/2 - c2 + r); requires c1 integral with c1^2 even.
MukaiVector from_chern(const Integer& r, const LatVec& c1, const Integer& c2, const IntLattice& NS);

/// Delta = 2 r c2 - (r-1) c1^2.
Integer discriminant_from_chern(const Integer& r, const Integer& c1_square, const Integer& c2);

struct MukaiNumerics {
  Integer v_square;
  Integer n_v;     // v^2/2 + 1
  Rational a_v;    // r^2 (v^2 + 2 r^2) / 4
  Integer delta;   // v^2 + 2 r^2
};

/// Requires r >= 1; the defining identities are asserted.
MukaiNumerics numerics(const IntLattice& NS, const MukaiVector& v);

/// Delta - (r^2 - 1) chi(O_S) + q(S); equals v^2 + 2 on a K3.
Integer expected_dim_surface(const Integer& delta, const Integer& r, const Integer& chi_O, const Integer& q_irr);

/// v . exp(m f) for isotropic f: (r, l + m r f, s + m (l.f)).
MukaiVector twist_by_mf(const IntLattice& NS, const MukaiVector& v, const Integer& m, const LatVec& f);

/// Given w = (r, l + x f, t) with w^2 = v^2 and gcd(r, l.f) = 1, returns m
/// with w = v . exp(m f). Throws MathFailure when the data contradicts those
/// hypotheses (w - v not along f, r not dividing x, squares differ).
Integer normalize_twist(const IntLattice& NS, const MukaiVector& v, const MukaiVector& w, const LatVec& f);

/// v . exp(alpha) for an arbitrary integral class alpha:
/// (r, l + r alpha, s + l.alpha + r alpha^2 / 2).
MukaiVector twist_by_class(const IntLattice& NS, const MukaiVector& v, const LatVec& alpha);

}  // namespace hkmod
