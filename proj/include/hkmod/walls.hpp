#pragma once

// a-walls and a-chambers for a Picard-rank-two lattice spanned by a
// polarization h and an isotropic fiber class f:
//   q(h) = e, q(h, f) = d, q(f) = 0.
// A class lambda = x h + y f has q(lambda) = x (e x + 2 d y).

#include <vector>

#include "hkmod/lattice.hpp"

namespace hkmod {

class EllipticNS {
 public:
  EllipticNS(Integer e, Integer d);
  EllipticNS(long e, long d) : EllipticNS(Integer(e), Integer(d)) {}

  const Integer& e() const { return e_; }
  const Integer& d() const { return d_; }
  const IntLattice& lattice() const { return lattice_; }
  LatVec h() const { return LatVec{1, 0}; }
  LatVec f() const { return LatVec{0, 1}; }

  /// h + t f with the least t >= 0 making q > 0; a reference point for the
  /// component of the positive cone that contains h.
  LatVec positive_reference() const;

 private:
  Integer e_;
  Integer d_;
  IntLattice lattice_;
};

struct WallClass {
  LatVec lambda;  // primitive, normalized with x > 0
  Integer norm;   // q(lambda) < 0
  Integer pair_h;
  Integer pair_f;

  bool operator==(const WallClass& other) const = default;
};

/// Every primitive lambda with -a <= q(lambda) < 0, one representative per
/// +-pair, sorted lexicographically by (x, y).
std::vector<WallClass> enumerate_wall_classes(const EllipticNS& ns, const Rational& a);

struct SuitabilityReport {
  bool suitable;
  bool generic;
  std::vector<WallClass> witnesses;  // wall classes violating suitability
  std::vector<WallClass> on_wall;    // wall classes orthogonal to h
};

/// Suitability of the basis polarization h with respect to f.
SuitabilityReport is_suitable(const EllipticNS& ns, const Rational& a);
/// Same test for an arbitrary class h with q(h) > 0.
SuitabilityReport is_suitable(const EllipticNS& ns, const Rational& a, const LatVec& h);

/// Genericity of an arbitrary class h: no a-wall class is orthogonal to it.
/// The returned list holds the offending classes.
std::vector<WallClass> walls_through(const EllipticNS& ns, const Rational& a, const LatVec& h);

/// True iff h0 and h1 lie in the same open a-chamber.
bool same_chamber(const EllipticNS& ns, const Rational& a, const LatVec& h0, const LatVec& h1);

/// Exact minimum of |q(lambda)| over integral lambda with q(lambda) < 0.
Integer min_negative_norm(const EllipticNS& ns);

/// True iff some class has square -2.
bool has_minus_two_class(const EllipticNS& ns);

/// Least d with 2d/(1+e) > a; at that d there are no a-walls (verified).
Integer no_wall_threshold(const Integer& e, const Rational& a);

/// Primitive generator of lambda-perp in the positive cone component of h.
LatVec wall_ray(const EllipticNS& ns, const WallClass& wall);

}  // namespace hkmod
