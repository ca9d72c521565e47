#include "hkmod/mukai.hpp"

namespace hkmod {

std::string to_string(const MukaiVector& v) {
  return "(" + v.r.get_str() + ", " + to_string(v.l) + ", " + v.s.get_str() + ")";
}

namespace {

void check_vector(const IntLattice& NS, const MukaiVector& v) {
  if (v.l.size() != NS.rank()) throw InvalidInput("Mukai vector class has wrong length for " + NS.label());
  if (!v.l.is_integral()) throw InvalidInput("Mukai vector class must be integral: " + to_string(v.l));
  if (v.r < 0) throw InvalidInput("Mukai vector rank must be non-negative");
}

}  // namespace

Integer mukai_pairing(const IntLattice& NS, const MukaiVector& v, const MukaiVector& w) {
  check_vector(NS, v);
  check_vector(NS, w);
  return pair_int(NS, v.l, w.l) - v.r * w.s - w.r * v.s;
}

Integer mukai_square(const IntLattice& NS, const MukaiVector& v) { return mukai_pairing(NS, v, v); }

MukaiVector from_chern(const Integer& r, const LatVec& c1, const Integer& c2, const IntLattice& NS) {
  if (!c1.is_integral()) throw InvalidInput("c1 must be integral");
  const Integer c1sq = pair_int(NS, c1, c1);
  if (!divides(2, c1sq)) throw InvalidInput("c1^2 must be even on a K3 surface");
  return {r, c1, c1sq / 2 - c2 + r};
}

Integer discriminant_from_chern(const Integer& r, const Integer& c1_square, const Integer& c2) {
  return 2 * r * c2 - (r - 1) * c1_square;
}

MukaiNumerics numerics(const IntLattice& NS, const MukaiVector& v) {
  if (v.r < 1) throw InvalidInput("numerics need positive rank, got " + v.r.get_str());
  MukaiNumerics out;
  out.v_square = mukai_square(NS, v);
  if (!divides(2, out.v_square)) throw InternalError("Mukai square is odd: NS form is not even");
  out.n_v = out.v_square / 2 + 1;
  out.delta = out.v_square + 2 * v.r * v.r;
  out.a_v = frac(v.r * v.r * (out.v_square + 2 * v.r * v.r), 4);
  if (out.a_v != frac(v.r * v.r * out.delta, 4)) throw InternalError("a(v) != r^2 Delta / 4");
  return out;
}

Integer expected_dim_surface(const Integer& delta, const Integer& r, const Integer& chi_O, const Integer& q_irr) {
  return delta - (r * r - 1) * chi_O + q_irr;
}

MukaiVector twist_by_mf(const IntLattice& NS, const MukaiVector& v, const Integer& m, const LatVec& f) {
  check_vector(NS, v);
  if (norm(NS, f) != 0) throw MathFailure("twist_by_mf needs isotropic f");
  MukaiVector w{v.r, v.l + Rational(m * v.r) * f, v.s + m * pair_int(NS, v.l, f)};
  if (mukai_square(NS, w) != mukai_square(NS, v)) throw InternalError("twist by exp(mf) changed the Mukai square");
  return w;
}

MukaiVector twist_by_class(const IntLattice& NS, const MukaiVector& v, const LatVec& alpha) {
  check_vector(NS, v);
  const Integer a2 = pair_int(NS, alpha, alpha);
  const Integer rs = v.r * a2;
  if (!divides(2, rs)) throw InternalError("r alpha^2 is odd: NS form is not even");
  MukaiVector w{v.r, v.l + Rational(v.r) * alpha, v.s + pair_int(NS, v.l, alpha) + rs / 2};
  if (mukai_square(NS, w) != mukai_square(NS, v)) throw InternalError("twist by exp(alpha) changed the Mukai square");
  return w;
}

Integer normalize_twist(const IntLattice& NS, const MukaiVector& v, const MukaiVector& w, const LatVec& f) {
  check_vector(NS, v);
  check_vector(NS, w);
  if (v.r != w.r) throw MathFailure("ranks differ: " + v.r.get_str() + " vs " + w.r.get_str());
  if (norm(NS, f) != 0) throw MathFailure("normalize_twist needs isotropic f");
  if (f.is_zero()) throw InvalidInput("fiber class is zero");

  // Solve w.l - v.l = x f.
  const LatVec diff = w.l - v.l;
  std::size_t pivot = 0;
  while (f[pivot] == 0) ++pivot;
  const Rational xq = diff[pivot] / f[pivot];
  if (!(xq * f == diff) || !is_integer(xq)) {
    throw MathFailure("w - v is not an integral multiple of the fiber class");
  }
  const Integer x = xq.get_num();
  const Integer k = pair_int(NS, f, v.l);
  if (gcd(v.r, k) != 1) throw MathFailure("gcd(r, q(f,l)) = " + gcd(v.r, k).get_str() + " != 1");
  if (!divides(v.r, x)) {
    throw MathFailure("r = " + v.r.get_str() + " does not divide x = " + x.get_str() +
                      ": w is not v twisted by exp(m f)");
  }
  if (mukai_square(NS, w) != mukai_square(NS, v)) {
    throw MathFailure("w^2 = " + mukai_square(NS, w).get_str() + " differs from v^2 = " + mukai_square(NS, v).get_str());
  }
  const Integer m = x / v.r;
  if (!(twist_by_mf(NS, v, m, f) == w)) throw InternalError("twist round-trip failed");
  return m;
}

}  // namespace hkmod
