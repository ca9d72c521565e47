#include "hkmod/reduction.hpp"

namespace hkmod {

AtiyahResult atiyah_exists(const Integer& r, const Integer& deg) {
  if (r <= 0) throw InvalidInput("rank must be positive");
  const bool coprime = gcd(r, deg) == 1;
  return {coprime, coprime};
}

BezoutPair bezout_r0_d0(const Integer& r, const Integer& k) {
  if (r < 2) throw InvalidInput("bezout_r0_d0 needs r >= 2, got " + r.get_str());
  const Bezout b = extended_gcd(k, r);
  if (b.gcd != 1) throw MathFailure("r = " + r.get_str() + " and k = " + k.get_str() + " are not coprime");
  // k x + r y = 1, so r0 = x mod r and d0 = (k r0 - 1) / r.
  const Integer r0 = mod(b.x, r);
  const Integer num = k * r0 - 1;
  if (!divides(r, num)) throw InternalError("Bezout solution is inconsistent");
  BezoutPair out{r0, num / r};
  if (!(out.r0 > 0 && out.r0 < r) || k * out.r0 - r * out.d0 != 1) throw InternalError("Bezout pair out of range");
  return out;
}

MukaiVector rigid_vector(const IntLattice& NS, const MukaiVector& v, const LatVec& f) {
  if (norm(NS, f) != 0) throw MathFailure("fiber class must be isotropic");
  const Integer k = pair_int(NS, f, v.l);
  const MukaiNumerics num = numerics(NS, v);
  if (num.v_square < -2) throw MathFailure("v^2 = " + num.v_square.get_str() + " < -2");
  const BezoutPair bp = bezout_r0_d0(v.r, k);
  const Integer& n = num.n_v;
  MukaiVector w{v.r, v.l + Rational(n * (v.r - bp.r0)) * f, v.s + n * (k - bp.d0)};
  const Integer w2 = mukai_square(NS, w);
  if (w2 != -2) throw InternalError("rigid vector has square " + w2.get_str() + " instead of -2");
  return w;
}

MukaiVector elementary_modification(const IntLattice& NS, const MukaiVector& w, const ModificationStep& step,
                                    const LatVec& f, ModificationOptions options) {
  if (norm(NS, f) != 0) throw MathFailure("fiber class must be isotropic");
  const Integer& r = w.r;
  if (step.r_B < 1 || step.r_B > r - 1) {
    throw MathFailure("quotient rank " + step.r_B.get_str() + " outside [1, " + Integer(r - 1).get_str() + "]");
  }
  const Integer k = pair_int(NS, f, w.l);
  // deg_B / r_B < k / r
  const Integer gap = step.r_B * k - r * step.deg_B;
  if (gap < 0 || (gap == 0 && !options.allow_equal_slope)) {
    throw MathFailure("quotient of slope " + frac(step.deg_B, step.r_B).get_str() +
                      " does not destabilize a fiber restriction of slope " + frac(k, r).get_str());
  }
  MukaiVector w1{r, w.l - Rational(step.r_B) * f, w.s - step.deg_B};
  if (mukai_square(NS, w1) != mukai_square(NS, w) - 2 * gap) throw InternalError("square drop law violated");
  return w1;
}

ReductionTrace reduction_trace(const IntLattice& NS, const MukaiVector& w0, const std::vector<ModificationStep>& steps,
                               const LatVec& f, ModificationOptions options) {
  ReductionTrace trace{w0, steps, {w0}, {mukai_square(NS, w0)}};
  if (trace.squares.front() < -2) throw MathFailure("starting square is below the rigid bound -2");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    MukaiVector next = elementary_modification(NS, trace.vectors.back(), steps[i], f, options);
    Integer sq = mukai_square(NS, next);
    if (sq < -2) {
      throw MathFailure("step " + std::to_string(i + 1) + " takes the square to " + sq.get_str() +
                        ", below rigid bound -2");
    }
    trace.vectors.push_back(std::move(next));
    trace.squares.push_back(std::move(sq));
  }
  return trace;
}

HomCount hom_count_check(const Integer& k, const Integer& r, const Integer& r0, const Integer& d0) {
  HomCount out{k * r0 - r * d0, false};
  if (r >= 2 && gcd(r, k) == 1) {
    const BezoutPair bp = bezout_r0_d0(r, k);
    out.is_bezout = bp.r0 == r0 && bp.d0 == d0;
    if (out.is_bezout && out.value != 1) throw InternalError("Bezout pair gives Hom count != 1");
  }
  return out;
}

DimensionIdentity nonlocally_free_dim_identity(const IntLattice& NS, const MukaiVector& v, const Integer& len) {
  if (len <= 0) throw InvalidInput("quotient length must be positive");
  const MukaiNumerics num = numerics(NS, v);
  const MukaiVector dual{v.r, v.l, v.s + len};
  DimensionIdentity out;
  out.lhs = mukai_square(NS, dual) + 2 + len * (v.r + 1);
  out.rhs = 2 * num.n_v - (v.r - 1) * len;
  if (out.lhs != out.rhs) throw InternalError("dimension count identity failed");
  out.contradiction = out.lhs < 2 * num.n_v;
  return out;
}

}  // namespace hkmod
