#include "hkmod/gen.hpp"

namespace hkmod {

LatVec Rng::vec(std::size_t rank, long lo, long hi) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < rank; ++i) c.push_back(integer(lo, hi));
  return LatVec(c);
}

IntLattice random_even_lattice(Rng& rng, std::size_t rank, long bound) {
  std::vector<std::vector<Integer>> g(rank, std::vector<Integer>(rank));
  for (std::size_t i = 0; i < rank; ++i) {
    g[i][i] = rng.even(-bound, bound);
    for (std::size_t j = i + 1; j < rank; ++j) g[i][j] = g[j][i] = rng.integer(-bound, bound);
  }
  return IntLattice(std::move(g), "random");
}

RigidCase random_rigid_case(Rng& rng, long e_max, long d_max, long r_max, long sq_max) {
  for (;;) {
    const Integer e = rng.even(2, e_max);
    const Integer d = rng.integer(1, d_max);
    const Integer r = rng.integer(2, r_max);
    if (gcd(r, d) != 1) continue;
    const Integer x = rng.integer(-6, 6);
    if (gcd(r, d * x) != 1) continue;
    const Integer t = rng.even(-2, sq_max);
    // l^2 = e x^2 + 2 d x y must be = t (mod 2r): solve d x y = (t - e x^2)/2 (mod r).
    const Bezout b = extended_gcd(d * x, r);
    const Integer half = (t - e * x * x) / 2;
    const Integer y = mod(half * b.x, r) + r * rng.integer(-3, 3);
    const Integer l2 = e * x * x + 2 * d * x * y;
    if (!divides(2 * r, l2 - t)) throw InternalError("rigid case generator failed to hit the target square");
    EllipticNS ns(e, d);
    MukaiVector v{r, LatVec(std::vector<Integer>{x, y}), (l2 - t) / (2 * r)};
    return {std::move(ns), std::move(v), t};
  }
}

ModificationStep random_valid_step(Rng& rng, const IntLattice& NS, const MukaiVector& w, const LatVec& f) {
  const Integer k = pair_int(NS, f, w.l);
  const Integer rB = rng.integer(1, w.r.get_si() - 1);
  // Largest deg_B with deg_B r < rB k.
  const Integer top = floor(frac(rB * k - 1, w.r));
  return {rB, top - rng.integer(0, 3)};
}

}  // namespace hkmod
