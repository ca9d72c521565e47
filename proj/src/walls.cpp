#include "hkmod/walls.hpp"

namespace hkmod {

namespace {

IntLattice elliptic_gram(const Integer& e, const Integer& d) {
  return IntLattice({{e, d}, {d, Integer(0)}}, "NS(e=" + e.get_str() + ",d=" + d.get_str() + ")");
}

WallClass make_wall(const EllipticNS& ns, const Integer& x, const Integer& y) {
  const Integer& e = ns.e();
  const Integer& d = ns.d();
  return {LatVec(std::vector<Integer>{x, y}), x * (e * x + 2 * d * y), e * x + d * y, d * x};
}

void require_positive(const Rational& a) {
  if (a <= 0) throw InvalidInput("wall parameter a must be positive, got " + a.get_str());
}

}  // namespace

EllipticNS::EllipticNS(Integer e, Integer d) : e_(std::move(e)), d_(std::move(d)), lattice_(elliptic_gram(e_, d_)) {
  if (d_ <= 0) throw InvalidInput("q(h,f) = d must be positive, got " + d_.get_str());
}

LatVec EllipticNS::positive_reference() const {
  if (e_ > 0) return h();
  // q(h + t f) = e + 2 d t > 0
  const Integer t = floor(frac(-e_, 2 * d_)) + 1;
  return LatVec(std::vector<Integer>{1, t});
}

std::vector<WallClass> enumerate_wall_classes(const EllipticNS& ns, const Rational& a) {
  require_positive(a);
  const Integer& e = ns.e();
  const Integer two_d = 2 * ns.d();
  std::vector<WallClass> out;
  // |q| = x |e x + 2 d y| >= x, so x <= a.
  const Integer x_max = floor(a);
  for (Integer x = 1; x <= x_max; ++x) {
    // z = e x + 2 d y ranges over [ceil(-a/x), -1].
    const Integer z_min = ceil(-a / Rational(x));
    const Integer y_lo = ceil(frac(z_min - e * x, two_d));
    const Integer y_hi = floor(frac(-1 - e * x, two_d));
    for (Integer y = y_lo; y <= y_hi; ++y) {
      if (gcd(x, y) != 1) continue;
      WallClass w = make_wall(ns, x, y);
      if (Rational(w.norm) >= -a && w.norm < 0) out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<WallClass> walls_through(const EllipticNS& ns, const Rational& a, const LatVec& h) {
  std::vector<WallClass> out;
  for (auto& w : enumerate_wall_classes(ns, a)) {
    if (pair(ns.lattice(), w.lambda, h) == 0) out.push_back(w);
  }
  return out;
}

SuitabilityReport is_suitable(const EllipticNS& ns, const Rational& a) { return is_suitable(ns, a, ns.h()); }

SuitabilityReport is_suitable(const EllipticNS& ns, const Rational& a, const LatVec& h) {
  const IntLattice& L = ns.lattice();
  if (norm(L, h) <= 0) throw MathFailure("suitability needs q(h) > 0, got q = " + norm(L, h).get_str());
  SuitabilityReport rep{true, true, {}, {}};
  for (auto& w : enumerate_wall_classes(ns, a)) {
    const int sh = sign(pair(L, w.lambda, h));
    const int sf = sign(w.pair_f);
    if (sh != sf) {
      rep.suitable = false;
      rep.witnesses.push_back(w);
    }
    if (sh == 0) {
      rep.generic = false;
      rep.on_wall.push_back(w);
    }
  }
  return rep;
}

bool same_chamber(const EllipticNS& ns, const Rational& a, const LatVec& h0, const LatVec& h1) {
  const IntLattice& L = ns.lattice();
  const LatVec ref = ns.positive_reference();
  for (const LatVec* h : {&h0, &h1}) {
    if (norm(L, *h) <= 0) throw MathFailure("same_chamber needs q > 0 for " + to_string(*h));
    if (pair(L, *h, ref) <= 0) throw MathFailure(to_string(*h) + " is not on the h-side of the positive cone");
  }
  for (const auto& w : enumerate_wall_classes(ns, a)) {
    const int s0 = sign(pair(L, w.lambda, h0));
    const int s1 = sign(pair(L, w.lambda, h1));
    if (s0 == 0 || s1 == 0 || s0 != s1) return false;
  }
  return true;
}

Integer min_negative_norm(const EllipticNS& ns) {
  if (ns.e() < 0) throw InvalidInput("min_negative_norm needs e >= 0");
  const Integer two_d = 2 * ns.d();
  auto value_at = [&](const Integer& x) -> Integer {
    // Least |z| with z = e x + 2 d y < 0.
    Integer r = mod(-ns.e() * x, two_d);
    if (r == 0) r = two_d;
    return x * r;
  };
  Integer best = value_at(1);
  for (Integer x = 2; x < best; ++x) {
    const Integer v = value_at(x);
    if (v < best) best = v;
  }
  return best;
}

bool has_minus_two_class(const EllipticNS& ns) {
  for (const auto& w : enumerate_wall_classes(ns, Rational(2))) {
    if (w.norm == -2) return true;
  }
  return false;
}

Integer no_wall_threshold(const Integer& e, const Rational& a) {
  require_positive(a);
  if (e + 1 <= 0) throw InvalidInput("no_wall_threshold needs e >= 0");
  const Integer d = floor(a * Rational(1 + e) / 2) + 1;
  if (!enumerate_wall_classes(EllipticNS(e, d), a).empty()) {
    throw InternalError("a-walls found above the no-wall threshold");
  }
  return d;
}

LatVec wall_ray(const EllipticNS& ns, const WallClass& wall) {
  const IntLattice& L = ns.lattice();
  if (norm(L, wall.lambda) >= 0) throw MathFailure("wall ray needs a class of negative square");
  const auto c = wall.lambda.integer_coords();
  const Integer& x = c[0];
  const Integer& y = c[1];
  Integer u = ns.d() * x;
  Integer w = -(ns.e() * x + ns.d() * y);
  const Integer g = gcd(u, w);
  u /= g;
  w /= g;
  LatVec ray(std::vector<Integer>{u, w});
  if (pair(L, ray, ns.positive_reference()) < 0) ray = -ray;
  if (pair(L, ray, wall.lambda) != 0 || norm(L, ray) <= 0) throw InternalError("wall ray is not positive and orthogonal");
  return ray;
}

}  // namespace hkmod
