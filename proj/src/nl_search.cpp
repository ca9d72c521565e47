#include "hkmod/nl_search.hpp"

namespace hkmod {

void Verdict::add(std::string name, bool holds, std::string detail) {
  admissible = admissible && holds;
  conditions.push_back({std::move(name), holds, std::move(detail)});
}

const Condition* Verdict::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

void require_positive(const Integer& x, const char* what) {
  if (x <= 0) throw InvalidInput(std::string(what) + " must be positive, got " + x.get_str());
}

void require_i(int i) {
  if (i != 1 && i != 2) throw InvalidInput("divisibility i must be 1 or 2, got " + std::to_string(i));
}

std::string gt(const Integer& lhs, const Rational& rhs) { return lhs.get_str() + " > " + to_string(rhs); }

Rational hk_floor_bound(const Integer& e) { return Rational(10 * (e + 1)); }

void charge(Integer& scanned, const SearchOptions& options, const std::string& what) {
  if (++scanned > options.cap) {
    throw SearchCapExhausted(what + ": no answer within " + options.cap.get_str() + " candidates");
  }
}

}  // namespace

NefIsotropicReport nef_isotropic_classes(const Integer& e, const Integer& d) {
  require_positive(e, "e");
  require_positive(d, "d");
  if (!divides(2, e)) throw InvalidInput("e must be even, got " + e.get_str());
  const EllipticNS ns(e, d);
  const IntLattice& L = ns.lattice();
  // q(x h + y f) = x (e x + 2 d y) vanishes on f and on 2d h - e f.
  const LatVec alpha = primitive_part(L, LatVec(std::vector<Integer>{2 * d, -e}));
  NefIsotropicReport out;
  out.classes.push_back({ns.f(), pair_int(L, ns.f(), ns.h())});
  out.classes.push_back({alpha, pair_int(L, alpha, ns.h())});
  if (norm(L, alpha) != 0) throw InternalError("second isotropic class is not isotropic");
  const Integer g = gcd(2 * d, e);
  if (out.classes[1].pairing_with_h != d * e / g) throw InternalError("q(alpha', h) != de / gcd(2d, e)");
  out.unique = out.classes[1].pairing_with_h != d;
  if (out.unique != !divides(e, 2 * d)) throw InternalError("uniqueness flag disagrees with e | 2d");
  return out;
}

Verdict nl_k3_admissible(const Integer& e, const Integer& d, const Integer& r, const Integer& v_square) {
  require_positive(e, "e");
  require_positive(d, "d");
  require_positive(r, "r");
  if (!divides(2, e)) throw InvalidInput("e must be even, got " + e.get_str());
  const Rational a = frac(r * r * (v_square + 2 * r * r), 4);
  const Rational bound = frac((e + 1) * r * r * (v_square + 2 * r * r), 8);
  Verdict out;
  out.add("d_bound", d > bound, gt(d, bound));
  out.add("e_not_divides_2d", !divides(e, 2 * d), e.get_str() + " | " + Integer(2 * d).get_str());
  Condition weak{"e_not_divides_d", !divides(e, d), e.get_str() + " | " + d.get_str() + " (reported only)"};
  out.conditions.push_back(weak);
  if (out.admissible) {
    if (!(frac(2 * d, e + 1) > a)) throw InternalError("admissible d leaves 2d/(1+e) <= a(v)");
    if (a > 0 && !enumerate_wall_classes(EllipticNS(e, d), a).empty()) throw InternalError("admissible d has a(v)-walls");
  }
  return out;
}

Verdict nl_hk_admissible(const Integer& e, const Integer& d, int i) {
  require_positive(e, "e");
  require_positive(d, "d");
  require_i(i);
  Verdict out;
  out.add("d_bound", d > hk_floor_bound(e), gt(d, hk_floor_bound(e)));
  out.add("e_not_divides_2d", !divides(e, 2 * d), e.get_str() + " | " + Integer(2 * d).get_str());
  if (i == 2) out.add("d_even", divides(2, d), "d = " + d.get_str());
  return out;
}

Verdict propriostab_admissible(const Integer& e, const Integer& d, int i, const Rational& a0, const Integer& m) {
  require_positive(e, "e");
  require_positive(d, "d");
  require_i(i);
  if (a0 < 0) throw InvalidInput("a0 must be non-negative");
  Rational bound = a0 * Rational(e + 1) / 2;
  if (hk_floor_bound(e) > bound) bound = hk_floor_bound(e);
  Verdict out;
  out.add("d_bound", d > bound, gt(d, bound));
  out.add("i_divides_d", divides(i, d), std::to_string(i) + " | " + d.get_str());
  out.add("e_not_divides_2d", !divides(e, 2 * d), e.get_str() + " | " + Integer(2 * d).get_str());
  if (divides(i, d)) {
    const Integer g = gcd(m * i, d / i);
    out.add("gcd_mi_d_over_i", g == 1, "gcd = " + g.get_str());
  } else {
    out.add("gcd_mi_d_over_i", false, "d / i is not an integer");
  }
  return out;
}

Rational pazienza_bound(const Integer& r0, const Integer& e) {
  return frac(5 * pow(r0, 6) * (r0 * r0 - 1) * (e + 1), 16);
}

Integer buonacompt_min_d(const Integer& r0, const Integer& e, int i, SearchOptions options) {
  require_positive(r0, "r0");
  require_positive(e, "e");
  require_i(i);
  if (!divides(2, r0 - i)) throw MathFailure("parity r0 = i (mod 2) fails");
  if (divides(e, Integer(2 * i))) {
    throw MathFailure("e = " + e.get_str() + " divides 2d for all d" + (i == 2 ? " even" : ""));
  }
  Integer d = floor(pazienza_bound(r0, e)) + 1;
  if (d < 1) d = 1;
  Integer scanned = 0;
  for (;; ++d) {
    charge(scanned, options, "buonacompt_min_d");
    if (i == 2 && !divides(2, d)) continue;
    if (divides(e, 2 * d)) continue;
    return d;
  }
}

Integer propriostab_min_d(const Integer& e, int i, const Rational& a0, const Integer& m, SearchOptions options) {
  require_positive(e, "e");
  require_i(i);
  if (divides(e, Integer(2 * i))) {
    throw MathFailure("e = " + e.get_str() + " divides 2d for all admissible d");
  }
  Rational bound = a0 * Rational(e + 1) / 2;
  if (hk_floor_bound(e) > bound) bound = hk_floor_bound(e);
  Integer d = floor(bound) + 1;
  if (d < 1) d = 1;
  Integer scanned = 0;
  for (;; ++d) {
    charge(scanned, options, "propriostab_min_d");
    if (propriostab_admissible(e, d, i, a0, m).admissible) return d;
  }
}

Rational digrande_bound(const Integer& m0, const Integer& r0) {
  return frac((2 * m0 + 1) * r0 * r0 * (r0 * r0 - 1), 4);
}

Integer rigsuk_min_d0(const Integer& m0, const Integer& r0, SearchOptions options) {
  require_positive(r0, "r0");
  Integer d0 = floor(digrande_bound(m0, r0)) + 1;
  if (d0 < 1) d0 = 1;
  Integer scanned = 0;
  for (;; ++d0) {
    charge(scanned, options, "rigsuk_min_d0");
    if (gcd(d0, r0) == 1) return d0;
  }
}

}  // namespace hkmod
