#include "hkmod/hilb2.hpp"

#include <set>

namespace hkmod {

namespace {

void require_i(int i) {
  if (i != 1 && i != 2) throw InvalidInput("divisibility i must be 1 or 2, got " + std::to_string(i));
}

void require_positive(const Integer& x, const char* what) {
  if (x <= 0) throw InvalidInput(std::string(what) + " must be positive, got " + x.get_str());
}

Integer shift(const Integer& r0, Variant variant) { return variant == Variant::Plus ? Integer(r0 - 1) : Integer(r0 + 1); }

Json q(const Rational& x) { return to_string(x); }

}  // namespace

bool divisibility_type(const Integer& e, int i) {
  require_i(i);
  if (e <= 0) return false;
  if (i == 1) return divides(2, e);
  return mod(e, 8) == 6;
}

bool econ_check(const Integer& r0, const Integer& e) {
  require_positive(r0, "r0");
  const Integer c = mod(r0, 4);
  if (c == 0) return mod(e - (4 * r0 - 10), 8 * r0) == 0;
  if (c == 1) return mod(e - (r0 - 5) / 2, 2 * r0) == 0;
  if (c == 2) return mod(e + 10, 8 * r0) == 0;
  return mod(e + (r0 + 5) / 2, 2 * r0) == 0;
}

M0S0 m0_s0(const Integer& r0, const Integer& e, Variant variant) {
  require_positive(r0, "r0");
  require_positive(e, "e");
  if (!econ_check(r0, e)) throw MathFailure("econ congruence fails for r0 = " + r0.get_str() + ", e = " + e.get_str());
  const Integer t = shift(r0, variant);
  const Rational m = (divides(2, r0) ? frac(e, 8) : frac(e, 2)) + frac(t * t, 4);
  if (!is_integer(m)) throw InternalError("m0 = " + m.get_str() + " is not an integer");
  M0S0 out{m.get_num(), 0};
  if (!divides(r0, out.m0 + 1)) throw InternalError("r0 does not divide m0 + 1");
  out.s0 = (out.m0 + 1) / r0;
  return out;
}

F2Invariants f2_invariants(const Integer& r0) {
  require_positive(r0, "r0");
  F2Invariants out;
  out.rank = r0 * r0;
  const Integer num = out.rank * (out.rank - 1);
  if (!divides(12, num)) throw InternalError("12 does not divide rank (rank - 1)");
  out.delta_coeff = num / 12;
  out.d_mod = Rational(5 * binomial(out.rank, 2));
  out.a_mod = frac(5 * pow(r0, 6) * (r0 * r0 - 1), 8);
  if (out.a_mod != Rational(out.rank * out.rank) * out.d_mod / 4) throw InternalError("a_mod != rank^2 d_mod / 4");
  if (out.d_mod != Rational(30 * out.delta_coeff)) throw InternalError("d_mod != 30 delta_coeff");
  return out;
}

IntLattice hilb2_ns(const Integer& m0, const Integer& d0) {
  std::vector<std::vector<Integer>> gram{{2 * m0, d0, 0}, {d0, 0, 0}, {0, 0, -2}};
  return IntLattice(std::move(gram), "NS(S^[2];m0=" + m0.get_str() + ",d0=" + d0.get_str() + ")");
}

LatVec h_polarization(const Integer& r0, int i, Variant variant) {
  require_positive(r0, "r0");
  require_i(i);
  const Rational coeff = frac(shift(r0, variant), 2);
  LatVec h = Rational(i) * LatVec(std::vector<Rational>{Rational(1), Rational(0), Rational(-coeff)});
  if (!h.is_integral()) {
    throw MathFailure("h = " + to_string(h) + " is not integral: need r0 = i (mod 2)");
  }
  return h;
}

Integer ambient_divisibility(const LatVec& v) {
  if (v.size() != 3) throw InvalidInput("ambient divisibility needs a class in (mu D, mu C, delta) coordinates");
  const auto c = v.integer_coords();
  return gcd(gcd(c[0], c[1]), 2 * c[2]);
}

RosettaResult rosetta_check(const Integer& r0, int i, const Integer& e, const Integer& d0, Variant variant) {
  require_i(i);
  require_positive(d0, "d0");
  if (!divides(2, r0 - i)) throw MathFailure("parity r0 = i (mod 2) fails");
  if (!divisibility_type(e, i)) throw MathFailure("e = " + e.get_str() + " is not of divisibility type " + std::to_string(i));
  const M0S0 ms = m0_s0(r0, e, variant);
  RosettaResult out{hilb2_ns(ms.m0, d0), h_polarization(r0, i, variant), LatVec{0, 1, 0}, 0, 0, 0, 0, false, false, false};
  out.q_h = pair_int(out.ns, out.h, out.h);
  out.divisibility = ambient_divisibility(out.h);
  out.q_hf = pair_int(out.ns, out.h, out.f);
  out.q_f = pair_int(out.ns, out.f, out.f);
  out.saturated = saturation_check(out.ns, out.h, out.f);
  out.d0_coprime = gcd(d0, r0) == 1;
  out.pass = out.q_h == e && out.divisibility == i && out.q_hf == i * d0 && out.q_f == 0 && out.saturated;
  return out;
}

bool restrango_check(HkType kind, const Integer& r, const Integer& m) {
  require_positive(r, "r");
  if (kind == HkType::K3n) return divides(r, m * m);
  if (kind == HkType::Kumn) return divides(r, 3 * m * m);
  throw InvalidInput("rank constraint is stated for K3^[2] and Kum_2 only");
}

std::vector<Integer> potenza_solve(int n, const Integer& d1, const Integer& d2, const Integer& r, const Integer& a) {
  if (n < 1) throw InvalidInput("n must be positive");
  require_positive(d1, "d1");
  require_positive(d2, "d2");
  require_positive(r, "r");
  if (!divides(d1, d2)) throw InvalidInput("elementary divisors need d1 | d2");
  const auto un = static_cast<unsigned long>(n);
  std::vector<Integer> out;
  // g1 g2 <= d1 d2, so r0^n <= r d1 d2.
  const Integer limit = r * d1 * d2;
  for (Integer r0 = 1; pow(r0, un) <= limit; ++r0) {
    const Integer g = gcd(r0, d1) * gcd(r0, d2);
    if (pow(r0, un) != r * g) continue;
    const Integer top = pow(r0, un - 1);
    if (!divides(g, top)) continue;
    if (gcd(r, a) == top / g) out.push_back(r0);
  }
  return out;
}

std::vector<Integer> resemibis_ranks(HkType kind, int n, const Integer& r_max) {
  if (kind == HkType::K3Surface) throw InvalidInput("rank constraint needs a higher-dimensional type");
  const int half = builtin_half_dimension(kind, n);
  if (half != n) throw InvalidInput(to_string(kind) + " has half-dimension " + std::to_string(half));
  if (n < 1) throw InvalidInput("n must be positive");
  const Integer c = to_integer(builtin_fujiki_constant(kind, n), "Fujiki constant");
  const auto un = static_cast<unsigned long>(n);
  std::set<Integer> ranks;
  for (Integer r0 = 1; pow(r0, un) <= r_max * c; ++r0) {
    const Integer p = pow(r0, un);
    for (Integer d = 1; d <= c; ++d) {
      if (divides(d, c) && divides(d, p) && p / d <= r_max) ranks.insert(p / d);
    }
  }
  return {ranks.begin(), ranks.end()};
}

Integer semihom_twist_count(const Integer& r) {
  require_positive(r, "r");
  return r * r;
}

McKayDims mckay_ext_dims(const std::vector<Integer>& ext_dims) {
  std::vector<Integer> a;
  if (ext_dims.size() == 3) {
    a = ext_dims;
  } else if (ext_dims.size() == 5) {
    if (ext_dims[1] != 0 || ext_dims[3] != 0) {
      throw InvalidInput("odd-degree Ext groups are not supported");
    }
    a = {ext_dims[0], ext_dims[2], ext_dims[4]};
  } else {
    throw InvalidInput("Ext dimensions must be given in degrees 0, 2, 4 or 0..4");
  }
  for (const auto& x : a) {
    if (x < 0) throw InvalidInput("Ext dimensions must be non-negative");
  }
  McKayDims out;
  for (std::size_t k = 0; k <= 4; ++k) {
    Integer total = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
      const std::size_t qd = k - p;
      if (k < p || qd >= a.size() || qd <= p) continue;
      total += a[p] * a[qd];
    }
    if (k % 2 == 0 && k / 2 < a.size()) total += binomial(a[k / 2] + 1, 2);
    out.dims.push_back(total);
  }
  out.end0_vanishing = out.dims == std::vector<Integer>{1, 0, 1, 0, 1};
  return out;
}

Integer realizing_d0(const Integer& r0, int i, const Integer& e, const Integer& m0, SearchOptions options) {
  require_i(i);
  if (divides(e, Integer(2 * i))) throw MathFailure("e = " + e.get_str() + " divides 2d for all d");
  Integer d0 = floor(digrande_bound(m0, r0)) + 1;
  const Integer from_d = floor(pazienza_bound(r0, e) / i) + 1;
  if (from_d > d0) d0 = from_d;
  if (d0 < 1) d0 = 1;
  for (Integer scanned = 1;; ++d0, ++scanned) {
    if (scanned > options.cap) throw SearchCapExhausted("realizing_d0: cap exhausted");
    const Integer d = i * d0;
    if (gcd(d0, r0) == 1 && Rational(d) > pazienza_bound(r0, e) && !divides(e, 2 * d)) return d0;
  }
}

TheoremReport unicita_report(int i, const Integer& r0, const Integer& e, SearchOptions options) {
  require_i(i);
  require_positive(r0, "r0");
  require_positive(e, "e");
  TheoremReport rep("unicita");
  rep.stop_after_failure = true;
  rep.info()["i"] = i;
  rep.info()["r0"] = r0.get_str();
  rep.info()["e"] = e.get_str();

  rep.add("parity", divides(2, r0 - i), {{"r0_mod_2", mod(r0, 2).get_str()}, {"i", i}});
  rep.add("divisibility_type", divisibility_type(e, i), {{"e", e.get_str()}, {"i", i}});
  rep.add("econ", econ_check(r0, e), {{"r0_mod_4", mod(r0, 4).get_str()}, {"e", e.get_str()}});
  if (rep.failed()) {
    for (const char* name : {"m0_s0", "f2_invariants", "restrango", "mckay_vanishing", "rigsuk", "buonacompt", "rosetta"}) {
      rep.skip(name, "an earlier check failed");
    }
    return rep;
  }

  const M0S0 ms = m0_s0(r0, e);
  rep.add("m0_s0", ms.m0 + 1 == r0 * ms.s0, {{"m0", ms.m0.get_str()}, {"s0", ms.s0.get_str()}});

  const F2Invariants inv = f2_invariants(r0);
  const Rational c1 = frac(r0, i);
  rep.add("f2_invariants", is_integer(c1),
          {{"rank", inv.rank.get_str()},
           {"c1_coefficient", q(c1)},
           {"delta_coefficient", inv.delta_coeff.get_str()},
           {"d_mod", q(inv.d_mod)},
           {"a_mod", q(inv.a_mod)}},
          "chi(S, End F) = 2");
  rep.add("restrango", restrango_check(HkType::K3n, inv.rank, r0),
          {{"rank", inv.rank.get_str()}, {"m", r0.get_str()}});
  const McKayDims mk = mckay_ext_dims({1, 0, 1});
  Json dims = Json::array();
  for (const auto& x : mk.dims) dims.push_back(x.get_str());
  rep.add("mckay_vanishing", mk.end0_vanishing, {{"sym2_dims", dims}}, "F spherical");

  const Integer d0_min = rigsuk_min_d0(ms.m0, r0, options);
  rep.add("rigsuk", true, {{"bound", q(digrande_bound(ms.m0, r0))}, {"min_d0", d0_min.get_str()}});

  Integer d_min;
  try {
    d_min = buonacompt_min_d(r0, e, i, options);
  } catch (const MathFailure& ex) {
    rep.add("buonacompt", false, {{"bound", q(pazienza_bound(r0, e))}, {"error", ex.what()}});
    rep.skip("rosetta", "an earlier check failed");
    return rep;
  }
  rep.add("buonacompt", true, {{"bound", q(pazienza_bound(r0, e))}, {"min_d", d_min.get_str()}});

  const Integer d0 = realizing_d0(r0, i, e, ms.m0, options);
  const RosettaResult ros = rosetta_check(r0, i, e, d0);
  rep.add("rosetta", ros.pass,
          {{"d0", d0.get_str()},
           {"d", Integer(i * d0).get_str()},
           {"h", to_string(ros.h)},
           {"q_h", ros.q_h.get_str()},
           {"divisibility", ros.divisibility.get_str()},
           {"q_hf", ros.q_hf.get_str()},
           {"q_f", ros.q_f.get_str()},
           {"saturated", ros.saturated}});

  rep.info()["rank"] = inv.rank.get_str();
  rep.info()["c1_coefficient"] = q(c1);
  rep.info()["delta_coefficient"] = inv.delta_coeff.get_str();
  rep.info()["min_d"] = d_min.get_str();
  rep.info()["rigsuk_min_d0"] = d0_min.get_str();
  rep.info()["realizing_d0"] = d0.get_str();
  rep.info()["realizing_d"] = Integer(i * d0).get_str();
  return rep;
}

}  // namespace hkmod
