#include "hkmod/pipelines.hpp"

namespace hkmod {

namespace {

Json walls_json(const std::vector<WallClass>& walls) {
  Json out = Json::array();
  for (const auto& w : walls) {
    out.push_back({{"lambda", to_string(w.lambda)}, {"norm", w.norm.get_str()}});
  }
  return out;
}

}  // namespace

TheoremReport vbk3ell_pipeline(const EllipticNS& ns, const MukaiVector& v, std::optional<LatVec> h) {
  const IntLattice& L = ns.lattice();
  TheoremReport rep("vbk3ell");
  const MukaiNumerics num = numerics(L, v);
  const Integer k = pair_int(L, ns.f(), v.l);
  rep.add("v_square_at_least_minus_two", num.v_square >= -2, {{"v_square", num.v_square.get_str()}});
  rep.add("r_coprime_to_fiber_degree", gcd(v.r, k) == 1,
          {{"r", v.r.get_str()}, {"k", k.get_str()}, {"gcd", gcd(v.r, k).get_str()}});

  const Rational& a = num.a_v;
  rep.info()["a"] = to_string(a);
  rep.info()["n"] = num.n_v.get_str();
  rep.info()["dimension"] = Integer(num.v_square + 2).get_str();
  const LatVec hh = h.value_or(ns.h());
  rep.info()["h"] = to_string(hh);
  if (a > 0) {
    const SuitabilityReport s = is_suitable(ns, a, hh);
    rep.info()["suitable"] = s.suitable;
    rep.info()["generic"] = s.generic;
    rep.info()["suitability_witnesses"] = walls_json(s.witnesses);
  }
  return rep;
}

TheoremReport casoprim_pipeline(const EllipticNS& ns, const MukaiVector& v, const LatVec& h) {
  const IntLattice& L = ns.lattice();
  TheoremReport rep("casoprim");
  const MukaiNumerics num = numerics(L, v);
  rep.add("v_square_at_least_minus_two", num.v_square >= -2, {{"v_square", num.v_square.get_str()}});
  const Integer c = content(v.l);
  rep.add("r_plus_l_primitive", gcd(v.r, c) == 1, {{"r", v.r.get_str()}, {"content_l", c.get_str()}});
  if (norm(L, h) <= 0) throw MathFailure("casoprim needs q(h) > 0");
  const std::vector<WallClass> hits = num.a_v > 0 ? walls_through(ns, num.a_v, h) : std::vector<WallClass>{};
  rep.add("h_generic", hits.empty(), {{"a", to_string(num.a_v)}, {"h", to_string(h)}, {"walls_through_h", walls_json(hits)}});
  rep.info()["n"] = num.n_v.get_str();
  rep.info()["a"] = to_string(num.a_v);
  return rep;
}

MultaccaResult multacca_normalize(const IntLattice& NS, const MukaiVector& v, const LatVec& h, const Integer& N) {
  MultaccaResult out{twist_by_class(NS, v, Rational(N) * h), std::nullopt, std::nullopt};
  if (mukai_square(NS, out.w) != mukai_square(NS, v)) throw InternalError("exp(Nh) twist changed the Mukai square");
  if (content(h) == 0) return out;
  const LatVec hp = primitive_part(NS, h);
  std::size_t pivot = 0;
  while (pivot < hp.size() && hp[pivot] == 0) ++pivot;
  if (pivot == hp.size()) return out;
  const Rational x = out.w.l[pivot] / hp[pivot];
  if (x * hp == out.w.l && is_integer(x)) {
    out.x = x.get_num();
    out.coprime = gcd(v.r, *out.x) == 1;
  }
  return out;
}

}  // namespace hkmod
