#include "hkmod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <numeric>
#include <sstream>

#include "hkmod/gen.hpp"
#include "hkmod/hilb2.hpp"
#include "hkmod/kernels.hpp"
#include "hkmod/nl_search.hpp"
#include "hkmod/pipelines.hpp"

namespace hkmod {

namespace {

// A property returns an empty string on success and a description of the
// first counterexample otherwise.
using Property = std::function<std::string(const VerifyOptions&)>;

struct Suite {
  std::string name;
  std::vector<std::pair<std::string, Property>> properties;
};

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// ---------------------------------------------------------------- lattice

std::string lattice_bilinear(const VerifyOptions& opt) {
  Rng rng(11);
  for (int t = 0; t < 200 * opt.effort; ++t) {
    const std::size_t rank = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntLattice L = random_even_lattice(rng, rank, 6);
    const LatVec u = rng.vec(rank, -5, 5), v = rng.vec(rank, -5, 5), w = rng.vec(rank, -5, 5);
    const Rational c(rng.uniform(-4, 4));
    if (pair(L, u, v) != pair(L, v, u)) return cat("asymmetric at ", to_string(u), ", ", to_string(v));
    if (pair(L, c * u + v, w) != c * pair(L, u, w) + pair(L, v, w)) return cat("not linear at ", to_string(u));
  }
  return {};
}

std::string lattice_discriminant(const VerifyOptions&) {
  for (long m0 = -6; m0 <= 6; ++m0) {
    for (long d = 1; d <= 30; ++d) {
      const IntLattice L({{2 * m0, d}, {d, 0}});
      if (discriminant(L) != -d * d) return cat("m0=", m0, " d=", d);
    }
  }
  return {};
}

std::string lattice_primitive(const VerifyOptions& opt) {
  Rng rng(12);
  const IntLattice L({{2, 1, 0}, {1, -2, 0}, {0, 0, 4}});
  for (int t = 0; t < 300 * opt.effort; ++t) {
    const LatVec v = rng.vec(3, -30, 30);
    if (v.is_zero()) continue;
    const LatVec p = primitive_part(L, v);
    if (!is_primitive(L, p) || !(primitive_part(L, p) == p)) return cat("v=", to_string(v));
  }
  return {};
}

std::string lattice_saturation(const VerifyOptions& opt) {
  Rng rng(13);
  const IntLattice L({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  for (int t = 0; t < 300 * opt.effort; ++t) {
    const LatVec v1 = rng.vec(3, -4, 4), v2 = rng.vec(3, -4, 4);
    const auto c1 = v1.integer_coords(), c2 = v2.integer_coords();
    bool dependent = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (c1[i] * c2[j] - c1[j] * c2[i] != 0) dependent = false;
    if (dependent) continue;
    // Elementary unimodular moves: a shear or a swap.
    const Rational a(rng.uniform(-3, 3));
    const bool swap = rng.coin();
    const LatVec w1 = swap ? v2 : v1 + a * v2;
    const LatVec w2 = swap ? v1 : v2;
    if (saturation_check(L, v1, v2) != saturation_check(L, w1, w2)) return cat(to_string(v1), ", ", to_string(v2));
  }
  return {};
}

// ---------------------------------------------------------------- fujiki

std::string fujiki_table(const VerifyOptions& opt) {
  struct Row {
    HkType type;
    int n;
    long expected;
  };
  const Row rows[] = {{HkType::K3Surface, 1, 1}, {HkType::K3n, 2, 1}, {HkType::K3n, 5, 1},
                      {HkType::Kumn, 2, 3},      {HkType::Kumn, 4, 5}, {HkType::OG6, 3, 4}};
  for (const auto& r : rows) {
    const Rational got = opt.fujiki_table(r.type, r.n);
    if (got != r.expected) return cat(to_string(r.type), " n=", r.n, ": table has ", to_string(got), ", expected ", r.expected);
  }
  return {};
}

std::string fujiki_relation(const VerifyOptions& opt) {
  Rng rng(21);
  for (int t = 0; t < 60 * opt.effort; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const HkType type = n == 1 ? HkType::K3Surface : (rng.coin() ? HkType::K3n : HkType::Kumn);
    const IntLattice L = random_even_lattice(rng, 3, 5);
    const FujikiSetup s(n, opt.fujiki_table(type, n), L);
    const LatVec h = rng.vec(3, -3, 3);
    const std::vector<LatVec> cls(static_cast<std::size_t>(2 * n), h);
    const MatchingSum m = top_intersection(s, cls);
    const Rational expect = s.c_X * Rational(double_factorial_odd(n)) * pow(norm(L, h), static_cast<unsigned long>(n));
    if (m.value != expect) return cat("n=", n, " h=", to_string(h));
    if (m.matchings != double_factorial_odd(n)) return cat("matching count at n=", n);
  }
  return {};
}

std::string fujiki_symmetry(const VerifyOptions& opt) {
  Rng rng(22);
  for (int t = 0; t < 40 * opt.effort; ++t) {
    const IntLattice L = random_even_lattice(rng, 3, 4);
    std::vector<LatVec> cls;
    const std::size_t count = 2 * static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t i = 0; i < count; ++i) cls.push_back(rng.vec(3, -3, 3));
    const Rational base = matchings_sum(L, cls).value;
    std::vector<LatVec> perm = cls;
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(static_cast<std::uint64_t>(t)));
    if (matchings_sum(L, perm).value != base) return cat("permutation changed the sum, count ", count);
  }
  return {};
}

std::string fujiki_parallel(const VerifyOptions&) {
  Rng rng(23);
  const IntLattice L = random_even_lattice(rng, 4, 5);
  std::vector<LatVec> cls;
  for (int i = 0; i < 10; ++i) cls.push_back(rng.vec(4, -3, 3));
  const MatchingSum par = matchings_sum(L, cls);
  const MatchingSum ser =
      reference::matchings_sum(cls.size(), [&](std::size_t i, std::size_t j) { return pair(L, cls[i], cls[j]); });
  if (par.value != ser.value || par.matchings != ser.matchings) return "parallel and serial sums differ";
  return {};
}

std::string fujiki_fiber(const VerifyOptions& opt) {
  Rng rng(24);
  for (int t = 0; t < 60 * opt.effort; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const EllipticNS ns(rng.even(0, 10), rng.uniform(1, 6));
    const FujikiSetup s(n, opt.fujiki_table(HkType::K3n, n), ns.lattice());
    const LatVec lam = rng.vec(2, -5, 5);
    (void)fiber_restriction_integral(s, lam, ns.h(), ns.f());  // asserts closed form = expansion
  }
  return {};
}

std::string fujiki_modular(const VerifyOptions& opt) {
  Rng rng(25);
  for (int t = 0; t < 40 * opt.effort; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const IntLattice L = random_even_lattice(rng, 2, 6);
    const FujikiSetup s(n, opt.fujiki_table(HkType::K3n, n), L);
    const LatVec h = rng.vec(2, -3, 3);
    const ModularClass mc{frac(rng.uniform(0, 50), rng.uniform(1, 6)), 2};
    const std::vector<LatVec> cls(static_cast<std::size_t>(2 * n - 2), h);
    const Rational expect = mc.d_F * Rational(double_factorial_odd(n - 1)) * pow(norm(L, h), static_cast<unsigned long>(n - 1));
    if (modular_delta_integral(s, mc, cls) != expect) return cat("n=", n);
  }
  return {};
}

// ---------------------------------------------------------------- mukai

std::string mukai_even(const VerifyOptions& opt) {
  Rng rng(31);
  for (int t = 0; t < 300 * opt.effort; ++t) {
    const IntLattice L = random_even_lattice(rng, 2, 6);
    const MukaiVector v{rng.integer(0, 6), rng.vec(2, -5, 5), rng.integer(-6, 6)};
    const MukaiVector w{rng.integer(0, 6), rng.vec(2, -5, 5), rng.integer(-6, 6)};
    if (mukai_pairing(L, v, w) != mukai_pairing(L, w, v)) return cat("asymmetric at ", to_string(v));
    if (!divides(2, mukai_square(L, v))) return cat("odd square at ", to_string(v));
  }
  return {};
}

std::string mukai_twist(const VerifyOptions& opt) {
  Rng rng(32);
  for (int t = 0; t < 500 * opt.effort; ++t) {
    const EllipticNS ns(rng.even(-10, 20), rng.uniform(1, 10));
    const MukaiVector v{rng.integer(1, 8), rng.vec(2, -6, 6), rng.integer(-10, 10)};
    const Integer m = rng.integer(-10, 10);
    const MukaiVector w = twist_by_mf(ns.lattice(), v, m, ns.f());
    if (mukai_square(ns.lattice(), w) != mukai_square(ns.lattice(), v)) return cat("square changed at ", to_string(v));
    if (gcd(v.r, pair_int(ns.lattice(), ns.f(), v.l)) == 1 && normalize_twist(ns.lattice(), v, w, ns.f()) != m) {
      return cat("round trip failed at ", to_string(v), " m=", m.get_str());
    }
  }
  return {};
}

std::string mukai_chern(const VerifyOptions& opt) {
  Rng rng(33);
  for (int t = 0; t < 300 * opt.effort; ++t) {
    const IntLattice L = random_even_lattice(rng, 2, 6);
    const Integer r = rng.integer(1, 8);
    const LatVec c1 = rng.vec(2, -5, 5);
    const Integer c2 = rng.integer(-20, 20);
    const MukaiVector v = from_chern(r, c1, c2, L);
    const MukaiNumerics num = numerics(L, v);
    if (num.delta != discriminant_from_chern(r, pair_int(L, c1, c1), c2)) return cat("r=", r.get_str(), " c2=", c2.get_str());
  }
  return {};
}

// ---------------------------------------------------------------- walls

std::vector<std::pair<long, long>> brute_walls(long e, long d, long a) {
  std::vector<std::pair<long, long>> out;
  const long y_max = a * (1 + e + 2 * d);
  for (long x = -a; x <= a; ++x) {
    for (long y = -y_max; y <= y_max; ++y) {
      const long q = x * (e * x + 2 * d * y);
      if (q >= 0 || q < -a) continue;
      if (std::gcd(x, y) != 1) continue;
      // Normalize: first nonzero coordinate positive.
      if (x < 0 || (x == 0 && y < 0)) continue;
      out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string walls_oracle(const VerifyOptions&) {
  for (long e = 0; e <= 8; e += 2) {
    for (long d = 1; d <= 10; ++d) {
      for (long a = 1; a <= 12; ++a) {
        const EllipticNS ns(e, d);
        std::vector<std::pair<long, long>> got;
        for (const auto& w : enumerate_wall_classes(ns, Rational(a))) {
          const auto c = w.lambda.integer_coords();
          got.emplace_back(c[0].get_si(), c[1].get_si());
        }
        if (got != brute_walls(e, d, a)) return cat("e=", e, " d=", d, " a=", a);
      }
    }
  }
  return {};
}

std::string walls_nocamere(const VerifyOptions&) {
  for (long e = 0; e <= 20; e += 2) {
    for (long d = 1; d <= 50; ++d) {
      const Integer mn = min_negative_norm(EllipticNS(e, d));
      if (Rational(mn) < frac(2 * d, 1 + e)) return cat("e=", e, " d=", d, " min=", mn.get_str());
    }
  }
  return {};
}

std::string walls_single_chamber(const VerifyOptions&) {
  for (long e = 2; e <= 10; e += 2) {
    for (long a = 1; a <= 12; ++a) {
      const Integer d = no_wall_threshold(Integer(e), Rational(a));
      const EllipticNS ns(Integer(e), d);
      const SuitabilityReport s = is_suitable(ns, Rational(a));
      if (!s.suitable || !s.generic) return cat("e=", e, " a=", a);
      for (long t = 0; t < 6; ++t) {
        if (!same_chamber(ns, Rational(a), ns.h(), LatVec(std::vector<Integer>{1, t}))) return cat("chamber split at e=", e);
      }
    }
  }
  return {};
}

std::string walls_sweep_parallel(const VerifyOptions&) {
  if (sweep_walls(0, 8, 12, 10) != reference::sweep_walls(0, 8, 12, 10)) return "parallel wall sweep differs";
  return {};
}

// ---------------------------------------------------------------- reduction

std::string reduction_rigid(const VerifyOptions& opt) {
  Rng rng(41);
  for (int t = 0; t < 1000 * opt.effort; ++t) {
    const RigidCase c = random_rigid_case(rng, 40, 60, 12, 40);
    const MukaiVector w = rigid_vector(c.ns.lattice(), c.v, c.ns.f());
    if (mukai_square(c.ns.lattice(), w) != -2) return cat("v=", to_string(c.v));
  }
  return {};
}

std::string reduction_drop(const VerifyOptions& opt) {
  Rng rng(42);
  for (int t = 0; t < 500 * opt.effort; ++t) {
    const RigidCase c = random_rigid_case(rng, 20, 20, 8, 40);
    const IntLattice& L = c.ns.lattice();
    const ModificationStep st = random_valid_step(rng, L, c.v, c.ns.f());
    const Integer k = pair_int(L, c.ns.f(), c.v.l);
    const MukaiVector w1 = elementary_modification(L, c.v, st, c.ns.f());
    const Integer drop = mukai_square(L, c.v) - mukai_square(L, w1);
    if (drop != 2 * (st.r_B * k - c.v.r * st.deg_B) || drop < 2) return cat("v=", to_string(c.v));
  }
  return {};
}

std::string reduction_bezout(const VerifyOptions&) {
  for (long r = 2; r <= 60; ++r) {
    for (long k = -30; k <= 30; ++k) {
      if (std::gcd(r, k) != 1) continue;
      int hits = 0;
      for (long r0 = 1; r0 < r; ++r0) {
        if ((k * r0 - 1) % r == 0) ++hits;
      }
      const BezoutPair b = bezout_r0_d0(Integer(r), Integer(k));
      if (hits != 1 || k * b.r0 - r * b.d0 != 1) return cat("r=", r, " k=", k);
      if (hom_count_check(Integer(k), Integer(r), b.r0, b.d0).value != 1) return cat("hom count r=", r);
    }
  }
  return {};
}

std::string reduction_dimension(const VerifyOptions&) {
  Rng rng(44);
  const IntLattice L({{4, 1}, {1, 0}});
  for (long r = 1; r <= 20; ++r) {
    for (long len = 1; len <= 20; ++len) {
      const MukaiVector v{Integer(r), rng.vec(2, -4, 4), rng.integer(-10, 10)};
      const DimensionIdentity id = nonlocally_free_dim_identity(L, v, Integer(len));
      const MukaiNumerics num = numerics(L, v);
      if (id.lhs != 2 * num.n_v - (r - 1) * len || id.contradiction != (r >= 2)) return cat("r=", r, " len=", len);
    }
  }
  return {};
}

// ---------------------------------------------------------------- nl

std::string nl_nef_unique(const VerifyOptions&) {
  for (long e = 2; e <= 20; e += 2) {
    for (long d = 1; d <= 200; ++d) {
      if (nef_isotropic_classes(Integer(e), Integer(d)).unique != ((2 * d) % e != 0)) return cat("e=", e, " d=", d);
    }
  }
  return {};
}

std::string nl_k3_no_walls(const VerifyOptions&) {
  // nl_k3_admissible raises internally if an admissible d has walls.
  for (long e = 2; e <= 8; e += 2) {
    for (long r = 1; r <= 3; ++r) {
      for (long sq = -2; sq <= 6; sq += 2) {
        for (long d = 1; d <= 120; ++d) (void)nl_k3_admissible(Integer(e), Integer(d), Integer(r), Integer(sq));
      }
    }
  }
  return {};
}

std::string nl_buonacompt_consistency(const VerifyOptions&) {
  const long e_values[] = {6, 14, 22, 30, 38};
  for (long r0 = 2; r0 <= 7; ++r0) {
    const int i = r0 % 2 == 0 ? 2 : 1;
    const F2Invariants inv = f2_invariants(Integer(r0));
    for (long e : e_values) {
      const Rational half = inv.a_mod * Rational(e + 1) / 2;
      if (half != pazienza_bound(Integer(r0), Integer(e))) return cat("bounds differ at r0=", r0, " e=", e);
      if (half < Rational(10 * (e + 1))) continue;
      const Integer b = buonacompt_min_d(Integer(r0), Integer(e), i);
      const Integer p = propriostab_min_d(Integer(e), i, inv.a_mod, Integer(1), {});
      // With m = 1 the only extra condition is gcd(i, d/i) = 1.
      const bool extra = gcd(Integer(i), b / i) == 1;
      if ((extra && p != b) || p < b) return cat("r0=", r0, " e=", e, ": ", b.get_str(), " vs ", p.get_str());
    }
  }
  return {};
}

// ---------------------------------------------------------------- hilb2

std::string hilb2_champollion(const VerifyOptions&) {
  const EconSweep s = sweep_econ(12, 400);
  if (s.failures != 0) return cat(s.failures, " failures, first ", s.failure_samples.front());
  if (s.admissible == 0) return "no admissible tuples";
  return {};
}

std::string hilb2_delta_integral(const VerifyOptions&) {
  for (long r0 = 1; r0 <= 2000; ++r0) (void)f2_invariants(Integer(r0));  // asserts 12 | rank(rank-1) and a_mod law
  return {};
}

std::string hilb2_rosetta(const VerifyOptions&) {
  for (int i = 1; i <= 2; ++i) {
    for (long r0 = i; r0 <= 8; r0 += 2) {
      for (long e = 1; e <= 300; ++e) {
        if (!divisibility_type(Integer(e), i) || !econ_check(Integer(r0), Integer(e))) continue;
        for (long d0 = 1; d0 <= 9; ++d0) {
          for (Variant var : {Variant::Plus, Variant::Minus}) {
            if (!rosetta_check(Integer(r0), i, Integer(e), Integer(d0), var).pass) return cat("i=", i, " r0=", r0, " e=", e);
          }
        }
      }
    }
  }
  return {};
}

std::string hilb2_mckay(const VerifyOptions&) {
  if (!mckay_ext_dims({1, 0, 1}).end0_vanishing) return "spherical input not rigid";
  return {};
}

// ---------------------------------------------------------------- pipelines

std::string pipelines_multacca(const VerifyOptions& opt) {
  Rng rng(61);
  for (int t = 0; t < 300 * opt.effort; ++t) {
    const IntLattice L = random_even_lattice(rng, 2, 6);
    const MukaiVector v{rng.integer(1, 6), rng.vec(2, -4, 4), rng.integer(-6, 6)};
    const LatVec h = rng.vec(2, -3, 3);
    const MultaccaResult m = multacca_normalize(L, v, h, rng.integer(-5, 5));
    if (mukai_square(L, m.w) != mukai_square(L, v)) return cat("square changed at ", to_string(v));
  }
  return {};
}

std::vector<Suite> registry() {
  return {
      {"fujiki",
       {{"builtin_table", fujiki_table},
        {"fujiki_relation", fujiki_relation},
        {"permutation_symmetry", fujiki_symmetry},
        {"parallel_matches_serial", fujiki_parallel},
        {"fiber_restriction_closed_form", fujiki_fiber},
        {"modular_delta_integral", fujiki_modular}}},
      {"hilb2",
       {{"champollion_sweep", hilb2_champollion},
        {"delta_coefficient_integral", hilb2_delta_integral},
        {"rosetta_sweep", hilb2_rosetta},
        {"mckay_vanishing", hilb2_mckay}}},
      {"lattice",
       {{"bilinear_symmetric", lattice_bilinear},
        {"discriminant_negative_square", lattice_discriminant},
        {"primitive_part_idempotent", lattice_primitive},
        {"saturation_basis_invariant", lattice_saturation}}},
      {"mukai",
       {{"pairing_symmetric_even", mukai_even},
        {"twist_isometry_round_trip", mukai_twist},
        {"chern_discriminant", mukai_chern}}},
      {"nl",
       {{"nef_uniqueness_flag", nl_nef_unique},
        {"k3_admissible_no_walls", nl_k3_no_walls},
        {"buonacompt_propriostab_bounds", nl_buonacompt_consistency}}},
      {"pipelines", {{"multacca_isometry", pipelines_multacca}}},
      {"reduction",
       {{"rigid_square", reduction_rigid},
        {"square_drop_law", reduction_drop},
        {"bezout_unique", reduction_bezout},
        {"dimension_identity", reduction_dimension}}},
      {"walls",
       {{"enumeration_oracle", walls_oracle},
        {"nocamere_bound", walls_nocamere},
        {"single_chamber", walls_single_chamber},
        {"parallel_sweep_matches_serial", walls_sweep_parallel}}},
  };
}

std::vector<PropertyResult> run_suite(const Suite& suite, const VerifyOptions& opt) {
  std::vector<PropertyResult> out;
  const bool whole = opt.filter.empty() || opt.filter == suite.name;
  for (const auto& [name, prop] : suite.properties) {
    const std::string full = suite.name + "." + name;
    if (!whole && full.find(opt.filter) == std::string::npos) continue;
    const auto t0 = std::chrono::steady_clock::now();
    PropertyResult r{suite.name, name, true, {}, 0};
    try {
      r.detail = prop(opt);
      r.pass = r.detail.empty();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<PropertyResult> verify_all(const VerifyOptions& options) {
  std::vector<Suite> suites = registry();
  std::sort(suites.begin(), suites.end(), [](const Suite& a, const Suite& b) { return a.name < b.name; });
  std::vector<std::future<std::vector<PropertyResult>>> jobs;
  for (const auto& s : suites) {
    jobs.push_back(std::async(std::launch::async, [&s, &options] { return run_suite(s, options); }));
  }
  std::vector<PropertyResult> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hkmod
