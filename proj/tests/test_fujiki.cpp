#include "doctest.h"

#include <algorithm>

#include "hkmod/fujiki.hpp"
#include "hkmod/gen.hpp"
#include "oracle.hpp"

using namespace hkmod;

namespace {

std::vector<LatVec> repeat(const LatVec& v, int k) { return std::vector<LatVec>(k, v); }

}  // namespace

TEST_CASE("built-in Fujiki constants") {
  CHECK(builtin_fujiki_constant(HkType::K3Surface, 1) == 1);
  CHECK(builtin_fujiki_constant(HkType::K3n, 4) == 1);
  CHECK(builtin_fujiki_constant(HkType::Kumn, 2) == 3);
  CHECK(builtin_fujiki_constant(HkType::Kumn, 5) == 6);
  CHECK(builtin_fujiki_constant(HkType::OG6, 3) == 4);
  CHECK(parse_hk_type("OG6") == HkType::OG6);
  CHECK_THROWS_AS(parse_hk_type("nope"), InvalidInput);
  CHECK_THROWS_AS(FujikiSetup(2, Rational(0), IntLattice{{2}}), InvalidInput);
}

TEST_CASE("matchings_sum small cases") {
  const IntLattice L{{6, 1}, {1, -2}};
  const LatVec h{1, 0}, lam{0, 1};
  const std::vector<LatVec> two{h, lam};
  CHECK(matchings_sum(L, two).value == 1);
  const auto hhhh = repeat(h, 4);
  const MatchingSum s = matchings_sum(L, hhhh);
  CHECK(s.value == 3 * 36);
  CHECK(s.matchings == 3);
  const std::vector<LatVec> lhhh{lam, h, h, h};
  CHECK(matchings_sum(L, lhhh).value == 3 * 1 * 6);
  CHECK_THROWS_AS(matchings_sum(3, [](std::size_t, std::size_t) { return Rational(1); }), InvalidInput);
}

TEST_CASE("top_intersection examples") {
  const IntLattice L6{{6}};
  const auto h4 = repeat(LatVec{1}, 4);
  const MatchingSum k3n = top_intersection(FujikiSetup::builtin(HkType::K3n, 2, L6), h4);
  CHECK(k3n.value == 108);
  CHECK(k3n.matchings == 3);
  const IntLattice L{{2, 5}, {5, -2}};
  const std::vector<LatVec> ab{LatVec{1, 0}, LatVec{0, 1}};
  CHECK(top_intersection(FujikiSetup::builtin(HkType::K3Surface, 1, L), ab).value == 5);
  const IntLattice L2{{2}};
  CHECK(top_intersection(FujikiSetup::builtin(HkType::Kumn, 2, L2), h4).value == 36);
}

TEST_CASE("modular_delta_integral examples") {
  const IntLattice L6{{6}}, L2{{2}};
  const auto hh = repeat(LatVec{1}, 2);
  CHECK(modular_delta_integral(FujikiSetup(2, Rational(1), L6), {Rational(30), Integer(4)}, hh) == 180);
  CHECK(modular_delta_integral(FujikiSetup(1, Rational(1), L6), {frac(7, 3), Integer(2)}, {}) == frac(7, 3));
  const auto h4 = repeat(LatVec{1}, 4);
  CHECK(modular_delta_integral(FujikiSetup(3, Rational(1), L2), {Rational(1), Integer(1)}, h4) == 12);
}

TEST_CASE("lambda_ef and slope_comparison") {
  CHECK(lambda_ef(1, LatVec{0, 0}, 2, LatVec{1, 0}) == LatVec{-1, 0});
  CHECK(lambda_ef(3, LatVec{1, 2}, 3, LatVec{1, 2}).is_zero());
  CHECK(lambda_ef(2, LatVec{1, 0}, 5, LatVec{0, 1}) == LatVec{5, -2});
  const FujikiSetup s(1, Rational(1), IntLattice{{2, 3}, {3, 0}});
  CHECK(slope_comparison(s, LatVec{0, 0}, LatVec{1, 0}) == 0);
  CHECK(slope_comparison(s, LatVec{1, -1}, LatVec{1, 0}) == -1);
  CHECK(slope_comparison(s, LatVec{1, 0}, LatVec{1, 0}) == 1);
  const FujikiSetup s2(2, Rational(1), IntLattice{{2, 3}, {3, 0}});
  CHECK(slope_comparison(s2, LatVec{1, -1}, LatVec{1, 0}) == -1);
}

TEST_CASE("fiber_restriction_integral examples") {
  // basis h, f with q(h) = 4, q(h, f) = 1
  const FujikiSetup s(2, Rational(1), IntLattice{{4, 1}, {1, 0}});
  const LatVec h{1, 0}, f{0, 1};
  CHECK(fiber_restriction_integral(s, LatVec{-1, 0}, h, f) == -2);
  CHECK(fiber_restriction_integral(s, f, h, f) == 0);
  const FujikiSetup s1(1, Rational(1), IntLattice{{4, 3}, {3, 0}});
  CHECK(fiber_restriction_integral(s1, LatVec{2, 5}, h, f) == 6);
}

TEST_CASE("a_of and propsemi_bound_check") {
  const FujikiSetup s(2, Rational(1), IntLattice{{2}});
  CHECK(a_of(2, Rational(8), Rational(1)) == 8);
  CHECK(propsemi_bound_check(s, 2, Rational(8), Rational(-8)));
  CHECK(propsemi_bound_check(s, 2, Rational(8), Rational(0)));
  CHECK_FALSE(propsemi_bound_check(s, 2, Rational(8), Rational(-10)));
  CHECK_FALSE(propsemi_bound_check(s, 2, Rational(8), Rational(2)));
}

TEST_CASE("matching enumeration agrees with an independent recursion") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int count = 2 * static_cast<int>(rng.uniform(1, 4));
    std::vector<std::vector<oracle::i64>> q(count, std::vector<oracle::i64>(count));
    for (int i = 0; i < count; ++i) {
      for (int j = i; j < count; ++j) q[i][j] = q[j][i] = rng.uniform(-5, 5);
    }
    std::vector<int> idx(count);
    for (int i = 0; i < count; ++i) idx[i] = i;
    oracle::i64 n = 0;
    const oracle::i64 expect = oracle::matchings(q, idx, &n);
    const PairingOracle po = [&](std::size_t i, std::size_t j) { return Rational(q[i][j]); };
    const MatchingSum got = matchings_sum(count, po);
    REQUIRE(got.value == expect);
    REQUIRE(got.matchings == n);
    REQUIRE(reference::matchings_sum(count, po).value == expect);
  }
}

TEST_CASE("parallel and serial matching sums agree at twelve classes") {
  Rng rng(9);
  std::vector<std::vector<long>> q(12, std::vector<long>(12));
  for (int i = 0; i < 12; ++i) {
    for (int j = i; j < 12; ++j) q[i][j] = q[j][i] = rng.uniform(-3, 3);
  }
  const PairingOracle po = [&](std::size_t i, std::size_t j) { return Rational(q[i][j]); };
  const MatchingSum a = matchings_sum(12, po);
  const MatchingSum b = reference::matchings_sum(12, po);
  CHECK(a.value == b.value);
  CHECK(a.matchings == 10395);
}

TEST_CASE("Fujiki relation on random h") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const IntLattice L = random_even_lattice(rng, 2, 6);
    const LatVec h = rng.vec(2, -4, 4);
    const Rational c(rng.uniform(1, 5));
    const FujikiSetup s(n, c, L);
    const auto hs = repeat(h, 2 * n);
    Rational expect = c;
    for (int k = 1; k <= 2 * n - 1; k += 2) expect *= k;
    for (int k = 0; k < n; ++k) expect *= norm(L, h);
    REQUIRE(top_intersection(s, hs).value == expect);
  }
}

TEST_CASE("matchings_sum is invariant under permutations") {
  Rng rng(17);
  const IntLattice L = random_even_lattice(rng, 3, 4);
  std::vector<LatVec> cls;
  for (int i = 0; i < 6; ++i) cls.push_back(rng.vec(3, -3, 3));
  const Rational base = matchings_sum(L, cls).value;
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<LatVec> p;
    for (int i : perm) p.push_back(cls[i]);
    REQUIRE(matchings_sum(L, p).value == base);
  }
}

TEST_CASE("discriminant additivity on a K3 surface matches the destabilizing identity") {
  // n = 1: Delta = c1^2 - 2 r ch2, additive in (r, c1, ch2).
  Rng rng(19);
  const IntLattice L{{2, 1}, {1, -4}};
  const FujikiSetup s(1, Rational(1), L);
  for (int t = 0; t < 300; ++t) {
    const Integer rE = rng.integer(1, 5), rG = rng.integer(1, 5);
    const LatVec cE = rng.vec(2, -4, 4), cG = rng.vec(2, -4, 4);
    const Rational chE(rng.uniform(-6, 6)), chG(rng.uniform(-6, 6));
    const Integer rF = rE + rG;
    const LatVec cF = cE + cG;
    const Rational chF = chE + chG;
    const Rational dE = norm(L, cE) - 2 * Rational(rE) * chE;
    const Rational dG = norm(L, cG) - 2 * Rational(rG) * chG;
    const Rational dF = norm(L, cF) - 2 * Rational(rF) * chF;
    const LatVec lam = lambda_ef(rE, cE, rF, cF);
    const IdentitySides sides =
        destabilizing_discriminant_identity(s, rE, dE, rG, dG, rF, dF, norm(L, lam), Rational(2));
    REQUIRE(sides.lhs == sides.rhs);
  }
}
