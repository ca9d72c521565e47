#include "doctest.h"

#include "hkmod/gen.hpp"
#include "hkmod/reduction.hpp"
#include "oracle.hpp"

using namespace hkmod;

TEST_CASE("atiyah_exists") {
  CHECK(atiyah_exists(2, 1).exists);
  CHECK_FALSE(atiyah_exists(2, 4).exists);
  CHECK(atiyah_exists(5, 3).exists);
  CHECK(atiyah_exists(5, 3).unique);
  CHECK_THROWS_AS(atiyah_exists(0, 1), InvalidInput);
}

TEST_CASE("bezout_r0_d0 examples") {
  const BezoutPair a = bezout_r0_d0(5, 3);
  CHECK(a.r0 == 2);
  CHECK(a.d0 == 1);
  const BezoutPair b = bezout_r0_d0(2, 1);
  CHECK(b.r0 == 1);
  CHECK(b.d0 == 0);
  const BezoutPair c = bezout_r0_d0(7, 3);
  CHECK(c.r0 == 5);
  CHECK(c.d0 == 2);
  CHECK_THROWS_AS(bezout_r0_d0(4, 2), MathFailure);
  CHECK_THROWS_AS(bezout_r0_d0(1, 2), InvalidInput);
}

TEST_CASE("bezout pair equals the unique brute-force solution") {
  for (long r = 2; r <= 30; ++r) {
    for (long k = -40; k <= 40; ++k) {
      if (oracle::gcd(r, k) != 1) continue;
      long hits = 0, r0 = 0, d0 = 0;
      for (long x = 1; x < r; ++x) {
        if ((k * x - 1) % r == 0) {
          ++hits;
          r0 = x;
          d0 = (k * x - 1) / r;
        }
      }
      REQUIRE(hits == 1);
      const BezoutPair p = bezout_r0_d0(r, k);
      REQUIRE(p.r0 == r0);
      REQUIRE(p.d0 == d0);
    }
  }
}

TEST_CASE("rigid_vector examples") {
  const EllipticNS ns(4, 1);
  const MukaiVector w = rigid_vector(ns.lattice(), {2, LatVec{1, 0}, 0}, ns.f());
  CHECK(w == MukaiVector{2, LatVec{1, 3}, 3});
  CHECK(mukai_square(ns.lattice(), w) == -2);
  const EllipticNS ns23(2, 3);
  const MukaiVector v{2, LatVec{1, 0}, 1};
  CHECK(mukai_square(ns23.lattice(), v) == -2);
  CHECK(rigid_vector(ns23.lattice(), v, ns23.f()) == v);
  CHECK_THROWS_AS(rigid_vector(ns.lattice(), {2, LatVec{2, 0}, 5}, ns.f()), MathFailure);
}

TEST_CASE("rigid_vector on random cases lands on square -2") {
  Rng rng(37);
  for (int t = 0; t < 1000; ++t) {
    const RigidCase c = random_rigid_case(rng, 40, 60, 12, 40);
    REQUIRE(mukai_square(c.ns.lattice(), c.v) == c.v_square);
    const MukaiVector w = rigid_vector(c.ns.lattice(), c.v, c.ns.f());
    REQUIRE(mukai_square(c.ns.lattice(), w) == -2);
    REQUIRE(w.r == c.v.r);
  }
}

TEST_CASE("elementary_modification examples") {
  const EllipticNS ns(4, 1);
  const MukaiVector w{2, LatVec{1, 0}, 0};
  const MukaiVector w1 = elementary_modification(ns.lattice(), w, {1, 0}, ns.f());
  CHECK(w1 == MukaiVector{2, LatVec{1, -1}, 0});
  CHECK(mukai_square(ns.lattice(), w1) == 2);
  const EllipticNS ns42(4, 2);
  const MukaiVector w3{3, LatVec{1, 0}, 0};
  CHECK(mukai_square(ns42.lattice(), w3) - mukai_square(ns42.lattice(), elementary_modification(ns42.lattice(), w3, {1, 0}, ns42.f())) == 4);
  // equal slopes: r_B k = r deg_B
  const EllipticNS ns43(4, 3);
  CHECK_THROWS_AS(elementary_modification(ns43.lattice(), w3, {1, 1}, ns43.f()), MathFailure);
  const MukaiVector eq = elementary_modification(ns43.lattice(), w3, {1, 1}, ns43.f(), {.allow_equal_slope = true});
  CHECK(mukai_square(ns43.lattice(), eq) == mukai_square(ns43.lattice(), w3));
  CHECK_THROWS_AS(elementary_modification(ns.lattice(), w, {2, 0}, ns.f()), MathFailure);
}

TEST_CASE("reduction_trace examples") {
  const EllipticNS ns(4, 2);
  const MukaiVector w0{3, LatVec{1, 0}, 0};
  CHECK(reduction_trace(ns.lattice(), w0, {}, ns.f()).squares == std::vector<Integer>{4});
  const ReductionTrace t = reduction_trace(ns.lattice(), w0, {{2, 1}, {1, 0}}, ns.f());
  CHECK(t.squares == std::vector<Integer>{4, 2, -2});
  CHECK(t.vectors.size() == 3);
  CHECK_THROWS_WITH_AS(reduction_trace(ns.lattice(), w0, {{2, 1}, {1, 0}, {2, 1}}, ns.f()),
                       doctest::Contains("below rigid bound"), MathFailure);
}

TEST_CASE("square drop law on random valid steps") {
  Rng rng(41);
  for (int t = 0; t < 2000; ++t) {
    const RigidCase c = random_rigid_case(rng, 20, 30, 8, 40);
    const IntLattice& L = c.ns.lattice();
    const ModificationStep s = random_valid_step(rng, L, c.v, c.ns.f());
    const Integer k = pair_int(L, c.ns.f(), c.v.l);
    const MukaiVector w1 = elementary_modification(L, c.v, s, c.ns.f());
    REQUIRE(mukai_square(L, c.v) - mukai_square(L, w1) == 2 * (s.r_B * k - c.v.r * s.deg_B));
    REQUIRE(w1.l == c.v.l - Rational(s.r_B) * c.ns.f());
    REQUIRE(w1.s == c.v.s - s.deg_B);
  }
}

TEST_CASE("hom_count_check examples") {
  const HomCount a = hom_count_check(3, 5, 2, 1);
  CHECK(a.value == 1);
  CHECK(a.is_bezout);
  CHECK(hom_count_check(1, 2, 1, 0).value == 1);
  const HomCount c = hom_count_check(3, 5, 4, 2);
  CHECK(c.value == 2);
  CHECK_FALSE(c.is_bezout);
}

TEST_CASE("nonlocally_free_dim_identity examples") {
  const EllipticNS ns(4, 1);
  const LatVec z{0, 0};
  const DimensionIdentity a = nonlocally_free_dim_identity(ns.lattice(), {2, z, -1}, 1);
  CHECK(a.lhs == 5);
  CHECK(a.rhs == 5);
  CHECK(a.contradiction);
  CHECK(nonlocally_free_dim_identity(ns.lattice(), {1, z, -2}, 3).rhs == 2 * 3);
  CHECK(nonlocally_free_dim_identity(ns.lattice(), {3, z, -1}, 2).rhs == 2 * 4 - 4);
}

TEST_CASE("dimension identity recomputed by expansion") {
  Rng rng(43);
  for (int t = 0; t < 500; ++t) {
    const EllipticNS ns(rng.even(0, 12), rng.uniform(1, 9));
    const IntLattice& L = ns.lattice();
    const MukaiVector v{rng.integer(1, 20), rng.vec(2, -6, 6), rng.integer(-10, 10)};
    const Integer len = rng.integer(1, 20);
    const MukaiVector vl{v.r, v.l, v.s + len};
    const Integer n = mukai_square(L, v) / 2 + 1;
    const Integer lhs = mukai_square(L, vl) + 2 + len * (v.r + 1);
    const DimensionIdentity got = nonlocally_free_dim_identity(L, v, len);
    REQUIRE(got.lhs == lhs);
    REQUIRE(got.rhs == 2 * n - (v.r - 1) * len);
  }
}
