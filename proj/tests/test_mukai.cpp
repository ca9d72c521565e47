#include "doctest.h"

#include "hkmod/gen.hpp"
#include "hkmod/mukai.hpp"
#include "hkmod/walls.hpp"

using namespace hkmod;

namespace {

const EllipticNS ns41(4, 1);
const IntLattice& NS = ns41.lattice();
const LatVec h{1, 0}, f{0, 1}, zero{0, 0};

}  // namespace

TEST_CASE("mukai_pairing examples") {
  CHECK(mukai_pairing(NS, {1, zero, 1}, {1, zero, 1}) == -2);
  CHECK(mukai_pairing(NS, {1, zero, 0}, {0, zero, 1}) == -1);
  const LatVec l{2, -3};
  CHECK(mukai_square(NS, {0, l, 0}) == norm(NS, l));
  CHECK_THROWS_AS(mukai_square(NS, {1, LatVec{1}, 0}), InvalidInput);
}

TEST_CASE("from_chern examples") {
  CHECK(from_chern(1, zero, 5, NS) == MukaiVector{1, zero, -4});
  CHECK(from_chern(2, h, 3, NS) == MukaiVector{2, h, 1});
  CHECK(from_chern(2, zero, 2, NS) == MukaiVector{2, zero, 0});
  CHECK(discriminant_from_chern(2, 4, 3) == 8);
}

TEST_CASE("numerics examples") {
  const MukaiNumerics hilb = numerics(NS, {1, zero, -4});
  CHECK(hilb.v_square == 8);
  CHECK(hilb.n_v == 5);
  CHECK(hilb.delta == 10);
  const MukaiNumerics two = numerics(NS, {2, zero, -1});
  CHECK(two.v_square == 4);
  CHECK(two.n_v == 3);
  CHECK(two.delta == 12);
  CHECK(two.a_v == 12);
  // (3, h, 1) has square 4 - 6 = -2
  const MukaiNumerics rigid = numerics(NS, {3, h, 1});
  CHECK(rigid.v_square == -2);
  CHECK(rigid.n_v == 0);
  CHECK(rigid.delta == 2 * (9 - 1));
  CHECK_THROWS_AS(numerics(NS, {0, h, 1}), InvalidInput);
}

TEST_CASE("expected_dim_surface examples") {
  CHECK(expected_dim_surface(12, 2, 2, 0) == 6);
  CHECK(expected_dim_surface(2 * (9 - 1), 3, 2, 0) == 0);
  CHECK(expected_dim_surface(0, 2, 0, 2) == 2);
}

TEST_CASE("twist_by_mf and normalize_twist examples") {
  const MukaiVector v{2, h, 0};
  CHECK(twist_by_mf(NS, v, 0, f) == v);
  const MukaiVector w = twist_by_mf(NS, v, 1, f);
  CHECK(w == MukaiVector{2, LatVec{1, 2}, 1});
  CHECK(normalize_twist(NS, v, w, f) == 1);
  CHECK(normalize_twist(NS, v, twist_by_mf(NS, v, 3, f), f) == 3);
  CHECK_THROWS_AS(normalize_twist(NS, v, {2, LatVec{1, 1}, 0}, f), MathFailure);
}

TEST_CASE("twist_by_class agrees with the explicit formula") {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const EllipticNS ns(rng.even(0, 12), rng.uniform(1, 9));
    const IntLattice& L = ns.lattice();
    const MukaiVector v{rng.integer(0, 6), rng.vec(2, -5, 5), rng.integer(-8, 8)};
    const LatVec a = rng.vec(2, -4, 4);
    const MukaiVector w = twist_by_class(L, v, a);
    REQUIRE(w.r == v.r);
    REQUIRE(w.l == v.l + Rational(v.r) * a);
    REQUIRE(w.s == v.s + pair_int(L, v.l, a) + v.r * to_integer(norm(L, a)) / 2);
    REQUIRE(mukai_square(L, w) == mukai_square(L, v));
  }
}

TEST_CASE("Mukai pairing is symmetric and even on even lattices") {
  Rng rng(29);
  for (int t = 0; t < 500; ++t) {
    const IntLattice L = random_even_lattice(rng, 3, 5);
    const MukaiVector v{rng.integer(0, 5), rng.vec(3, -4, 4), rng.integer(-5, 5)};
    const MukaiVector w{rng.integer(0, 5), rng.vec(3, -4, 4), rng.integer(-5, 5)};
    REQUIRE(mukai_pairing(L, v, w) == mukai_pairing(L, w, v));
    REQUIRE(divides(2, mukai_square(L, v)));
  }
}

TEST_CASE("from_chern recovers the discriminant as v^2 + 2 r^2") {
  Rng rng(31);
  for (int t = 0; t < 500; ++t) {
    const EllipticNS ns(rng.even(0, 10), rng.uniform(1, 7));
    const IntLattice& L = ns.lattice();
    const Integer r = rng.integer(1, 6);
    const LatVec c1 = rng.vec(2, -4, 4);
    const Integer c2 = rng.integer(-5, 15);
    const MukaiVector v = from_chern(r, c1, c2, L);
    const Integer delta = discriminant_from_chern(r, to_integer(norm(L, c1)), c2);
    REQUIRE(numerics(L, v).delta == delta);
    REQUIRE(expected_dim_surface(delta, r, 2, 0) == mukai_square(L, v) + 2);
  }
}
