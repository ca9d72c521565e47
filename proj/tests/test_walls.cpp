#include "doctest.h"

#include "hkmod/kernels.hpp"
#include "hkmod/walls.hpp"
#include "oracle.hpp"

using namespace hkmod;

namespace {

bool contains(const std::vector<WallClass>& ws, const LatVec& v) {
  for (const auto& w : ws) {
    if (w.lambda == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("enumerate_wall_classes examples") {
  const auto w236 = enumerate_wall_classes(EllipticNS(2, 3), Rational(6));
  REQUIRE(w236.size() == 2);
  CHECK(w236[0].lambda == LatVec{1, -1});
  CHECK(w236[0].norm == -4);
  CHECK(w236[1].lambda == LatVec{2, -1});
  CHECK(w236[1].norm == -4);
  CHECK(enumerate_wall_classes(EllipticNS(4, 31), Rational(12)).empty());
  const auto w41 = enumerate_wall_classes(EllipticNS(4, 1), Rational(12));
  CHECK(contains(w41, LatVec{1, -8}));
  for (const auto& w : w41) {
    if (w.lambda == LatVec{1, -8}) {
      CHECK(w.norm == -12);
    }
  }
  CHECK_THROWS_AS(enumerate_wall_classes(EllipticNS(2, 3), Rational(0)), InvalidInput);
}

TEST_CASE("is_suitable examples") {
  const SuitabilityReport bad = is_suitable(EllipticNS(4, 1), Rational(12));
  CHECK_FALSE(bad.suitable);
  CHECK(contains(bad.witnesses, LatVec{1, -8}));
  bool strict_clash = false;
  for (const auto& w : bad.witnesses) {
    CHECK(w.norm >= -12);
    CHECK(w.norm < 0);
    CHECK(sign(w.pair_h) != sign(w.pair_f));
    strict_clash = strict_clash || sign(w.pair_h) * sign(w.pair_f) < 0;
  }
  CHECK(strict_clash);
  // h itself lies on the wall of (1, -4)
  CHECK_FALSE(bad.generic);
  CHECK(contains(bad.on_wall, LatVec{1, -4}));
  const SuitabilityReport r236 = is_suitable(EllipticNS(2, 3), Rational(6));
  CHECK_FALSE(r236.suitable);
  CHECK(contains(r236.witnesses, LatVec{1, -1}));
  const SuitabilityReport good = is_suitable(EllipticNS(4, 31), Rational(12));
  CHECK(good.suitable);
  CHECK(good.generic);
  CHECK(good.witnesses.empty());
}

TEST_CASE("same_chamber examples") {
  const EllipticNS ns(4, 1);
  // a generic class on the h side of the (1, -8) wall: pair((1, -8), 2h + f) = -7
  REQUIRE(walls_through(ns, Rational(12), LatVec{2, 1}).empty());
  CHECK(same_chamber(ns, Rational(12), LatVec{2, 1}, LatVec{2, 1}));
  CHECK_FALSE(same_chamber(ns, Rational(12), LatVec{1, 0}, LatVec{1, 9}));
  CHECK_FALSE(same_chamber(ns, Rational(12), LatVec{2, 1}, LatVec{1, 9}));
  const EllipticNS far(4, 31);
  CHECK(same_chamber(far, Rational(12), LatVec{1, 0}, LatVec{1, 50}));
}

TEST_CASE("min_negative_norm examples") {
  CHECK(min_negative_norm(EllipticNS(2, 3)) == 4);
  CHECK(min_negative_norm(EllipticNS(4, 31)) == 30);
  CHECK(min_negative_norm(EllipticNS(2, 1)) == 2);
  CHECK(has_minus_two_class(EllipticNS(2, 1)));
  CHECK_FALSE(has_minus_two_class(EllipticNS(4, 31)));
}

TEST_CASE("no_wall_threshold examples") {
  CHECK(no_wall_threshold(4, Rational(12)) == 31);
  CHECK(no_wall_threshold(2, Rational(6)) == 10);
  CHECK(no_wall_threshold(2, frac(1, 2)) == 1);
}

TEST_CASE("wall_ray examples") {
  const EllipticNS ns(2, 3);
  const auto walls = enumerate_wall_classes(ns, Rational(6));
  CHECK(wall_ray(ns, walls[0]) == LatVec{3, 1});
  CHECK(wall_ray(ns, walls[1]) == LatVec{6, -1});
  for (const auto& w : walls) {
    const LatVec ray = wall_ray(ns, w);
    CHECK(pair(ns.lattice(), ray, w.lambda) == 0);
    CHECK(norm(ns.lattice(), ray) > 0);
  }
}

TEST_CASE("wall enumeration equals the brute-force box scan") {
  for (long e = 0; e <= 10; e += 2) {
    for (long d = 1; d <= 15; ++d) {
      for (long a = 1; a <= 20; a += 3) {
        const auto got = enumerate_wall_classes(EllipticNS(e, d), Rational(a));
        const auto want = oracle::wall_box(e, d, a);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
          REQUIRE(got[k].lambda == LatVec{want[k].x, want[k].y});
          REQUIRE(got[k].norm == want[k].norm);
        }
      }
    }
  }
}

TEST_CASE("min_negative_norm equals a box scan and respects 2d/(1+e)") {
  for (long e = 0; e <= 12; e += 2) {
    for (long d = 1; d <= 20; ++d) {
      const Integer m = min_negative_norm(EllipticNS(e, d));
      REQUIRE(m == oracle::min_negative_box(e, d, 2 * d + 2));
      REQUIRE(Rational(m) >= frac(2 * d, 1 + e));
    }
  }
}

TEST_CASE("past the threshold there is a single chamber") {
  for (long e = 2; e <= 10; e += 2) {
    for (long a = 1; a <= 20; ++a) {
      const Integer d = no_wall_threshold(e, Rational(a));
      const EllipticNS ns(Integer(e), d);
      REQUIRE(enumerate_wall_classes(ns, Rational(a)).empty());
      REQUIRE(is_suitable(ns, Rational(a)).suitable);
      REQUIRE(same_chamber(ns, Rational(a), LatVec{1, 0}, LatVec{1, 7}));
    }
  }
}

TEST_CASE("walls_through finds a constructed orthogonal class") {
  const EllipticNS ns(4, 1);
  // pair((1,-8), (x,y)) = y - 4x
  const auto on = walls_through(ns, Rational(12), LatVec{1, 4});
  CHECK(contains(on, LatVec{1, -8}));
  CHECK(walls_through(ns, Rational(12), LatVec{1, 0}).empty() == is_suitable(ns, Rational(12)).generic);
}

TEST_CASE("parallel wall sweep matches the serial reference") {
  CHECK(sweep_walls(2, 8, 12, 10) == reference::sweep_walls(2, 8, 12, 10));
}
