#include "doctest.h"

#include "hkmod/hilb2.hpp"
#include "hkmod/kernels.hpp"
#include "oracle.hpp"

using namespace hkmod;

TEST_CASE("divisibility_type examples") {
  CHECK(divisibility_type(6, 2));
  CHECK(divisibility_type(22, 2));
  CHECK_FALSE(divisibility_type(8, 2));
  CHECK(divisibility_type(8, 1));
  CHECK_FALSE(divisibility_type(21, 2));
  CHECK_FALSE(divisibility_type(7, 1));
}

TEST_CASE("econ_check examples") {
  CHECK(econ_check(2, 6));
  CHECK_FALSE(econ_check(2, 14));
  CHECK(econ_check(5, 10));
  CHECK(econ_check(3, 8));
}

TEST_CASE("m0_s0 examples") {
  const M0S0 a = m0_s0(2, 6);
  CHECK(a.m0 == 1);
  CHECK(a.s0 == 1);
  const M0S0 b = m0_s0(2, 22);
  CHECK(b.m0 == 3);
  CHECK(b.s0 == 2);
  const M0S0 c = m0_s0(3, 8);
  CHECK(c.m0 == 5);
  CHECK(c.s0 == 2);
  CHECK_THROWS_AS(m0_s0(2, 14), MathFailure);
}

TEST_CASE("f2_invariants examples") {
  const F2Invariants two = f2_invariants(2);
  CHECK(two.rank == 4);
  CHECK(two.delta_coeff == 1);
  CHECK(two.d_mod == 30);
  CHECK(two.a_mod == 120);
  const F2Invariants one = f2_invariants(1);
  CHECK(one.rank == 1);
  CHECK(one.delta_coeff == 0);
  CHECK(one.d_mod == 0);
  CHECK(one.a_mod == 0);
  const F2Invariants three = f2_invariants(3);
  CHECK(three.rank == 9);
  CHECK(three.delta_coeff == 6);
  CHECK(three.d_mod == 180);
  CHECK(three.a_mod == 3645);
}

TEST_CASE("h_polarization examples") {
  CHECK(h_polarization(2, 2) == LatVec{2, 0, -1});
  CHECK(h_polarization(3, 1) == LatVec{1, 0, -1});
  CHECK(h_polarization(1, 1) == LatVec{1, 0, 0});
  CHECK_THROWS_AS(h_polarization(2, 1), MathFailure);
}

TEST_CASE("hilb2 lattice and divisibility") {
  const IntLattice L = hilb2_ns(1, 211);
  CHECK(L.gram() == IntLattice{{2, 211, 0}, {211, 0, 0}, {0, 0, -2}}.gram());
  CHECK(ambient_divisibility(LatVec{2, 0, -1}) == 2);
  CHECK(ambient_divisibility(LatVec{1, 0, -1}) == 1);
  CHECK(ambient_divisibility(LatVec{2, 4, 1}) == 2);
}

TEST_CASE("rosetta_check examples") {
  const RosettaResult a = rosetta_check(2, 2, 6, 211);
  CHECK(a.pass);
  CHECK(a.q_h == 6);
  CHECK(a.q_hf == 422);
  CHECK(a.divisibility == 2);
  CHECK(a.q_f == 0);
  const RosettaResult b = rosetta_check(3, 1, 8, 127);
  CHECK(b.pass);
  CHECK(b.q_hf == 127);
  CHECK_THROWS_AS(rosetta_check(2, 2, 14, 211), MathFailure);
}

TEST_CASE("rosetta identities hold across the admissible grid") {
  for (int i = 1; i <= 2; ++i) {
    for (long r0 = 1; r0 <= 10; ++r0) {
      if ((r0 - i) % 2 != 0) continue;
      for (long e = 2; e <= 400; ++e) {
        if (!divisibility_type(e, i) || !econ_check(r0, e)) continue;
        for (long d0 : {1L, 7L, 211L}) {
          const RosettaResult r = rosetta_check(r0, i, e, d0);
          REQUIRE(r.pass);
          // q(h) = i^2 (2 m0 - 2 c^2) with c = (r0 - 1)/2, directly from the Gram matrix
          const M0S0 ms = m0_s0(r0, e);
          const long c2 = (r0 - 1) * (r0 - 1);
          REQUIRE(Integer(i * i) * (2 * ms.m0) - Integer(i * i * c2 / 2) == e);
        }
      }
    }
  }
}

TEST_CASE("restrango_check examples") {
  CHECK(restrango_check(HkType::K3n, 4, 2));
  CHECK_FALSE(restrango_check(HkType::K3n, 8, 2));
  CHECK(restrango_check(HkType::Kumn, 12, 2));
  CHECK_THROWS_AS(restrango_check(HkType::OG6, 4, 2), InvalidInput);
}

TEST_CASE("potenza_solve examples") {
  CHECK(potenza_solve(2, 1, 1, 4, 2) == std::vector<Integer>{2});
  CHECK(potenza_solve(2, 1, 1, 4, 4).empty());
  CHECK(potenza_solve(2, 1, 3, 3, 3).empty());
}

TEST_CASE("potenza_solve equals an exhaustive scan") {
  for (int n = 1; n <= 3; ++n) {
    for (long d1 = 1; d1 <= 4; ++d1) {
      for (long d2 = d1; d2 <= 12; d2 += d1) {
        for (long r = 1; r <= 30; ++r) {
          for (long a = 1; a <= 12; ++a) {
            std::vector<Integer> want;
            for (long r0 = 1; r0 <= 200; ++r0) {
              long p = 1, top = 1;
              for (int k = 0; k < n; ++k) p *= r0;
              for (int k = 0; k < n - 1; ++k) top *= r0;
              const long g = oracle::gcd(r0, d1) * oracle::gcd(r0, d2);
              if (p == r * g && top % g == 0 && oracle::gcd(r, a) == top / g) want.push_back(r0);
            }
            REQUIRE(potenza_solve(n, d1, d2, r, a) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("resemibis_ranks examples and enumeration") {
  CHECK(resemibis_ranks(HkType::K3n, 2, 20) == std::vector<Integer>{1, 4, 9, 16});
  CHECK(resemibis_ranks(HkType::K3n, 3, 30) == std::vector<Integer>{1, 8, 27});
  const auto kum = resemibis_ranks(HkType::Kumn, 2, 10);
  CHECK(kum == std::vector<Integer>{1, 3, 4, 9});
  // OG6: c = 4, r = r0^3 / d with d in {1, 2, 4}
  std::vector<Integer> og;
  for (long r = 1; r <= 100; ++r) {
    bool hit = false;
    for (long r0 = 1; r0 <= 10; ++r0) {
      const long p = r0 * r0 * r0;
      for (long d : {1L, 2L, 4L}) hit = hit || (p % d == 0 && p / d == r);
    }
    if (hit) og.push_back(r);
  }
  CHECK(resemibis_ranks(HkType::OG6, 3, 100) == og);
}

TEST_CASE("semihom_twist_count") {
  CHECK(semihom_twist_count(2) == 4);
  CHECK(semihom_twist_count(3) == 9);
  CHECK(semihom_twist_count(1) == 1);
}

TEST_CASE("mckay_ext_dims examples") {
  const McKayDims a = mckay_ext_dims({1, 0, 1});
  CHECK(a.dims == std::vector<Integer>{1, 0, 1, 0, 1});
  CHECK(a.end0_vanishing);
  const McKayDims b = mckay_ext_dims({1, 1, 1});
  CHECK(b.dims == std::vector<Integer>{1, 1, 2, 1, 1});
  CHECK_FALSE(b.end0_vanishing);
  CHECK(mckay_ext_dims({1, 0, 0}).dims == std::vector<Integer>{1, 0, 0, 0, 0});
  CHECK(mckay_ext_dims({1, 0, 0, 0, 1}).end0_vanishing);
  CHECK_THROWS_AS(mckay_ext_dims({1, 1, 0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(mckay_ext_dims({1, 0}), InvalidInput);
}

TEST_CASE("graded symmetric square by basis counting") {
  for (long a0 = 0; a0 <= 3; ++a0) {
    for (long a2 = 0; a2 <= 3; ++a2) {
      for (long a4 = 0; a4 <= 3; ++a4) {
        // unordered pairs of basis vectors from a0 + a2 + a4 slots, graded by degree sum
        std::vector<long> deg;
        for (long k = 0; k < a0; ++k) deg.push_back(0);
        for (long k = 0; k < a2; ++k) deg.push_back(1);
        for (long k = 0; k < a4; ++k) deg.push_back(2);
        std::vector<Integer> want(5, 0);
        for (std::size_t p = 0; p < deg.size(); ++p) {
          for (std::size_t q = p; q < deg.size(); ++q) want[deg[p] + deg[q]] += 1;
        }
        REQUIRE(mckay_ext_dims({a0, a2, a4}).dims == want);
      }
    }
  }
}

TEST_CASE("unicita_report examples") {
  const TheoremReport a = unicita_report(2, 2, 6);
  CHECK(a.overall());
  CHECK(a.info()["rank"] == "4");
  CHECK(a.info()["c1_coefficient"] == "1");
  CHECK(a.info()["delta_coefficient"] == "1");
  CHECK(a.info()["min_d"] == "422");
  const TheoremReport b = unicita_report(2, 2, 21);
  CHECK_FALSE(b.overall());
  CHECK(b.find("divisibility_type")->status == CheckStatus::Fail);
  CHECK(b.find("rosetta")->status == CheckStatus::Skipped);
  const TheoremReport c = unicita_report(1, 3, 8);
  CHECK(c.overall());
  CHECK(c.info()["rank"] == "9");
  CHECK(c.info()["c1_coefficient"] == "3");
  CHECK(c.info()["delta_coefficient"] == "6");
  const TheoremReport d = unicita_report(2, 2, 14);
  CHECK_FALSE(d.overall());
  CHECK(d.find("econ")->status == CheckStatus::Fail);
  const TheoremReport dv = unicita_report(2, 2, 22);
  CHECK(dv.overall());
  CHECK(dv.info()["min_d"] == "1382");
}

TEST_CASE("econ sweep: m0 integral and r0 | m0 + 1, parallel equals serial") {
  const EconSweep par = sweep_econ(8, 600);
  CHECK(par.failures == 0);
  CHECK(par.admissible > 0);
  CHECK(par == reference::sweep_econ(8, 600));
}
