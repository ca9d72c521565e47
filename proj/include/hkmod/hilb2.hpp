#pragma once

// Numerics of modular bundles on Hilbert squares of K3 surfaces:
// polarization types, the congruence conditions on (r0, e), the invariants of
// the rank r0^2 bundles F[2]+-, rank constraints and the aggregated
// uniqueness report.
//
// NS(S^[2]) is modelled on the basis (mu D, mu C, delta) with
//   D.D = 2 m0, D.C = d0, C.C = 0, q(delta) = -2.

#include <vector>

#include "hkmod/fujiki.hpp"
#include "hkmod/nl_search.hpp"
#include "hkmod/report.hpp"

namespace hkmod {

enum class Variant { Plus, Minus };

/// i = 1: e > 0 even. i = 2: e > 0 and e = 6 (mod 8).
bool divisibility_type(const Integer& e, int i);

/// The four-case congruence on e modulo 8 r0 or 2 r0.
bool econ_check(const Integer& r0, const Integer& e);

struct M0S0 {
  Integer m0;
  Integer s0;  // (m0 + 1) / r0
};

/// m0 = e/2 + (r0-1)^2/4 for odd r0 and e/8 + (r0-1)^2/4 for even r0; the
/// Minus variant replaces (r0-1)^2 by (r0+1)^2. Throws MathFailure when
/// econ_check fails.
M0S0 m0_s0(const Integer& r0, const Integer& e, Variant variant = Variant::Plus);

struct F2Invariants {
  Integer rank;         // r0^2
  Integer delta_coeff;  // rank (rank - 1) / 12, coefficient of c2(X) in Delta
  Rational d_mod;       // 5 binom(rank, 2)
  Rational a_mod;       // (5/8) r0^6 (r0^2 - 1)
};

F2Invariants f2_invariants(const Integer& r0);

IntLattice hilb2_ns(const Integer& m0, const Integer& d0);

/// i (mu D - ((r0 -+ 1)/2) delta); integrality is asserted.
LatVec h_polarization(const Integer& r0, int i, Variant variant = Variant::Plus);

/// gcd of coefficients of the mu-part with twice the delta coefficient: the
/// mu-part sits in a unimodular lattice and delta^perp is unimodular.
Integer ambient_divisibility(const LatVec& v);

struct RosettaResult {
  IntLattice ns;
  LatVec h;
  LatVec f;
  Integer q_h;
  Integer divisibility;
  Integer q_hf;
  Integer q_f;
  bool saturated;
  bool d0_coprime;  // informational
  bool pass;
};

RosettaResult rosetta_check(const Integer& r0, int i, const Integer& e, const Integer& d0,
                            Variant variant = Variant::Plus);

/// K3^[2]: r | m^2. Kum_2: r | 3 m^2.
bool restrango_check(HkType kind, const Integer& r, const Integer& m);

/// Every r0 with r0^n = r g1 g2 and gcd(r, a) = r0^(n-1) / (g1 g2), where
/// g_j = gcd(r0, d_j).
std::vector<Integer> potenza_solve(int n, const Integer& d1, const Integer& d2, const Integer& r, const Integer& a);

/// Ranks r <= r_max of the form r0^n / d with d | c_X and d | r0^n.
std::vector<Integer> resemibis_ranks(HkType kind, int n, const Integer& r_max);

Integer semihom_twist_count(const Integer& r);

struct McKayDims {
  std::vector<Integer> dims;  // degrees 0, 2, ..., 8
  bool end0_vanishing;        // dims == (1, 0, 1, 0, 1)
};

/// Graded symmetric square of an Ext algebra concentrated in even degrees.
/// Accepts (a0, a2, a4), or (a0, a1, a2, a3, a4) with a1 = a3 = 0.
McKayDims mckay_ext_dims(const std::vector<Integer>& ext_dims);

/// Least d0 coprime to r0 above the digrande bound such that d = i d0 also
/// satisfies the pazienza bound and e does not divide 2d.
Integer realizing_d0(const Integer& r0, int i, const Integer& e, const Integer& m0, SearchOptions options = {});

TheoremReport unicita_report(int i, const Integer& r0, const Integer& e, SearchOptions options = {});

}  // namespace hkmod
