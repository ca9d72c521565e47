#pragma once

// Top intersection products on hyperkähler manifolds through the polarized
// Fujiki relation: a product of 2n degree-two classes is c_X times the sum,
// over perfect matchings of the factors, of the products of BBF pairings.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hkmod/lattice.hpp"

namespace hkmod {

enum class HkType { K3Surface, K3n, Kumn, OG6 };

std::string to_string(HkType type);
HkType parse_hk_type(std::string_view name);

/// Normalized Fujiki constant of the built-in deformation types.
/// K3 surface and K3^[n]: 1; Kum_n: n+1; OG6: 4.
Rational builtin_fujiki_constant(HkType type, int n);

/// Complex half-dimension forced by the type (1 for a K3 surface, 3 for OG6,
/// the caller's n otherwise).
int builtin_half_dimension(HkType type, int n);

struct FujikiSetup {
  int n;           // half the complex dimension
  Rational c_X;    // normalized Fujiki constant, > 0
  IntLattice pairing;

  FujikiSetup(int n, Rational c_X, IntLattice pairing);
  static FujikiSetup builtin(HkType type, int n, IntLattice pairing);
};

/// Modularity data of a sheaf: the constant d(F) and the rank.
struct ModularClass {
  Rational d_F;
  Integer r;
};

struct MatchingSum {
  Rational value;
  Integer matchings;  // number of perfect matchings enumerated
};

/// Pairing between the i-th and j-th input classes.
using PairingOracle = std::function<Rational(std::size_t, std::size_t)>;

/// Sum over all (2k-1)!! perfect matchings of {0..count-1}, enumerated
/// canonically (the smallest unmatched index is always paired first), of the
/// product of the pairings of the matched couples.
MatchingSum matchings_sum(std::size_t count, const PairingOracle& q);
MatchingSum matchings_sum(const IntLattice& L, std::span<const LatVec> classes);

/// \int_X alpha_1 ... alpha_2n = c_X * matchings_sum.
MatchingSum top_intersection(const FujikiSetup& setup, std::span<const LatVec> classes);

/// \int_X Delta(F) alpha_1 ... alpha_{2n-2} for a modular sheaf.
Rational modular_delta_integral(const FujikiSetup& setup, const ModularClass& mc, std::span<const LatVec> alphas);

/// r(F) c_1(E) - r(E) c_1(F).
LatVec lambda_ef(const Integer& rE, const LatVec& c1E, const Integer& rF, const LatVec& c1F);

/// Sign of mu_h(E) - mu_h(F), read off q(lambda, h) (requires q(h) > 0).
/// The sign is cross-checked against \int lambda h^{2n-1}.
int slope_comparison(const FujikiSetup& setup, const LatVec& lambda, const LatVec& h);

/// n! c_X q(h,f)^{n-1} q(lambda,f) for isotropic f; agreement with the
/// matching expansion of \int lambda h^{n-1} f^n is asserted.
Rational fiber_restriction_integral(const FujikiSetup& setup, const LatVec& lambda, const LatVec& h, const LatVec& f);

/// a(F) = r^2 d(F) / (4 c_X).
Rational a_of(const Integer& r, const Rational& d_F, const Rational& c_X);

/// -a(F) <= q(lambda) <= 0.
bool propsemi_bound_check(const FujikiSetup& setup, const Integer& r, const Rational& d_F,
                          const Rational& lambda_norm);

/// Both sides of the additive discriminant identity for 0 -> E -> F -> G -> 0
/// integrated against h^{2n-2}, with F modular:
///   r_F r_G I_E + r_F r_E I_G  =  (r_E r_G d_F + c_X q(lambda)) (2n-3)!! q(h)^{n-1}
/// where I_E, I_G are the integrals of Delta(E), Delta(G) against h^{2n-2}.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
};
IdentitySides destabilizing_discriminant_identity(const FujikiSetup& setup, const Integer& rE,
                                                  const Rational& deltaE_h, const Integer& rG,
                                                  const Rational& deltaG_h, const Integer& rF,
                                                  const Rational& d_F, const Rational& lambda_norm,
                                                  const Rational& q_h);

namespace reference {
/// Serial recursive enumeration kept as the reference for the parallel kernel.
MatchingSum matchings_sum(std::size_t count, const PairingOracle& q);
}  // namespace reference

}  // namespace hkmod
