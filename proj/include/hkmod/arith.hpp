#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkmod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed input: wrong dimensions, unparsable numbers, bad JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition or hypothesis does not hold for the data.
class MathFailure : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates before finding an answer.
class SearchCapExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold by construction was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// num / den in canonical form. Use this rather than the two-argument
/// mpq_class constructor, which does not reduce.
inline Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

/// Floor of a rational.
inline Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Ceiling of a rational.
inline Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Returns the integer value of q, throwing if q has a denominator.
inline Integer to_integer(const Rational& q, std::string_view what = "value") {
  if (!is_integer(q)) {
    throw MathFailure(std::string(what) + " is not an integer: " + q.get_str());
  }
  return q.get_num();
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Rational pow(const Rational& base, unsigned long exp) {
  Rational out(pow(base.get_num(), exp), pow(base.get_den(), exp));
  out.canonicalize();
  return out;
}

inline Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// (2k-1)!! with the convention (-1)!! = 1.
inline Integer double_factorial_odd(long k) {
  Integer out = 1;
  for (long j = 2 * k - 1; j > 1; j -= 2) out *= j;
  return out;
}

/// Result of the extended Euclidean algorithm: gcd = a*x + b*y, gcd >= 0.
struct Bezout {
  Integer gcd;
  Integer x;
  Integer y;
};

Bezout extended_gcd(const Integer& a, const Integer& b);

/// Parses "p/q", "p" or a decimal integer into a canonical rational.
Rational parse_rational(std::string_view text);

/// Parses an integer, rejecting anything with a denominator.
Integer parse_integer(std::string_view text);

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace hkmod
