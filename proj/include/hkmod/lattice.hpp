#pragma once

// Finite-rank integral lattices with an exact symmetric pairing.

#include <initializer_list>
#include <string>
#include <vector>

#include "hkmod/arith.hpp"

namespace hkmod {

/// A coordinate vector with exact rational entries. Most classes are
/// integral; rational coordinates appear for intermediate classes such as
/// half-integral polarizations before rescaling.
class LatVec {
 public:
  LatVec() = default;
  explicit LatVec(std::vector<Rational> coords);
  explicit LatVec(const std::vector<Integer>& coords);
  LatVec(std::initializer_list<long> coords);

  static LatVec zero(std::size_t rank);
  static LatVec basis(std::size_t rank, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  bool is_zero() const;
  /// Integer coordinates; throws MathFailure if the vector is not integral.
  std::vector<Integer> integer_coords() const;

  LatVec operator+(const LatVec& other) const;
  LatVec operator-(const LatVec& other) const;
  LatVec operator-() const;
  friend LatVec operator*(const Rational& c, const LatVec& v);
  bool operator==(const LatVec& other) const = default;

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const LatVec& v);

/// A lattice Z^rank with symmetric Gram matrix.
class IntLattice {
 public:
  IntLattice(std::vector<std::vector<Integer>> gram, std::string label = "");
  IntLattice(std::initializer_list<std::initializer_list<long>> gram, std::string label = "");

  std::size_t rank() const { return gram_.size(); }
  const std::vector<std::vector<Integer>>& gram() const { return gram_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::string& label() const { return label_; }
  bool nondegenerate() const { return determinant_ != 0; }
  const Integer& determinant() const { return determinant_; }

 private:
  std::vector<std::vector<Integer>> gram_;
  std::string label_;
  Integer determinant_;
};

/// v^T * gram * w.
Rational pair(const IntLattice& L, const LatVec& v, const LatVec& w);
Rational norm(const IntLattice& L, const LatVec& v);

/// Integer pairing of integral vectors; throws if either is not integral.
Integer pair_int(const IntLattice& L, const LatVec& v, const LatVec& w);

/// gcd over basis vectors b_i of |pair(v, b_i)|; 0 when v pairs trivially.
Integer divisibility(const IntLattice& L, const LatVec& v);

/// gcd of the coordinates of an integral vector (0 for the zero vector).
Integer content(const LatVec& v);

bool is_primitive(const IntLattice& L, const LatVec& v);
LatVec primitive_part(const IntLattice& L, const LatVec& v);

/// True iff span(v1, v2) is saturated in Z^rank, i.e. the 2x2 minors of the
/// coordinate matrix have gcd 1.
bool saturation_check(const IntLattice& L, const LatVec& v1, const LatVec& v2);

/// det(gram), computed by fraction-free elimination.
Integer discriminant(const IntLattice& L);

/// Exact determinant of a square integer matrix (Bareiss).
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace hkmod
