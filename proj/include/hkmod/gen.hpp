#pragma once

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "hkmod/mukai.hpp"
#include "hkmod/reduction.hpp"
#include "hkmod/walls.hpp"

namespace hkmod {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  long even(long lo, long hi) { return 2 * uniform((lo + 1) / 2, hi / 2); }
  bool coin() { return uniform(0, 1) == 1; }
  Integer integer(long lo, long hi) { return Integer(uniform(lo, hi)); }
  LatVec vec(std::size_t rank, long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Random even symmetric integer matrix with entries in [-bound, bound].
IntLattice random_even_lattice(Rng& rng, std::size_t rank, long bound);

struct RigidCase {
  EllipticNS ns;
  MukaiVector v;
  Integer v_square;  // the square the generator aimed for
};

/// Elliptic NS with 2 <= e <= e_max even, d <= d_max and v of rank 2..r_max with
/// gcd(r, q(f, l)) = 1 and v^2 = a random even value in [-2, sq_max].
RigidCase random_rigid_case(Rng& rng, long e_max, long d_max, long r_max, long sq_max);

/// A step that strictly destabilizes the fiber restriction of w.
ModificationStep random_valid_step(Rng& rng, const IntLattice& NS, const MukaiVector& w, const LatVec& f);

}  // namespace hkmod
