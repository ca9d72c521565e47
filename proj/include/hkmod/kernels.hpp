#pragma once

// Parameter-grid sweeps. The default versions fan out with OpenMP; the
// functions in `reference` are the serial versions they are tested against.
// Both produce identical results in identical order.

#include <string>
#include <vector>

#include "hkmod/arith.hpp"

namespace hkmod {

struct EconSweep {
  long candidates = 0;  // (i, r0, e) triples examined
  long admissible = 0;  // passing parity, divisibility type and econ
  long failures = 0;    // admissible triples where m0 or s0 is not integral
  std::vector<std::string> failure_samples;  // first few failures, in grid order

  bool operator==(const EconSweep&) const = default;
};

/// Checks m0 and s0 integrality for i in {1, 2}, 1 <= r0 <= r0_max, 1 <= e <= e_max.
EconSweep sweep_econ(long r0_max, long e_max);

struct WallCell {
  long e;
  long d;
  long a;
  std::size_t walls;    // number of a-wall classes
  Integer min_negative;  // min |q| over negative classes

  bool operator==(const WallCell&) const = default;
};

/// Wall counts over even e in [e_min, e_max], 1 <= d <= d_max, 1 <= a <= a_max.
std::vector<WallCell> sweep_walls(long e_min, long e_max, long d_max, long a_max);

namespace reference {

EconSweep sweep_econ(long r0_max, long e_max);
std::vector<WallCell> sweep_walls(long e_min, long e_max, long d_max, long a_max);

}  // namespace reference

}  // namespace hkmod
