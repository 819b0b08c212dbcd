#pragma once

#include <vector>

#include "svf/model.hpp"
#include "svf/rational.hpp"

namespace svf {

// Emptiness probability inputs: n columns, emptiness length m, the full
// rapidity list v_1..v_{n+m}, crossing constant, and the north/south/west
// boundary vectors (east plays no role in P(m)). The probabilistic
// reading needs v_1 <= ... <= v_{n+m}, nonnegative components and c > 0;
// the formulas evaluate anywhere pole-free and no [0,1] claim is made
// outside that regime.
struct EfpParams {
  int n = 0;
  int m = 0;
  std::vector<Rational> v_all;
  Rational c;
  BoundaryVectors vecs;
};

// gamma = -n2 (s2 w1 - s1 w2) / (s1 (n1 w1 + n2 w2)); equals beta with the
// east vector pinned to (1, 0). Degeneracy error when s1 = 0 or <n|w> = 0.
Rational gamma_constant(const BoundaryVectors& vecs);

// (n1 s1 / (n.s))^m * det_{m x m}[ delta_jk
//     - gamma c / (v_{j+n} - v_{k+n} + c)
//       * prod_{i<=n} (v_{j+n} - v_i)/(v_{j+n} - v_i + c)
//       * prod_{i != j} (v_{j+n} - v_{i+n} + c)/(v_{j+n} - v_{i+n}) ]
// m = 0 returns 1. Poles reported by name.
Rational efp_determinant(const EfpParams& p);

// Contraction-backed route, independent of the determinant transcription:
// rectangle with east pinned to (1,0) and u := (v_{n+1}..v_{n+m}), times
// n1^m and the frozen-wedge weight prod_{n+1<=i<j<=n+m}(v_j - v_i + c)/c,
// normalized by the trapezoid value.
Rational efp_components(const EfpParams& p);

}  // namespace svf
