#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "svf/rational.hpp"

namespace svf {

// Two-component boundary state. A vector and its dual share the same
// components (no conjugation anywhere in this model).
struct BoundaryVector {
  Rational c1;
  Rational c2;

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
};

// <bra|ket> = bra.c1*ket.c1 + bra.c2*ket.c2
inline Rational pairing(const BoundaryVector& bra, const BoundaryVector& ket) {
  return bra.c1 * ket.c1 + bra.c2 * ket.c2;
}

// The four boundary states: north and east dual vectors close the lattice
// from above/right, west and south kets feed it from the left/bottom.
struct BoundaryVectors {
  BoundaryVector north;
  BoundaryVector east;
  BoundaryVector south;
  BoundaryVector west;
};

struct ModelParams {
  Rational c;               // crossing constant, nonzero
  std::vector<Rational> u;  // horizontal (row) rapidities u_1..u_m
  std::vector<Rational> v;  // vertical (column) rapidities v_1..v_n
  BoundaryVectors vectors;
  std::optional<std::pair<int, int>> split;  // (n, m) for trapezoid / efp
};

}  // namespace svf
