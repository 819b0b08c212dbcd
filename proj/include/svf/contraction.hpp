#pragma once

#include <span>
#include <vector>

#include "svf/model.hpp"
#include "svf/rational.hpp"
#include "svf/vertex.hpp"

namespace svf {

// Dense exact state over L two-state sites. Fixed layout, never to change:
// site k occupies bit position L-k of the basis index (site 1 is the most
// significant bit), |1> <-> bit 0, |2> <-> bit 1.
struct StateVector {
  int num_sites = 0;
  std::vector<Rational> amps;  // size 2^num_sites

  // |site>^(x)n
  static StateVector product_state(int n, const BoundaryVector& site);
};

// Applies R to the (site_j, site_k) pair, site_j being the first tensor
// factor of R, identity elsewhere. 1-based sites, InputError out of range.
void apply_gate(StateVector& state, int site_j, int site_k, const RMatrix& r);

// <bra|^(x)L applied to the state.
Rational contract_all(const StateVector& state, const BoundaryVector& bra);

// Triangular partition function: n lines enter at the bottom in |s>, each
// pair crosses once, all exit right into <e|. Line i's crossings are
// applied in the order (i,i+1), (i,i+2), ..., (i,n), and line groups in
// the order i = 1..n-1; the rightmost factor of the defining operator
// product acts first. n = 0 gives the empty contraction 1.
Rational triangular_contract(std::span<const Rational> u, const Rational& c,
                             const BoundaryVector& e, const BoundaryVector& s);

// Generalized-domain-wall rectangle: m horizontal lines (w in, e out)
// crossing n vertical lines (s in, n out). Row i applies gates at columns
// k = 1..n in order, rows in order i = 1..m. Evaluated by row peeling:
// one 2^n column state, an auxiliary site adjoined per row and contracted
// with <e| as soon as the row is done. Cost O(m n 2^n).
Rational gdw_contract(const ModelParams& params);

// Same rectangle with the east vector replaced by `east`.
Rational gdw_contract_fixed_east(const ModelParams& params,
                                 const BoundaryVector& east);

// Trapezoid partition function T_{n,m}(v_1..v_n | v_{n+1}..v_{n+m}),
// computed as the exact quotient of two contractions:
//
//     gdw(u := (v_{n+1}..v_{n+m}) | v_1..v_{n+m}) / triangular(v_{n+1}..v_{n+m})
//
// with an auxiliary east vector (the params' own east when <e|s> != 0,
// else a fallback with nonzero pairing). The value does not depend on
// that choice. Degeneracy error when the divisor vanishes, naming the
// vanishing factor.
Rational trapezoid_value(std::span<const Rational> v_all, int n, int m,
                         const Rational& c, const BoundaryVectors& vecs);

// Same with an explicit auxiliary east vector (for independence checks).
Rational trapezoid_value_aux(std::span<const Rational> v_all, int n, int m,
                             const Rational& c, const BoundaryVectors& vecs,
                             const BoundaryVector& aux_east);

// Coefficients (ascending degree) of the triangular partition function as
// a univariate polynomial in u[var_index-1], interpolated through the
// given distinct nodes. var_index is 1-based.
std::vector<Rational> triangular_degree_profile(
    std::span<const Rational> u, const Rational& c, const BoundaryVector& e,
    const BoundaryVector& s, int var_index, std::span<const Rational> nodes);

}  // namespace svf
