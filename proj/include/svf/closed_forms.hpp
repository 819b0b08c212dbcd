#pragma once

#include <span>

#include "svf/model.hpp"
#include "svf/rational.hpp"

namespace svf {

// (e.s)^n * prod_{i<j} (u_i - u_j + c)/c
Rational triangular_factorized(std::span<const Rational> u, const Rational& c,
                               const BoundaryVector& e,
                               const BoundaryVector& s);

// (e2 n1 - e1 n2)(s2 w1 - s1 w2) / ((e.s)(n.w)); degeneracy error naming
// whichever pairing vanishes.
Rational beta_constant(const BoundaryVectors& vecs);

// Subset-sum expansion of the generalized-domain-wall value, m = |u|,
// n = |v|:
//
//   (n.s)^{n-m} (e.s)^m (n.w)^m / c^{mn}
//     * sum over K subset of {1..m} of
//         (-beta)^{|K|} prod_{i in K, k} (u_i - v_k)
//                       prod_{j not in K, k} (u_j - v_k + c)
//                       prod_{i in K, j not in K} (u_i - u_j + c)/(u_i - u_j)
//
// Requires m <= n, pairwise distinct u's, and (for m >= 1) beta defined.
Rational gdw_subset_sum(const ModelParams& params);

// m x m determinant form of the same value. Poles at u_j = v_i,
// u_j = u_k, and u_j - u_k + c = 0 are reported by name.
Rational gdw_determinant(const ModelParams& params);

// The fully expanded 1x1 value:
//   (e1w1n1s1 + e2w2n2s2)(u-v+c)/c + (e2w1n1s2 + e1w2n2s1)
//     + (e1w1n2s2 + e2w2n1s1)(u-v)/c
Rational z11_explicit(const Rational& u, const Rational& v, const Rational& c,
                      const BoundaryVectors& vecs);

// Value of the rectangle at the rapidity specialization u_i = v_{n-m+i}:
//   (n.s)^{n-m} (e.s)^m (n.w)^m * prod_{i=n-m+1..n} prod_{j=1..n} (v_i - v_j + c)/c
Rational gdw_specialized(std::span<const Rational> v, const Rational& c,
                         const BoundaryVectors& vecs, int m);

// (n.s)^n (n.w)^m * prod_{i=n+1..n+m} prod_{j=1..n} (v_i - v_j + c)/c
//                 * prod_{n+1 <= i < j <= n+m} (v_j - v_i + c)/c
// Note the reversed difference in the second product.
Rational trapezoid_factorized(std::span<const Rational> v_all, int n, int m,
                              const Rational& c, const BoundaryVectors& vecs);

}  // namespace svf
