#pragma once

#include "svf/linalg.hpp"
#include "svf/model.hpp"
#include "svf/rational.hpp"

namespace svf {

// Rational R-matrix on a crossing of two lines with rapidities u (first
// factor) and v (second factor):
//
//   a = (u-v+c)/c   on |11><11| and |22><22|
//   b = (u-v)/c     on |12><12| and |21><21|
//   1               on |12><21| and |21><12|
//
// and zero on the remaining ten entries. Basis convention used everywhere:
// |1> <-> bit 0, |2> <-> bit 1, two-site index = 2*(first bit) + (second
// bit), so the ordered basis is |11>, |12>, |21>, |22>.
class RMatrix {
 public:
  RMatrix(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Rational swap_weight() const { return Rational(1); }

  Matrix to_matrix() const;

 private:
  Rational a_;
  Rational b_;
};

// InputError when c = 0. At u = v this is the permutation operator.
RMatrix r_matrix(const Rational& u, const Rational& v, const Rational& c);

// R embedded into `num_sites` two-state sites, acting on the ordered pair
// (site_j, site_k), identity elsewhere. Site 1 carries the most
// significant bit of the basis index.
Matrix embed_pair(const RMatrix& r, int num_sites, int site_j, int site_k);

// R_ij(ui-uj) R_ik(ui-uk) R_jk(uj-uk) == R_jk R_ik R_ij as exact 8x8
// matrices on three sites.
bool check_yang_baxter(const Rational& ui, const Rational& uj,
                       const Rational& uk, const Rational& c);

// R_jk(x) R_kj(-x) == ((x+c)/c)((-x+c)/c) * id on the two-site space,
// x = uj - uk.
bool check_unitarity(const Rational& uj, const Rational& uk,
                     const Rational& c);

}  // namespace svf
