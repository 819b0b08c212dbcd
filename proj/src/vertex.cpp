#include "svf/vertex.hpp"

#include "svf/errors.hpp"

namespace svf {

Matrix RMatrix::to_matrix() const {
  Matrix m(4, 4);
  m.at(0, 0) = a_;
  m.at(1, 1) = b_;
  m.at(2, 2) = b_;
  m.at(3, 3) = a_;
  m.at(1, 2) = Rational(1);
  m.at(2, 1) = Rational(1);
  return m;
}

RMatrix r_matrix(const Rational& u, const Rational& v, const Rational& c) {
  if (c.is_zero())
    throw InputError("crossing constant c must be nonzero");
  const Rational x = u - v;
  return RMatrix((x + c) / c, x / c);
}

Matrix embed_pair(const RMatrix& r, int num_sites, int site_j, int site_k) {
  if (site_j < 1 || site_k < 1 || site_j > num_sites || site_k > num_sites ||
      site_j == site_k)
    throw InputError("embed_pair: invalid site pair");
  const Matrix r4 = r.to_matrix();
  const std::size_t dim = std::size_t{1} << num_sites;
  const int pj = num_sites - site_j;
  const int pk = num_sites - site_k;
  Matrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t cj = (col >> pj) & 1;
    const std::size_t ck = (col >> pk) & 1;
    const std::size_t rest =
        col & ~((std::size_t{1} << pj) | (std::size_t{1} << pk));
    for (std::size_t rj = 0; rj < 2; ++rj) {
      for (std::size_t rk = 0; rk < 2; ++rk) {
        const Rational& w = r4.at(2 * rj + rk, 2 * cj + ck);
        if (w.is_zero()) continue;
        const std::size_t row = rest | (rj << pj) | (rk << pk);
        m.at(row, col) = w;
      }
    }
  }
  return m;
}

bool check_yang_baxter(const Rational& ui, const Rational& uj,
                       const Rational& uk, const Rational& c) {
  const Matrix r_ij = embed_pair(r_matrix(ui, uj, c), 3, 1, 2);
  const Matrix r_ik = embed_pair(r_matrix(ui, uk, c), 3, 1, 3);
  const Matrix r_jk = embed_pair(r_matrix(uj, uk, c), 3, 2, 3);
  return r_ij * (r_ik * r_jk) == r_jk * (r_ik * r_ij);
}

bool check_unitarity(const Rational& uj, const Rational& uk,
                     const Rational& c) {
  // Both factors act on the same ordered (j, k) pair; the matrix of
  // R_kj(-x) in that basis coincides with the 4x4 of R(-x) because the
  // six nonzero entries are symmetric under exchanging the two factors.
  const Matrix lhs =
      r_matrix(uj, uk, c).to_matrix() * r_matrix(uk, uj, c).to_matrix();
  const Rational scalar =
      ((uj - uk + c) / c) * ((uk - uj + c) / c);
  Matrix expected(4, 4);
  for (std::size_t i = 0; i < 4; ++i) expected.at(i, i) = scalar;
  return lhs == expected;
}

}  // namespace svf
