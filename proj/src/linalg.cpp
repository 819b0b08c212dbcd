#include "svf/linalg.hpp"

#include <utility>

#include "svf/errors.hpp"

namespace svf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in multiply");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Rational(1);  // empty determinant convention
  Matrix w(*this);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j)
        std::swap(w.at(col, j), w.at(pivot, j));
      negate = !negate;
    }
    const Rational inv_p = w.at(col, col).inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (w.at(row, col).is_zero()) continue;
      const Rational f = w.at(row, col) * inv_p;
      for (std::size_t j = col; j < n; ++j)
        w.at(row, j) -= f * w.at(col, j);
    }
  }
  Rational det(1);
  for (std::size_t i = 0; i < n; ++i) det *= w.at(i, i);
  return negate ? -det : det;
}

std::vector<Rational> interpolate_polynomial(
    std::span<const Rational> nodes, std::span<const Rational> values) {
  const std::size_t k = nodes.size();
  if (k == 0 || values.size() != k)
    throw InputError("interpolation needs matching nonempty node/value lists");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (nodes[i] == nodes[j])
        throw InputError("repeated interpolation node " + nodes[i].str());

  // Newton divided differences, then expansion of the nested form.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

  // coeffs(x) = dd[k-1]; for i = k-2..0: coeffs = coeffs*(x - x_i) + dd[i]
  std::vector<Rational> coeffs(k);
  coeffs[0] = dd[k - 1];
  std::size_t degree = 0;
  for (std::size_t step = 1; step < k; ++step) {
    const Rational& x_i = nodes[k - 1 - step];
    ++degree;
    for (std::size_t d = degree; d > 0; --d)
      coeffs[d] = coeffs[d - 1] - x_i * coeffs[d];
    coeffs[0] = dd[k - 1 - step] - x_i * coeffs[0];
  }
  return coeffs;
}

}  // namespace svf
