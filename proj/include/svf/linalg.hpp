#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "svf/rational.hpp"

namespace svf {

// Dense matrix of rationals. Sized for desk-scale exact work (the largest
// instances here are 8x8 relation checks and small determinants).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  // Exact Gaussian elimination over Q; row swaps on zero pivots.
  Rational determinant() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Monomial coefficients (ascending degree) of the unique polynomial of
// degree < nodes.size() through (nodes[i], values[i]). Newton divided
// differences, exact. InputError on repeated nodes.
std::vector<Rational> interpolate_polynomial(std::span<const Rational> nodes,
                                             std::span<const Rational> values);

}  // namespace svf
