#pragma once

#include <cstddef>
#include <vector>

#include "noname/exact/scalar.hpp"

namespace noname::exact {

/// Dense row-major matrix over a BaseField.
class ScalarMatrix {
 public:
  ScalarMatrix(BaseField base, std::size_t rows, std::size_t cols)
      : base_(base), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(base)) {}
  ScalarMatrix(BaseField base, const std::vector<std::vector<Scalar>>& rows);

  const BaseField& base() const { return base_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  BaseField base_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m);
std::size_t rank(ScalarMatrix m);
/// Determinant of a square matrix (Gaussian elimination, first nonzero pivot).
Scalar determinant(ScalarMatrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m);

}  // namespace noname::exact
