#pragma once

#include <vector>

#include "noname/field/field.hpp"

namespace noname::forms {

using field::Field;
using field::FieldElement;

/// Dense row-major matrix over K.
class KMatrix {
 public:
  KMatrix(Field field, std::size_t rows, std::size_t cols);
  KMatrix(Field field, std::vector<std::vector<FieldElement>> rows);

  static KMatrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<FieldElement> row(std::size_t r) const;
  std::vector<FieldElement> column(std::size_t c) const;

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Gaussian elimination in K: first nonzero pivot, sign flip per row swap.
FieldElement det_exact(const KMatrix& m);

/// Gauss-Jordan inverse, checked against the identity on both sides.
/// Throws Error(singular_matrix).
KMatrix invert_exact(const KMatrix& m);

}  // namespace noname::forms
