#include "noname/forms/kmatrix.hpp"

#include <utility>

#include "noname/error.hpp"

namespace noname::forms {

KMatrix::KMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field_)) {}

KMatrix::KMatrix(Field field, std::vector<std::vector<FieldElement>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::usage, "ragged matrix rows");
    for (auto& e : row) {
      if (!field::same_field(e.field(), field_)) throw Error(ErrorKind::usage, "matrix entry from a different field");
      data_.push_back(std::move(e));
    }
  }
}

KMatrix KMatrix::identity(const Field& field, std::size_t n) {
  KMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

std::vector<FieldElement> KMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<FieldElement> KMatrix::column(std::size_t c) const {
  std::vector<FieldElement> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::usage, "matrix product dimension mismatch");
  KMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

FieldElement det_exact(const KMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::usage, "determinant of a non-square matrix");
  KMatrix m = input;
  const std::size_t n = m.rows();
  FieldElement det = FieldElement::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return FieldElement::zero(m.field());
    if (p != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const FieldElement inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

KMatrix invert_exact(const KMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::usage, "inverse of a non-square matrix");
  const std::size_t n = input.rows();
  KMatrix m = input;
  KMatrix inv = KMatrix::identity(input.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::singular_matrix, "matrix is singular");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(p, c), m(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    }
    const FieldElement scale = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  const KMatrix id = KMatrix::identity(input.field(), n);
  if (!(input * inv == id) || !(inv * input == id)) {
    throw Error(ErrorKind::internal_inconsistency, "computed inverse fails the product check");
  }
  return inv;
}

}  // namespace noname::forms
