#pragma once

#include <cstddef>
#include <vector>

#include "germcalc/scalar.hpp"

namespace germcalc {

/// Row-major dense matrix over a Field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix scaled(const Scalar& s) const;
  bool isZero() const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Exact rank: fraction-free (Bareiss) elimination on integer-scaled rows
/// over Q, ordinary elimination over F_p.
std::size_t rank(const DenseMatrix& m);

}  // namespace germcalc
