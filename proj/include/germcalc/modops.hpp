#pragma once

#include <cstddef>
#include <vector>

#include "germcalc/extended_nat.hpp"
#include "germcalc/module_vector.hpp"
#include "germcalc/standard_basis.hpp"

namespace germcalc {

using Ideal = std::vector<Polynomial>;

/// Rectangular matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix fromRows(const std::vector<std::vector<Polynomial>>& rows);
  /// The vectors become the columns (all of rank `rows`).
  static PolyMatrix fromColumns(RingPtr ring, std::size_t rows, const std::vector<FreeModuleVector>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FreeModuleVector column(std::size_t c) const;
  std::vector<FreeModuleVector> columns() const;
  std::vector<Polynomial> row(std::size_t r) const;
  FreeModuleVector operator*(const FreeModuleVector& v) const;
  /// Rows of `below` appended (same column count).
  PolyMatrix stacked(const PolyMatrix& below) const;
  /// Columns of `right` appended (same row count).
  PolyMatrix concat(const PolyMatrix& right) const;
  /// Determinant by expansion along the first row. Precondition: square.
  Polynomial determinant() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

/// Entry (i, j) is d fs[i] / d x_j. Precondition: fs nonempty.
PolyMatrix jacobianMatrix(const std::vector<Polynomial>& fs);

/// All s x s minors, row and column subsets in lexicographic order; zero
/// minors dropped and repeats removed.
Ideal maximalMinors(const PolyMatrix& m, std::size_t s);

/// Same, keeping zeros and order (one entry per pair of subsets).
std::vector<Polynomial> allMinors(const PolyMatrix& m, std::size_t s);

/// Generators of {v in R^cols : m * v = 0}.
std::vector<FreeModuleVector> syzygies(const PolyMatrix& m);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// Submodule sum / ideal-times-module.
std::vector<FreeModuleVector> product(const Ideal& a, const std::vector<FreeModuleVector>& m);

Ideal intersect(const Ideal& a, const Ideal& b);
/// a : b.
Ideal quotientIdeal(const Ideal& a, const Ideal& b);

/// Drops zeros and generators equal to an earlier one up to a scalar.
Ideal pruneGenerators(const Ideal& gens);

bool contains(const StandardBasis& big, const std::vector<FreeModuleVector>& small);
bool contains(const StandardBasis& big, const Ideal& small);

/// N / D for submodules D of N of a free module of rank r.
class Subquotient {
 public:
  /// Throws std::invalid_argument unless D is contained in N.
  Subquotient(RingPtr ring, std::size_t rank, std::vector<FreeModuleVector> numerator,
              std::vector<FreeModuleVector> denominator);
  Subquotient(const Ideal& numerator, const Ideal& denominator);

  const RingPtr& ring() const { return ring_; }
  std::size_t ambientRank() const { return rank_; }
  const std::vector<FreeModuleVector>& numerator() const { return num_; }
  const std::vector<FreeModuleVector>& denominator() const { return den_; }

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<FreeModuleVector> num_, den_;
};

/// dim N / D: colength in R^s of the relations {a : sum a_i n_i in D}.
ExtendedNat subquotientColength(const Subquotient& s);

}  // namespace germcalc
