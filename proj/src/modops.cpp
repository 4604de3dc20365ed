#include "germcalc/modops.hpp"

#include <algorithm>
#include <stdexcept>

#include "germcalc/errors.hpp"

namespace germcalc {

namespace {

// Calls visit(subset) for each k-subset of {0..n-1} in lexicographic order.
template <typename F>
void forEachSubset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Syzygies, intersections and quotients commute with localization, so they
// are computed over the polynomial ring under a global degree ordering, where
// plain reduction keeps degrees under control.
RingPtr globalCopy(const RingPtr& ring) { return globalOrderingCopy(ring); }

FreeModuleVector moveTo(const FreeModuleVector& v, const RingPtr& target) { return changeRing(v, target); }

std::vector<int> shiftMap(std::size_t n, std::size_t aux) {
  std::vector<int> map(n + aux, -1);
  for (std::size_t i = 0; i < n; ++i) map[aux + i] = static_cast<int>(i);
  return map;
}

}  // namespace

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::fromRows(const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix needs an explicit ring");
  PolyMatrix m(rows.front().front().ring(), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

PolyMatrix PolyMatrix::fromColumns(RingPtr ring, std::size_t rows, const std::vector<FreeModuleVector>& cols) {
  PolyMatrix m(std::move(ring), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw std::invalid_argument("column of wrong rank");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

FreeModuleVector PolyMatrix::column(std::size_t c) const {
  FreeModuleVector v(ring_, rows_);
  std::vector<Polynomial> comps;
  for (std::size_t r = 0; r < rows_; ++r) comps.push_back((*this)(r, c));
  return rows_ == 0 ? v : FreeModuleVector(std::move(comps));
}

std::vector<FreeModuleVector> PolyMatrix::columns() const {
  std::vector<FreeModuleVector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

FreeModuleVector PolyMatrix::operator*(const FreeModuleVector& v) const {
  if (v.rank() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).isZero() && !v[c].isZero()) out[r] += (*this)(r, c) * v[c];
  return rows_ == 0 ? FreeModuleVector(ring_, 0) : FreeModuleVector(std::move(out));
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  PolyMatrix m(ring_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
  return m;
}

PolyMatrix PolyMatrix::concat(const PolyMatrix& right) const {
  if (right.rows_ != rows_) throw std::invalid_argument("row count mismatch");
  PolyMatrix m(ring_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(rows[r], cols[c]);
  return m;
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial::constant(ring_, 1);
  if (rows_ == 1) return (*this)(0, 0);
  if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  std::vector<std::size_t> rest(rows_ - 1);
  for (std::size_t r = 1; r < rows_; ++r) rest[r - 1] = r;
  Polynomial det(ring_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(0, c).isZero()) continue;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != c) others.push_back(j);
    Polynomial term = (*this)(0, c) * submatrix(rest, others).determinant();
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

PolyMatrix jacobianMatrix(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw std::invalid_argument("jacobian of an empty list");
  const RingPtr& ring = fs.front().ring();
  PolyMatrix m(ring, fs.size(), ring->variableCount());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = fs[i].derivative(j);
  return m;
}

std::vector<Polynomial> allMinors(const PolyMatrix& m, std::size_t s) {
  if (s == 0 || s > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size " + std::to_string(s) + " out of range");
  std::vector<Polynomial> out;
  forEachSubset(m.rows(), s, [&](const std::vector<std::size_t>& rows) {
    forEachSubset(m.cols(), s, [&](const std::vector<std::size_t>& cols) {
      out.push_back(m.submatrix(rows, cols).determinant());
    });
  });
  return out;
}

Ideal maximalMinors(const PolyMatrix& m, std::size_t s) { return pruneGenerators(allMinors(m, s)); }

Ideal pruneGenerators(const Ideal& gens) {
  Ideal out;
  std::vector<Polynomial> seen;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    Polynomial key = g.monic();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(g);
  }
  return out;
}

std::vector<FreeModuleVector> syzygies(const PolyMatrix& m) {
  const std::size_t r = m.rows(), s = m.cols();
  const RingPtr& ring = m.ring();
  const RingPtr global = globalCopy(ring);
  std::vector<FreeModuleVector> lift;
  for (std::size_t j = 0; j < s; ++j)
    lift.push_back(moveTo(m.column(j), global).concat(FreeModuleVector::unit(global, s, j)));
  std::vector<FreeModuleVector> out;
  for (const auto& v : liftSyzygies(global, r, r + s, lift)) out.push_back(moveTo(v, ring));
  return out;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  Ideal out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Ideal product(const Ideal& a, const Ideal& b) {
  Ideal out;
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p * q);
  return pruneGenerators(out);
}

std::vector<FreeModuleVector> product(const Ideal& a, const std::vector<FreeModuleVector>& m) {
  std::vector<FreeModuleVector> out;
  for (const auto& p : a)
    for (const auto& v : m) {
      FreeModuleVector w = v * p;
      if (!w.isZero()) out.push_back(std::move(w));
    }
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const Ideal pa = pruneGenerators(a), pb = pruneGenerators(b);
  if (pa.empty() || pb.empty()) return {};
  const RingPtr& ring = pa.front().ring();
  const std::size_t n = ring->variableCount();
  // t is compared first, so basis elements whose leading term is free of t
  // lie entirely in the original variables.
  const RingPtr big = globalCopy(ring)->withAuxiliaryVariables({"t"});
  const std::vector<int> up = shiftMap(n, 1);
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial oneMinusT = Polynomial::constant(big, 1) - t;
  Ideal gens;
  for (const auto& p : pa) gens.push_back(t * p.remap(big, up));
  for (const auto& q : pb) gens.push_back(oneMinusT * q.remap(big, up));
  const StandardBasis sb = standardBasis(big, 1, asVectors(gens), Truncation::Off);
  std::vector<int> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = static_cast<int>(i + 1);
  Ideal out;
  for (const auto& g : sb.generators())
    if (g.leadMonomial()[0] == 0) out.push_back(g[0].remap(ring, down));
  return out;
}

Ideal quotientIdeal(const Ideal& a, const Ideal& b) {
  const Ideal pa = pruneGenerators(a), pb = pruneGenerators(b);
  if (pb.empty()) throw std::invalid_argument("quotient by the zero ideal");
  const RingPtr& ring = pb.front().ring();
  if (pa.empty()) return {};
  std::optional<Ideal> acc;
  for (const auto& g : pb) {
    // a : g is the first coordinate of the relations c*g + sum d_i a_i = 0
    PolyMatrix row(ring, 1, pa.size() + 1);
    row(0, 0) = g;
    for (std::size_t i = 0; i < pa.size(); ++i) row(0, i + 1) = pa[i];
    Ideal colon;
    for (const auto& v : syzygies(row)) colon.push_back(v[0]);
    colon = pruneGenerators(colon);
    acc = acc ? intersect(*acc, colon) : colon;
  }
  return pruneGenerators(*acc);
}

bool contains(const StandardBasis& big, const std::vector<FreeModuleVector>& small) {
  return std::all_of(small.begin(), small.end(), [&](const FreeModuleVector& v) { return isMember(v, big); });
}

bool contains(const StandardBasis& big, const Ideal& small) { return contains(big, asVectors(small)); }

Subquotient::Subquotient(RingPtr ring, std::size_t rank, std::vector<FreeModuleVector> numerator,
                         std::vector<FreeModuleVector> denominator)
    : ring_(std::move(ring)), rank_(rank), num_(std::move(numerator)), den_(std::move(denominator)) {
  for (const auto* list : {&num_, &den_})
    for (const auto& v : *list)
      if (v.rank() != rank_) throw std::invalid_argument("subquotient generator of wrong rank");
  if (!den_.empty() && !contains(standardBasis(ring_, rank_, num_), den_))
    throw std::invalid_argument("subquotient denominator is not contained in the numerator");
}

Subquotient::Subquotient(const Ideal& numerator, const Ideal& denominator)
    : Subquotient(numerator.empty() ? throw std::invalid_argument("empty numerator") : numerator.front().ring(), 1,
                  asVectors(numerator), asVectors(denominator)) {}

ExtendedNat subquotientColength(const Subquotient& sq) {
  const std::size_t s = sq.numerator().size();
  if (s == 0) return 0;
  std::vector<FreeModuleVector> cols = sq.numerator();
  cols.insert(cols.end(), sq.denominator().begin(), sq.denominator().end());
  const PolyMatrix m = PolyMatrix::fromColumns(sq.ring(), sq.ambientRank(), cols);
  std::vector<FreeModuleVector> relations;
  for (const auto& v : syzygies(m)) {
    FreeModuleVector head = v.slice(0, s);
    if (!head.isZero()) relations.push_back(std::move(head));
  }
  return colength(standardBasis(sq.ring(), s, relations));
}

}  // namespace germcalc
