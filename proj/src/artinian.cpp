#include "germcalc/artinian.hpp"

#include <bit>
#include <stdexcept>

#include "germcalc/errors.hpp"

namespace germcalc {

ArtinianAlgebra::ArtinianAlgebra(const Ideal& J)
    : ring_(J.empty() ? throw std::invalid_argument("empty ideal has infinite colength") : J.front().ring()),
      sb_(standardBasis(ring_, J)) {
  if (!colength(sb_).isFinite()) throw std::invalid_argument("ideal has infinite colength");
  basis_ = standardMonomials(sb_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].exponents(), i);
  for (std::size_t v = 0; v < ring_->variableCount(); ++v) tables_.push_back(multiplication(Polynomial::variable(ring_, v)));
  for (std::size_t a = 0; a < tables_.size(); ++a)
    for (std::size_t b = a + 1; b < tables_.size(); ++b)
      if (!(tables_[a] * tables_[b] == tables_[b] * tables_[a]))
        throw InternalError("multiplication tables do not commute");
}

std::vector<Scalar> ArtinianAlgebra::coordinates(const Polynomial& p) const {
  std::vector<Scalar> out(basis_.size(), Scalar::zero(ring_->field()));
  if (basis_.empty()) return out;
  const FreeModuleVector r = sb_.reducedNormalForm(FreeModuleVector::fromPolynomial(p));
  for (const auto& t : r[0].terms()) {
    auto it = index_.find(t.mono.exponents());
    if (it == index_.end()) throw InternalError("reduced normal form left a non-standard monomial");
    out[it->second] = t.coef;
  }
  return out;
}

DenseMatrix ArtinianAlgebra::multiplication(const Polynomial& p) const {
  DenseMatrix m(ring_->field(), basis_.size(), basis_.size());
  const Scalar one = Scalar::one(ring_->field());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const auto col = coordinates(p.mulTerm(basis_[j], one));
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<std::uint64_t> koszulHomology(const std::vector<DenseMatrix>& ops) {
  const std::size_t k = ops.size();
  if (k == 0) throw std::invalid_argument("Koszul complex needs at least one operator");
  const std::size_t d = ops.front().rows();
  const Field field = ops.front().field();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!(ops[a] * ops[b] == ops[b] * ops[a])) throw InternalError("Koszul operators do not commute");

  // Degree-i chains are indexed by i-subsets of the operators (bitmasks).
  std::vector<std::vector<unsigned>> subsets(k + 1);
  for (unsigned mask = 0; mask < (1u << k); ++mask) subsets[std::popcount(mask)].push_back(mask);
  auto position = [&](std::size_t degree, unsigned mask) {
    const auto& list = subsets[degree];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), mask) - list.begin());
  };

  // rank of d_i : C_i -> C_{i-1}, e_S (x) v -> sum_j (-1)^pos e_{S - j} (x) A_j v
  std::vector<std::size_t> ranks(k + 2, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    DenseMatrix dm(field, subsets[i - 1].size() * d, subsets[i].size() * d);
    for (std::size_t s = 0; s < subsets[i].size(); ++s) {
      const unsigned mask = subsets[i][s];
      int sign = 1;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(mask & (1u << j))) continue;
        const std::size_t target = position(i - 1, mask & ~(1u << j));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            if (!ops[j](r, c).isZero())
              dm(target * d + r, s * d + c) = sign > 0 ? ops[j](r, c) : -ops[j](r, c);
        sign = -sign;
      }
    }
    ranks[i] = rank(dm);
  }
  std::vector<std::uint64_t> h(k + 1);
  for (std::size_t i = 0; i <= k; ++i) h[i] = subsets[i].size() * d - ranks[i] - ranks[i + 1];
  return h;
}

std::vector<std::uint64_t> koszulTor(const Ideal& I, const Ideal& J) {
  if (I.empty()) throw std::invalid_argument("Koszul complex needs at least one generator");
  const ArtinianAlgebra R(J);
  if (R.dimension() == 0) return std::vector<std::uint64_t>(I.size() + 1, 0);
  std::vector<DenseMatrix> ops;
  for (const auto& g : I) ops.push_back(R.multiplication(g));
  return koszulHomology(ops);
}

}  // namespace germcalc
